// Checks a generalized Meixner generating function coefficientwise, then
// shows what a perturbed right side looks like to the verifier.
#include <iostream>

#include "hyperconnect.hpp"

namespace hc = hyperconnect;
using Q = hc::Rational;

int main() {
  hc::IdentityCase c;
  c.id = "meixner_gauss_alpha_c";
  c.params = {{"x", Q(4)}, {"alpha", Q::parse("3/2")}, {"beta", Q::parse("7/3")},
              {"c", Q::parse("2/5")}, {"d", Q::parse("3/7")}, {"gamma", Q::parse("5/4")}};
  c.order = 10;

  auto report = hc::verify(c);
  std::cout << hc::io::to_json(report).dump(2) << "\n";

  auto [lhs, rhs] = hc::build_sides<Q>(c);
  std::cout << "t^3 coefficient: " << lhs[3] << "\n";
  rhs[7] += Q(1, 1000);
  auto cmp = hc::compare(lhs, rhs);
  std::cout << "perturbed: equal=" << cmp.equal << " first mismatch at t^" << cmp.first_mismatch.value_or(-1) << "\n";
}
