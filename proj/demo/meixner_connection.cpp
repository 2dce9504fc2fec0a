// Connection coefficients M_n(x;alpha,c) -> M_k(x;beta,c), three ways.
#include <iostream>

#include "hyperconnect.hpp"

namespace hc = hyperconnect;
using Q = hc::Rational;

int main() {
  const long n_max = 5;
  hc::ParamSet<Q> ps{{"alpha", Q::parse("3/2")}, {"beta", Q::parse("7/3")}, {"c", Q::parse("2/5")}};
  auto closed = hc::meixner_connection(hc::MeixnerRelation::alpha_to_beta, ps, n_max);

  const auto& d = hc::family("meixner");
  hc::ParamSet<Q> from{{"alpha", ps.get("alpha")}, {"c", ps.get("c")}};
  hc::ParamSet<Q> to{{"alpha", ps.get("beta")}, {"c", ps.get("c")}};
  auto collected = hc::power_collect(d, from, to, n_max);
  auto solved = hc::connect_linear_solve(d, from, to, n_max);

  std::cout << hc::io::to_csv(closed);
  std::cout << "power collection agrees: " << (collected.table == closed.table ? "yes" : "no") << "\n";
  std::cout << "linear solve agrees:     " << (solved.table == closed.table ? "yes" : "no") << "\n";

  // reconstruct M_5 at x = 5/2 from the table
  const Q x = Q::parse("5/2");
  Q sum(0);
  for (long k = 0; k <= n_max; ++k) sum += closed.table[n_max][k] * hc::meixner(k, x, ps.get("beta"), ps.get("c"));
  std::cout << "M_5(5/2) = " << hc::meixner(n_max, x, ps.get("alpha"), ps.get("c")) << ", rebuilt " << sum << "\n";
}
