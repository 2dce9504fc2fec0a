// One line per acceptance criterion. Exit status is 0 only when every
// criterion passes, or when the only failures are the ones named with
// --expect-fail (those lines still print FAIL).
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hyperconnect/identities.hpp"

namespace hc = hyperconnect;

int main(int argc, char** argv) {
  std::set<int> expected_failures;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--expect-fail") == 0 && i + 1 < argc) {
      expected_failures.insert(std::atoi(argv[++i]));
    } else {
      std::fprintf(stderr, "usage: %s [--expect-fail N]...\n", argv[0]);
      return 2;
    }
  }

  // runtime ceilings in seconds; criteria without one are unbounded
  const std::map<int, double> limits{{1, 5.0}, {2, 1.0}, {4, 30.0}, {7, 20.0}};
  const char* titles[] = {"",
                          "connection exactness",
                          "power collection equals closed form",
                          "oracle agreement",
                          "generalized generating functions",
                          "specialization chains",
                          "invariance",
                          "orthogonality",
                          "bound predicates",
                          "catalog completeness"};

  std::map<int, std::vector<hc::IdentityCase>> groups;
  for (auto& a : hc::acceptance_suite()) groups[a.criterion].push_back(std::move(a.c));

  bool unexpected = false;
  for (int k = 1; k <= 9; ++k) {
    const auto t0 = std::chrono::steady_clock::now();
    auto reports = hc::batch_verify(groups[k], 1);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    auto s = hc::summarize(reports);
    bool ok = s.total > 0 && s.all_passed();
    std::string why;
    for (const auto& r : reports)
      if (r.status != hc::Status::pass) {
        why += " [" + r.input.id + ": " + hc::to_string(r.status) + (r.message.empty() ? "" : " " + r.message) + "]";
      }
    if (auto it = limits.find(k); it != limits.end() && secs >= it->second) {
      ok = false;
      why += " [too slow]";
    }
    std::printf("criterion %d: %s (%s) %ld/%ld cases, %.3fs%s\n", k, ok ? "PASS" : "FAIL", titles[k], s.passed, s.total,
                secs, why.c_str());
    if (ok == expected_failures.contains(k)) unexpected = true;
  }
  return unexpected ? 1 : 0;
}
