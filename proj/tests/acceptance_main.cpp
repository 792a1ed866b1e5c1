// Acceptance suite: runs every audit criterion at its stated size and prints
// one pass/fail line per criterion. Exits nonzero if any criterion fails or
// overruns its time budget.

#include <cstdio>

#include "gds/audit.hpp"

int main() {
  gds::audit::Config cfg;  // sweep n=3, 1000 seeded samples at n=4
  auto results = gds::audit::run_all(cfg);

  std::size_t passed = 0;
  for (const auto& r : results) {
    bool ok = r.passed;
    // Stated runtime budgets: the orbit sweep under 10s, the witness under 5s.
    if (r.number == 1 && r.seconds >= 10.0) ok = false;
    if (r.number == 3 && r.seconds >= 5.0) ok = false;
    passed += ok;
    std::printf("criterion %d [%s] %-24s (%.2fs) %s\n", r.number, ok ? "PASS" : "FAIL",
                r.name.c_str(), r.seconds, r.detail.c_str());
  }
  bool all_ok = passed == results.size();
  std::printf("%s: %zu/%zu criteria passed\n", all_ok ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
              passed, results.size());
  return all_ok ? 0 : 1;
}
