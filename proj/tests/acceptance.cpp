// Acceptance suite: runs every verification criterion at its full trial count
// with a pinned seed and prints one pass/fail line per criterion.

#include <cstdio>

#include "gk1/verify.hpp"

int main() {
  gk1::verify::Options opt;  // trials < 0: built-in per-criterion counts
  opt.seed = 0x51ab5eedULL;

  std::vector<gk1::verify::SuiteResult> results = gk1::verify::run_all(opt);
  int passed = 0;
  for (const gk1::verify::SuiteResult& r : results) {
    std::printf("%s criterion %2d %-16s", r.passed() ? "PASS" : "FAIL", r.criterion, r.name.c_str());
    if (!r.exhaustive.empty()) std::printf(" exhaustive[%s]", r.exhaustive.c_str());
    std::printf(" trials=%lld", r.random_trials);
    if (!r.passed()) std::printf(" failures=%lld", r.total_failures);
    std::printf(" (%.2fs)\n", r.seconds);
    for (const gk1::verify::Failure& f : r.failures)
      std::printf("     seed=%llu inputs: %s: %s\n", static_cast<unsigned long long>(f.seed),
                  f.inputs.c_str(), f.message.c_str());
    passed += r.passed() ? 1 : 0;
  }
  std::printf("acceptance: %d/%zu criteria passed\n", passed, results.size());
  return passed == static_cast<int>(results.size()) ? 0 : 1;
}
