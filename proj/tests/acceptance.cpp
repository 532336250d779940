// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.
#include <cstdio>

#include "mfib/verify.hpp"

int main() {
  const auto results = mfib::verify::run_acceptance();
  int failed = 0;
  double total = 0;
  for (const auto& r : results) {
    std::printf("[%s] %2d %-40s (%.2fs) %s\n", r.pass ? "PASS" : "FAIL", r.id, r.title.c_str(), r.seconds,
                r.detail.c_str());
    failed += !r.pass;
    total += r.seconds;
  }
  std::printf("%zu criteria, %d failed, %.2fs total\n", results.size(), failed, total);
  return failed == 0 ? 0 : 1;
}
