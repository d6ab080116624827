// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria pin their own tolerances and sample counts; the seed and
// default tolerance below are the pinned defaults.
#include <chrono>
#include <cstdio>

#include "qf/catalog.hpp"

int main() {
  auto start = std::chrono::steady_clock::now();
  qf::RunConfig config;  // seed 0xC0FFEE, tol 1e-9
  auto results = qf::run_acceptance(config);
  bool all = true;
  for (const auto& r : results) {
    std::printf("%s  %02d %-34s %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.details.c_str());
    all = all && r.pass;
  }
  double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (all) {
    std::printf("acceptance: %zu/%zu criteria passed in %.2fs\n", results.size(), results.size(),
                elapsed);
    return 0;
  }
  std::printf("acceptance: FAILED after %.2fs\n", elapsed);
  return 1;
}
