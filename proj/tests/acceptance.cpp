// Acceptance suite: runs the ten pinned criteria, one pass/fail line each.

#include <cstdio>

#include "cck/suites.hpp"

int main() {
  using namespace cck;
  const double limits[11] = {0, 0.001, 30.0, 5.0, 5.0, 60.0, 5.0, 30.0, 60.0, 5.0, 1.0};
  SuiteConfig cfg;
  cfg.seed = 1;

  // steady-state timing for the sub-millisecond criterion
  (void)run_acceptance_criterion(1, cfg);

  bool all_ok = true;
  for (int k = 1; k <= 10; ++k) {
    SuiteReport rep;
    bool threw = false;
    std::string what;
    try {
      rep = run_acceptance_criterion(k, cfg);
    } catch (const std::exception& e) {
      threw = true;
      what = e.what();
    }
    bool pass = !threw && rep.ok() && rep.wall_seconds < limits[k];
    all_ok = all_ok && pass;
    std::printf("criterion %2d: %s  (%zu checks, %.3fs, limit %gs)  %s\n", k,
                pass ? "PASS" : "FAIL", rep.cases, rep.wall_seconds, limits[k],
                acceptance_criterion_label(k).c_str());
    if (threw) std::printf("              exception: %s\n", what.c_str());
    if (!threw && !rep.ok())
      for (const SuiteFailure& f : rep.failures)
        std::printf("              %s  %s\n", f.check.c_str(), f.witness.c_str());
    if (!threw && rep.ok() && rep.wall_seconds >= limits[k])
      std::printf("              over time budget\n");
  }
  std::printf("acceptance: %s\n", all_ok ? "ALL CRITERIA PASS" : "FAILURES PRESENT");
  return all_ok ? 0 : 1;
}
