// Independent numerical oracle for the maximal test value: multi-start
// compass search over pairs of right-handed frames, each parametrized by a
// unit quaternion.

#pragma once

#include <cstdint>

#include "qbell/observables.hpp"
#include "qbell/states.hpp"

namespace qbell {

struct OptConfig {
  int restarts = 64;
  int max_iters = 500;
  double step_init = 0.3;  // radians
  double tol = 1e-10;      // terminal step size
  std::uint64_t seed = 0;
};

struct OptResult {
  TestSetting best_setting;
  double best_value = 0;      // equals bell_value(rho, best_setting)
  long iterations_used = 0;   // summed over restarts
  int restarts_converged = 0; // restarts that reached step < tol
};

/// Maximizes the 3-setting test value over all same-orientation settings.
/// Deterministic given (rho, cfg); prepending restarts never lowers the
/// result for a fixed seed.
OptResult maximize_violation(const DensityMatrix& rho, const OptConfig& cfg);

}  // namespace qbell
