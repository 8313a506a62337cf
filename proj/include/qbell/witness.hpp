// Inequality evaluators and the theorem machinery: the 3-setting test value,
// the commuting simple test, the CHSH baseline, the partial-transpose minimal
// eigenvalue, local time reversal, the pure-state expansion identity, the
// indeterminacy-relation check for opposite orientations, and the
// optimal-settings construction.

#pragma once

#include "qbell/observables.hpp"
#include "qbell/states.hpp"

namespace qbell {

/// A state counts as violating when s_value > 1 + kViolationTol.
inline constexpr double kViolationTol = 1e-9;

/// Evaluators reject a setting of the wrong orientation in strict mode;
/// permissive mode exists to demonstrate that opposite orientations never
/// violate.
enum class OrientationPolicy { strict, permissive };

struct WitnessReport {
  double s_value = 0;
  bool violated = false;
  double lambda_min = 0;      // smallest eigenvalue of rho^{T_B}; >= -1/2
  double predicted_max = 0;   // 1 - 4 lambda_min
  TestSetting setting_used;
};

struct RobertsonReport {
  double det_sigma = 0;
  double det_gamma = 0;
  double eq3_lhs = 0;  // <X1>^2 + <X2>^2
  double eq3_rhs = 0;  // <1 + A3 B3>^2
  bool sigma_dominates = false;  // det Sigma >= det Gamma - 1e-9
  bool eq3_holds = false;        // eq3_lhs <= eq3_rhs + 1e-9
};

/// sqrt(x1^2 + x2^2) - x3corr from exact correlators. Requires a
/// same-orientation setting in strict mode; <= 1 iff separable when
/// maximized over settings.
double bell_value(const DensityMatrix& rho, const TestSetting& s,
                  OrientationPolicy policy = OrientationPolicy::strict);

/// |<A1B1 + A2B2 + A3B3>|; <= 1 is necessary for separability.
double simple_value(const DensityMatrix& rho, const TestSetting& s,
                    OrientationPolicy policy = OrientationPolicy::strict);

/// CHSH combination <A1B1 + A1B2 + A2B1 - A2B2> for vectors of norm <= 1;
/// <= 2 is necessary for separability.
double chsh_value(const DensityMatrix& rho, const Vec3& a1, const Vec3& a2, const Vec3& b1,
                  const Vec3& b2);

/// Smallest eigenvalue of rho^{T_B}; negative exactly for entangled states.
double ppt_lambda_min(const DensityMatrix& rho);

/// (1 (x) tau_2) rho^{T_B} (1 (x) tau_2): Hermitian, unit trace, same
/// spectrum as rho^{T_B}.
CMat local_time_reversal(const DensityMatrix& rho);

/// Max-norm residual of the pure-state expansion identity
///   4|phi><phi| - 1 = sqrt(1-C^2)(A3 (x) 1 - 1 (x) B3)
///                     - C (A1 (x) B1 + A2 (x) B2) - A3 (x) B3
/// with frames taken from the Schmidt factors of phi. Near zero for every
/// normalized state.
double lemma_residual(const PureState& phi);

/// Builds the same-orientation setting from the Schmidt factors of the
/// minimal eigenvector of local_time_reversal(rho) and evaluates the test
/// there. For entangled rho the attained value equals 1 - 4 lambda_min.
WitnessReport optimal_setting(const DensityMatrix& rho);

/// Heisenberg-Robertson check for opposite-orientation settings: builds
/// X1, X2, X3 = 1 + A3B3, the covariance matrix Sigma and the commutator
/// matrix Gamma, and reports det Sigma >= det Gamma together with
/// <X1>^2 + <X2>^2 <= <X3>^2. Holds for every state.
RobertsonReport robertson_check(const DensityMatrix& rho, const TestSetting& s);

}  // namespace qbell
