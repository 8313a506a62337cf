// Complementary-observable triads, orientation bookkeeping, and exact
// correlator evaluation for a test setting.

#pragma once

#include <array>
#include <optional>

#include "qbell/linalg.hpp"
#include "qbell/states.hpp"

namespace qbell {

using Vec3 = std::array<double, 3>;

double dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
double norm(const Vec3& a);

/// a . sigma for any |a| <= 1 (sub-unit vectors are allowed by the CHSH
/// evaluator).
CMat spin_obs(const Vec3& a);

struct Quat {
  double w = 1, x = 0, y = 0, z = 0;
};

Quat quat_mul(const Quat& a, const Quat& b);
Quat quat_normalize(const Quat& q);
/// Rotation about coordinate axis 0/1/2 by `angle`.
Quat quat_axis_angle(int axis, double angle);

/// Orthonormal frame {a1, a2, a3} in R^3. Orientation mu = det[a1 a2 a3] is
/// +1 (right-handed, same as the Pauli frame) or -1.
struct Triad {
  Vec3 a1, a2, a3;

  const Vec3& axis(int i) const;  // i = 1..3
};

/// Validates orthonormality within `tol` (default 1e-9) and a determinant
/// within 1e-6 of +-1.
Triad make_triad(const Vec3& a1, const Vec3& a2, const Vec3& a3, double tol = 1e-9);

/// Sign of det[a1 a2 a3]; equals the operator value -i A1 A2 A3.
int orientation(const Triad& t);

/// Columns of the rotation matrix of q; orientation +1 by construction.
Triad triad_from_rotation(const Quat& q);

/// Rows r_i with U sigma_i U^dag = r_i . sigma, for a 2x2 unitary U.
/// Unitary conjugation induces a proper rotation, so mu = +1.
Triad triad_of_conjugation(const CMat& u);

Triad standard_triad();  // (e1, e2, e3)
/// Same triad with axis i (1..3) negated; flips the orientation.
Triad negate_axis(const Triad& t, int i);

/// Re-orthonormalizes nearly-orthonormal rows by a stabilized Gram-Schmidt
/// pass; accepts drift up to 1e-6, rejects anything worse.
Triad orthonormalized_triad(const Vec3& a1, const Vec3& a2, const Vec3& a3);

/// The paper's pair {A_i, B_i}: one triad per side.
struct TestSetting {
  Triad A, B;
  bool same_orientation = true;  // mu_A * mu_B == +1
};

TestSetting make_setting(const Triad& a, const Triad& b);
TestSetting aligned_setting();     // a_i = b_i = e_i
TestSetting flipped_b3_setting();  // aligned with b3 -> -b3 (opposite orientation)

/// The three averages entering the inequality. Standard errors are only
/// populated by the finite-shot simulator.
struct TestStatistics {
  double x1 = 0;      // <A1 B1 + A2 B2>
  double x2 = 0;      // <A3 + B3>
  double x3corr = 0;  // <A3 B3>
  std::optional<double> x1_se, x2_se, x3corr_se;
};

/// Exact trace values of the three averages. Imaginary parts (round-off
/// only, checked < 1e-9) are discarded.
TestStatistics correlators(const DensityMatrix& rho, const TestSetting& s);

/// Pauli expansion of a state: marginals and the 3x3 correlation tensor.
/// <(a.sigma) (x) (b.tau)> = a^T corr b, <(a.sigma) (x) 1> = a . a_marg.
struct PauliMoments {
  std::array<double, 3> a_marg{};
  std::array<double, 3> b_marg{};
  std::array<std::array<double, 3>, 3> corr{};
};

PauliMoments pauli_moments(const DensityMatrix& rho);

}  // namespace qbell
