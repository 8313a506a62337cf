// Shared generators and helpers for the test suites.

#pragma once

#include "qbell/linalg.hpp"
#include "qbell/observables.hpp"
#include "qbell/rng.hpp"
#include "qbell/states.hpp"
#include "qbell/witness.hpp"

namespace qbell::testing {

inline CMat random_hermitian4(Rng& rng) {
  CMat m(4, 4);
  for (int r = 0; r < 4; ++r) {
    m(r, r) = rng.gaussian();
    for (int c = r + 1; c < 4; ++c) {
      m(r, c) = cplx(rng.gaussian(), rng.gaussian());
      m(c, r) = std::conj(m(r, c));
    }
  }
  return m;
}

inline Quat random_unit_quat(Rng& rng) {
  Quat q;
  do {
    q = {rng.gaussian(), rng.gaussian(), rng.gaussian(), rng.gaussian()};
  } while (q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z == 0.0);
  return quat_normalize(q);
}

/// SU(2) element w*I + i(x s1 + y s2 + z s3) from a random unit quaternion.
inline CMat random_su2(Rng& rng) {
  const Quat q = random_unit_quat(rng);
  CMat u(2, 2);
  u(0, 0) = cplx(q.w, q.z);
  u(0, 1) = cplx(q.y, q.x);
  u(1, 0) = cplx(-q.y, q.x);
  u(1, 1) = cplx(q.w, -q.z);
  return u;
}

inline TestSetting random_same_orientation_setting(Rng& rng) {
  return make_setting(triad_from_rotation(random_unit_quat(rng)),
                      triad_from_rotation(random_unit_quat(rng)));
}

inline TestSetting random_opposite_orientation_setting(Rng& rng) {
  const Triad a = triad_from_rotation(random_unit_quat(rng));
  Triad b = triad_from_rotation(random_unit_quat(rng));
  b = negate_axis(b, 1 + static_cast<int>(rng.below(3)));
  return make_setting(a, b);
}

/// Random mixed state of random rank with ppt lambda_min < -threshold.
inline DensityMatrix random_entangled_mixed(Rng& rng, double threshold = 1e-4) {
  for (;;) {
    const int rank = 1 + static_cast<int>(rng.below(4));
    DensityMatrix rho = sample_mixed(rank, rng);
    if (ppt_lambda_min(rho) < -threshold) return rho;
  }
}

}  // namespace qbell::testing
