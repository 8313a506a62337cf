// Finite-statistics simulation of the 3-setting experiment: joint +-1
// outcome sampling, correlator estimators, and bootstrap standard errors.

#pragma once

#include <array>
#include <cstdint>

#include "qbell/observables.hpp"
#include "qbell/rng.hpp"
#include "qbell/states.hpp"

namespace qbell {

struct ShotPlan {
  long shots_per_setting = 0;
  std::uint64_t seed = 0;
  int bootstrap_resamples = 1000;  // 0 selects the delta-method fallback
};

/// Counts over the four joint outcomes (+,+), (+,-), (-,+), (-,-).
struct JointCounts {
  long pp = 0, pm = 0, mp = 0, mm = 0;

  long total() const { return pp + pm + mp + mm; }
  double correlator() const;  // mean of s*t
  double marginal_a() const;  // mean of s
  double marginal_b() const;  // mean of t
};

/// Samples n joint measurements of (a.sigma, b.tau) from
/// p(s,t) = Tr(rho Pi_s^a (x) Pi_t^b). Counts always sum to n.
JointCounts sample_joint(const DensityMatrix& rho, const Vec3& a, const Vec3& b, long n, Rng& rng);

struct ShotEstimate {
  TestStatistics stats;         // estimators with standard errors filled in
  double s_hat = 0, s_se = 0;   // test value and its standard error
  double simple_hat = 0, simple_se = 0;
  long shots_used = 0;          // per setting
  std::array<JointCounts, 3> counts{};  // settings (a1,b1), (a2,b2), (a3,b3)
};

/// Runs the three joint measurements of the protocol; <A3>, <B3> come from
/// the marginals of setting 3, which also yields <A3 B3>.
ShotEstimate simulate_test(const DensityMatrix& rho, const TestSetting& s, const ShotPlan& plan);

}  // namespace qbell
