#include "qbell/shots.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace qbell {

double JointCounts::correlator() const {
  return static_cast<double>(pp - pm - mp + mm) / static_cast<double>(total());
}

double JointCounts::marginal_a() const {
  return static_cast<double>(pp + pm - mp - mm) / static_cast<double>(total());
}

double JointCounts::marginal_b() const {
  return static_cast<double>(pp - pm + mp - mm) / static_cast<double>(total());
}

namespace {

// Binomial(n, p) draw. Exact Bernoulli summation for small n, exact CDF
// inversion while n*min(p,1-p) stays small, rounded normal approximation
// beyond that (bias < 1 count, irrelevant at these sample sizes).
long binomial(long n, double p, Rng& rng) {
  if (n <= 0 || p <= 0.0) return 0;
  if (p >= 1.0) return n;
  if (p > 0.5) return n - binomial(n, 1.0 - p, rng);

  if (n <= 64) {
    long k = 0;
    for (long i = 0; i < n; ++i) k += rng.uniform01() < p ? 1 : 0;
    return k;
  }
  const double np = static_cast<double>(n) * p;
  if (np <= 30.0) {
    const double q = 1.0 - p;
    double f = std::exp(static_cast<double>(n) * std::log1p(-p));
    double cdf = f;
    const double u = rng.uniform01();
    long k = 0;
    while (u > cdf && k < n) {
      ++k;
      f *= (static_cast<double>(n - k + 1) / static_cast<double>(k)) * (p / q);
      cdf += f;
    }
    return k;
  }
  const double sd = std::sqrt(np * (1.0 - p));
  const double draw = std::round(np + sd * rng.gaussian());
  return std::min(n, std::max(0L, static_cast<long>(draw)));
}

std::array<long, 4> multinomial4(long n, const std::array<double, 4>& p, Rng& rng) {
  std::array<long, 4> k{};
  long left = n;
  double mass = 1.0;
  for (int i = 0; i < 3 && left > 0; ++i) {
    const double pi = mass > 0.0 ? std::min(1.0, std::max(0.0, p[i] / mass)) : 0.0;
    k[i] = binomial(left, pi, rng);
    left -= k[i];
    mass -= p[i];
  }
  k[3] = left;
  return k;
}

std::array<double, 4> joint_probabilities(const DensityMatrix& rho, const Vec3& a, const Vec3& b) {
  const CMat i2 = CMat::identity(2);
  const CMat sa = spin_obs(a), sb = spin_obs(b);
  std::array<double, 4> p{};
  int idx = 0;
  for (const double s : {+1.0, -1.0}) {
    for (const double t : {+1.0, -1.0}) {
      const CMat proj = kron(0.5 * (i2 + s * sa), 0.5 * (i2 + t * sb));
      p[idx++] = trace(rho.mat() * proj).real();
    }
  }
  double sum = 0.0;
  for (double& pi : p) {
    if (pi < 0.0) {
      if (pi < -1e-12) {
        throw std::runtime_error("sample_joint: probability below round-off tolerance");
      }
      pi = 0.0;
    }
    sum += pi;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw std::runtime_error("sample_joint: probability mass deviates from 1");
  }
  for (double& pi : p) pi /= sum;
  return p;
}

JointCounts counts_from(const std::array<long, 4>& k) {
  return JointCounts{k[0], k[1], k[2], k[3]};
}

struct Replicates {
  std::vector<double> x1, x2, x3, s, simple;
};

struct Estimates {
  double x1, x2, x3, s, simple;
};

Estimates estimators(const JointCounts& c1, const JointCounts& c2, const JointCounts& c3) {
  Estimates e{};
  e.x1 = c1.correlator() + c2.correlator();
  e.x2 = c3.marginal_a() + c3.marginal_b();
  e.x3 = c3.correlator();
  e.s = std::hypot(e.x1, e.x2) - e.x3;
  e.simple = std::abs(e.x1 + e.x3);
  return e;
}

// Half-width of the central 68.27% interval of the replicates.
double percentile_se(std::vector<double> v) {
  if (v.size() < 2) return 0.0;
  std::sort(v.begin(), v.end());
  const auto quantile = [&v](double q) {
    const double h = q * static_cast<double>(v.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(std::floor(h));
    const std::size_t hi = std::min(lo + 1, v.size() - 1);
    const double w = h - static_cast<double>(lo);
    return (1.0 - w) * v[lo] + w * v[hi];
  };
  return 0.5 * (quantile(0.841344746) - quantile(0.158655254));
}

}  // namespace

JointCounts sample_joint(const DensityMatrix& rho, const Vec3& a, const Vec3& b, long n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("sample_joint: need at least one shot");
  for (const Vec3* v : {&a, &b}) {
    if (std::abs(norm(*v) - 1.0) > 1e-9) {
      throw std::invalid_argument("sample_joint: measurement axes must be unit vectors");
    }
  }
  return counts_from(multinomial4(n, joint_probabilities(rho, a, b), rng));
}

ShotEstimate simulate_test(const DensityMatrix& rho, const TestSetting& s, const ShotPlan& plan) {
  if (!s.same_orientation) {
    throw std::invalid_argument("simulate_test: setting must have equal orientations");
  }
  if (plan.shots_per_setting < 1) {
    throw std::invalid_argument("simulate_test: shots_per_setting must be >= 1");
  }
  if (plan.bootstrap_resamples < 0) {
    throw std::invalid_argument("simulate_test: bootstrap_resamples must be >= 0");
  }

  const Rng root(plan.seed);
  const long n = plan.shots_per_setting;

  const std::array<std::pair<Vec3, Vec3>, 3> axes = {
      std::make_pair(s.A.a1, s.B.a1), std::make_pair(s.A.a2, s.B.a2),
      std::make_pair(s.A.a3, s.B.a3)};

  ShotEstimate out;
  out.shots_used = n;
  for (int k = 0; k < 3; ++k) {
    Rng stream = root.split(static_cast<std::uint64_t>(k));
    out.counts[k] = counts_from(
        multinomial4(n, joint_probabilities(rho, axes[k].first, axes[k].second), stream));
  }

  const Estimates e = estimators(out.counts[0], out.counts[1], out.counts[2]);
  out.stats.x1 = e.x1;
  out.stats.x2 = e.x2;
  out.stats.x3corr = e.x3;
  out.s_hat = e.s;
  out.simple_hat = e.simple;

  if (plan.bootstrap_resamples > 0) {
    Rng boot = root.split(0x626f6f74ULL);  // dedicated resampling stream
    Replicates rep;
    const int b = plan.bootstrap_resamples;
    rep.x1.reserve(b);
    rep.x2.reserve(b);
    rep.x3.reserve(b);
    rep.s.reserve(b);
    rep.simple.reserve(b);
    std::array<std::array<double, 4>, 3> phat;
    for (int k = 0; k < 3; ++k) {
      const JointCounts& c = out.counts[k];
      const double dn = static_cast<double>(n);
      phat[k] = {c.pp / dn, c.pm / dn, c.mp / dn, c.mm / dn};
    }
    for (int r = 0; r < b; ++r) {
      JointCounts rc[3];
      for (int k = 0; k < 3; ++k) rc[k] = counts_from(multinomial4(n, phat[k], boot));
      const Estimates re = estimators(rc[0], rc[1], rc[2]);
      rep.x1.push_back(re.x1);
      rep.x2.push_back(re.x2);
      rep.x3.push_back(re.x3);
      rep.s.push_back(re.s);
      rep.simple.push_back(re.simple);
    }
    out.stats.x1_se = percentile_se(rep.x1);
    out.stats.x2_se = percentile_se(rep.x2);
    out.stats.x3corr_se = percentile_se(rep.x3);
    out.s_se = percentile_se(rep.s);
    out.simple_se = percentile_se(rep.simple);
  } else {
    // Delta method. Settings are independent; within setting 3 the
    // marginals and the correlator share shots, so their covariances enter.
    const double dn = static_cast<double>(n);
    const double c1 = out.counts[0].correlator();
    const double c2 = out.counts[1].correlator();
    const double ma = out.counts[2].marginal_a();
    const double mb = out.counts[2].marginal_b();
    const double c3 = out.counts[2].correlator();
    const double var_x1 = ((1.0 - c1 * c1) + (1.0 - c2 * c2)) / dn;
    const double var_x2 =
        ((1.0 - ma * ma) + (1.0 - mb * mb) + 2.0 * (c3 - ma * mb)) / dn;
    const double var_x3 = (1.0 - c3 * c3) / dn;
    const double cov_x2_x3 = ((mb - ma * c3) + (ma - mb * c3)) / dn;

    const double rho_hat = std::hypot(e.x1, e.x2);
    const double g1 = rho_hat > 0.0 ? e.x1 / rho_hat : 0.0;
    const double g2 = rho_hat > 0.0 ? e.x2 / rho_hat : 0.0;
    const double var_s =
        g1 * g1 * var_x1 + g2 * g2 * var_x2 + var_x3 - 2.0 * g2 * cov_x2_x3;
    out.s_se = std::sqrt(std::max(0.0, var_s));
    out.simple_se = std::sqrt(std::max(0.0, var_x1 + var_x3));
    out.stats.x1_se = std::sqrt(std::max(0.0, var_x1));
    out.stats.x2_se = std::sqrt(std::max(0.0, var_x2));
    out.stats.x3corr_se = std::sqrt(std::max(0.0, var_x3));
  }
  return out;
}

}  // namespace qbell
