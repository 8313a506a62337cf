#include "qbell/witness.hpp"

#include <cmath>
#include <stdexcept>

namespace qbell {

namespace {

void require_orientation(const TestSetting& s, bool same, OrientationPolicy policy,
                         const char* who) {
  if (policy == OrientationPolicy::permissive) return;
  if (s.same_orientation != same) {
    throw std::invalid_argument(std::string(who) + (same ? ": setting must have equal orientations"
                                                         : ": setting must have opposite orientations"));
  }
}

}  // namespace

double bell_value(const DensityMatrix& rho, const TestSetting& s, OrientationPolicy policy) {
  require_orientation(s, true, policy, "bell_value");
  const TestStatistics st = correlators(rho, s);
  return std::hypot(st.x1, st.x2) - st.x3corr;
}

double simple_value(const DensityMatrix& rho, const TestSetting& s, OrientationPolicy policy) {
  require_orientation(s, true, policy, "simple_value");
  const TestStatistics st = correlators(rho, s);
  return std::abs(st.x1 + st.x3corr);
}

double chsh_value(const DensityMatrix& rho, const Vec3& a1, const Vec3& a2, const Vec3& b1,
                  const Vec3& b2) {
  for (const Vec3* v : {&a1, &a2, &b1, &b2}) {
    if (norm(*v) > 1.0 + 1e-9) {
      throw std::invalid_argument("chsh_value: vector norms must be <= 1");
    }
  }
  const CMat comb = kron(spin_obs(a1), spin_obs(b1)) + kron(spin_obs(a1), spin_obs(b2)) +
                    kron(spin_obs(a2), spin_obs(b1)) - kron(spin_obs(a2), spin_obs(b2));
  const cplx t = trace(rho.mat() * comb);
  if (std::abs(t.imag()) > 1e-9) {
    throw std::runtime_error("chsh_value: trace has non-negligible imaginary part");
  }
  return t.real();
}

double ppt_lambda_min(const DensityMatrix& rho) {
  return hermitian_eig(partial_transpose_B(rho.mat())).eigenvalues.front();
}

CMat local_time_reversal(const DensityMatrix& rho) {
  const CMat y = kron(CMat::identity(2), pauli(2));
  return y * partial_transpose_B(rho.mat()) * y;
}

namespace {

// Right-hand side of the expansion identity for given frames and
// concurrence: sqrt(1-C^2)(A3 - B3) - C(A1B1 + A2B2) - A3B3, with
// sqrt(1-C^2) supplied as s1^2 - s2^2 for accuracy.
CMat lemma_rhs(const Triad& a, const Triad& b, double c_conc, double d_flat) {
  const CMat i2 = CMat::identity(2);
  const CMat a1 = spin_obs(a.a1), a2 = spin_obs(a.a2), a3 = spin_obs(a.a3);
  const CMat b1 = spin_obs(b.a1), b2 = spin_obs(b.a2), b3 = spin_obs(b.a3);
  return d_flat * (kron(a3, i2) - kron(i2, b3)) -
         cplx(c_conc) * (kron(a1, b1) + kron(a2, b2)) - kron(a3, b3);
}

struct SchmidtFrames {
  Triad a, b;
  double concurrence = 0;
  double flatness = 0;  // s1^2 - s2^2 = sqrt(1 - C^2)
};

SchmidtFrames frames_of(const PureState& phi) {
  const SchmidtForm sf = schmidt_decompose(phi);
  SchmidtFrames out;
  out.a = triad_of_conjugation(sf.u);
  out.b = triad_of_conjugation(sf.v);
  out.concurrence = sf.concurrence;
  out.flatness = sf.s1 * sf.s1 - sf.s2 * sf.s2;
  return out;
}

}  // namespace

double lemma_residual(const PureState& phi) {
  const SchmidtFrames fr = frames_of(phi);
  const CMat lhs = 4.0 * outer(phi.vec()) - CMat::identity(4);
  return max_abs_diff(lhs, lemma_rhs(fr.a, fr.b, fr.concurrence, fr.flatness));
}

WitnessReport optimal_setting(const DensityMatrix& rho) {
  const EigResult eig = hermitian_eig(local_time_reversal(rho));
  const double lambda_min = eig.eigenvalues.front();

  CVec4 phi_vec;
  for (int k = 0; k < 4; ++k) phi_vec[k] = eig.vectors(k, 0);
  const PureState phi = PureState::normalized(phi_vec);

  const SchmidtFrames fr = frames_of(phi);

  WitnessReport rep;
  rep.setting_used = make_setting(fr.a, fr.b);
  rep.s_value = bell_value(rho, rep.setting_used);
  rep.violated = rep.s_value > 1.0 + kViolationTol;
  rep.lambda_min = lambda_min;
  rep.predicted_max = 1.0 - 4.0 * lambda_min;
  return rep;
}

RobertsonReport robertson_check(const DensityMatrix& rho, const TestSetting& s) {
  if (s.same_orientation) {
    throw std::invalid_argument("robertson_check: setting must have opposite orientations");
  }
  const CMat i2 = CMat::identity(2);
  const CMat i4 = CMat::identity(4);
  const CMat a1 = spin_obs(s.A.a1), a2 = spin_obs(s.A.a2), a3 = spin_obs(s.A.a3);
  const CMat b1 = spin_obs(s.B.a1), b2 = spin_obs(s.B.a2), b3 = spin_obs(s.B.a3);

  const CMat x[3] = {kron(a1, b1) + kron(a2, b2), kron(a3, i2) + kron(i2, b3),
                     i4 + kron(a3, b3)};

  double mean[3];
  for (int i = 0; i < 3; ++i) {
    const cplx t = trace(rho.mat() * x[i]);
    if (std::abs(t.imag()) > 1e-9) {
      throw std::runtime_error("robertson_check: trace has non-negligible imaginary part");
    }
    mean[i] = t.real();
  }

  double sigma[3][3];
  double gamma[3][3];
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const cplx tij = trace(rho.mat() * (x[i] * x[j]));
      const cplx tji = trace(rho.mat() * (x[j] * x[i]));
      sigma[i][j] = 0.5 * (tij + tji).real() - mean[i] * mean[j];
      // (i/2) <[X_i, X_j]> is real for Hermitian X.
      gamma[i][j] = -0.5 * (tij - tji).imag();
    }
  }

  const auto det3 = [](const double m[3][3]) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  };

  RobertsonReport out;
  out.det_sigma = det3(sigma);
  out.det_gamma = det3(gamma);
  out.eq3_lhs = mean[0] * mean[0] + mean[1] * mean[1];
  out.eq3_rhs = mean[2] * mean[2];
  out.sigma_dominates = out.det_sigma >= out.det_gamma - 1e-9;
  out.eq3_holds = out.eq3_lhs <= out.eq3_rhs + 1e-9;
  return out;
}

}  // namespace qbell
