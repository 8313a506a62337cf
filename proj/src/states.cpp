#include "qbell/states.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace qbell {

namespace {

constexpr double kHermTol = 1e-9;
constexpr double kTraceTol = 1e-9;
constexpr double kPsdTol = 1e-9;
constexpr double kNormTol = 1e-9;

}  // namespace

PureState::PureState(const CVec4& v) : v_(v) {
  const double n = vec_norm(v);
  if (!(std::abs(n - 1.0) <= kNormTol)) {
    throw std::invalid_argument("PureState: vector norm deviates from 1 beyond 1e-9");
  }
  for (auto& c : v_) c /= n;
}

PureState PureState::normalized(const CVec4& v) {
  const double n = vec_norm(v);
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw std::invalid_argument("PureState: cannot normalize zero or non-finite vector");
  }
  CVec4 w = v;
  for (auto& c : w) c /= n;
  return PureState(w);
}

DensityMatrix validate_density(const CMat& m) {
  if (m.rows() != 4 || m.cols() != 4) {
    throw std::invalid_argument("density: matrix must be 4x4");
  }
  if (!m.finite()) throw std::invalid_argument("density: non-finite entries");
  if (hermiticity_defect(m) > kHermTol) {
    throw std::invalid_argument("density: not Hermitian within 1e-9");
  }
  CMat h = 0.5 * (m + adjoint(m));
  const double tr = trace(h).real();
  if (std::abs(tr - 1.0) > kTraceTol) {
    throw std::invalid_argument("density: trace deviates from 1 beyond 1e-9");
  }
  h = (1.0 / tr) * h;
  const EigResult eig = hermitian_eig(h);
  if (eig.eigenvalues.front() < -kPsdTol) {
    throw std::invalid_argument("density: negative eigenvalue below -1e-9");
  }
  return DensityMatrix(h);
}

DensityMatrix projector(const PureState& phi) { return validate_density(outer(phi.vec())); }

PureState bell_state(BellKind kind) {
  const double r = 1.0 / std::sqrt(2.0);
  CVec4 v{};
  switch (kind) {
    case BellKind::phi_plus:
      v[0] = r;
      v[3] = r;
      break;
    case BellKind::phi_minus:
      v[0] = r;
      v[3] = -r;
      break;
    case BellKind::psi_plus:
      v[1] = r;
      v[2] = r;
      break;
    case BellKind::psi_minus:
      v[1] = r;
      v[2] = -r;
      break;
    default:
      throw std::invalid_argument("bell_state: unknown kind");
  }
  return PureState(v);
}

DensityMatrix werner(double beta) {
  if (!(beta >= 0.0 && beta <= 1.0)) {
    throw std::invalid_argument("werner: beta must lie in [0, 1]");
  }
  const CMat sing = outer(bell_state(BellKind::psi_minus).vec());
  const CMat w = ((1.0 - beta) / 4.0) * CMat::identity(4) + beta * sing;
  return validate_density(w);
}

namespace {

CVec4 gaussian_vec4(Rng& rng) {
  CVec4 v;
  for (auto& c : v) c = cplx(rng.gaussian(), rng.gaussian());
  return v;
}

std::array<cplx, 2> gaussian_unit2(Rng& rng) {
  std::array<cplx, 2> v{};
  double n2 = 0.0;
  do {
    for (auto& c : v) c = cplx(rng.gaussian(), rng.gaussian());
    n2 = std::norm(v[0]) + std::norm(v[1]);
  } while (n2 <= 0.0);
  const double n = std::sqrt(n2);
  v[0] /= n;
  v[1] /= n;
  return v;
}

}  // namespace

PureState sample_pure_haar(Rng& rng) { return PureState::normalized(gaussian_vec4(rng)); }

PureState sample_product_pure(Rng& rng) {
  const auto a = gaussian_unit2(rng);
  const auto b = gaussian_unit2(rng);
  CVec4 v{a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]};
  return PureState::normalized(v);
}

DensityMatrix sample_mixed(int rank, Rng& rng) {
  if (rank < 1 || rank > 4) throw std::invalid_argument("sample_mixed: rank must be 1..4");
  CMat acc(4, 4);
  for (int k = 0; k < rank; ++k) {
    const CVec4 g = gaussian_vec4(rng);
    acc = acc + outer(g);
  }
  const double tr = trace(acc).real();
  return validate_density((1.0 / tr) * acc);
}

DensityMatrix sample_separable(int terms, Rng& rng) {
  if (terms < 1) throw std::invalid_argument("sample_separable: terms must be >= 1");
  std::vector<double> w(terms);
  double wsum = 0.0;
  for (auto& wi : w) {
    double u = rng.uniform01();
    while (u <= 0.0) u = rng.uniform01();
    wi = -std::log(u);  // Exp(1); normalized Exp draws are uniform on the simplex
    wsum += wi;
  }
  CMat acc(4, 4);
  for (int k = 0; k < terms; ++k) {
    acc = acc + (w[k] / wsum) * outer(sample_product_pure(rng).vec());
  }
  return validate_density(acc);
}

SchmidtForm schmidt_decompose(const PureState& phi) {
  // Coefficient matrix M with phi = sum_ab M(a,b) |ab>.
  const CVec4& p = phi.vec();
  CMat m(2, 2);
  m(0, 0) = p[0];
  m(0, 1) = p[1];
  m(1, 0) = p[2];
  m(1, 1) = p[3];

  // SVD via the 2x2 Hermitian eigenproblem of M^dag M.
  const EigResult eh = hermitian_eig(adjoint(m) * m);
  std::array<cplx, 2> z1{eh.vectors(0, 1), eh.vectors(1, 1)};  // larger singular value
  std::array<cplx, 2> z2{eh.vectors(0, 0), eh.vectors(1, 0)};

  const auto apply = [&m](const std::array<cplx, 2>& x) {
    return std::array<cplx, 2>{m(0, 0) * x[0] + m(0, 1) * x[1], m(1, 0) * x[0] + m(1, 1) * x[1]};
  };
  const auto nrm2 = [](const std::array<cplx, 2>& x) {
    return std::sqrt(std::norm(x[0]) + std::norm(x[1]));
  };

  auto w1 = apply(z1);
  double s1 = nrm2(w1);  // s1 >= 1/sqrt(2) for any unit vector, never degenerate
  w1[0] /= s1;
  w1[1] /= s1;

  auto mz2 = apply(z2);
  double s2 = nrm2(mz2);
  std::array<cplx, 2> w2;
  if (s2 > 1e-8) {
    w2 = {mz2[0] / s2, mz2[1] / s2};
    // M z2 is orthogonal to M z1 up to eigensolver round-off; clean it up.
    const cplx ov = std::conj(w1[0]) * w2[0] + std::conj(w1[1]) * w2[1];
    w2[0] -= ov * w1[0];
    w2[1] -= ov * w1[1];
    const double n = nrm2(w2);
    w2[0] /= n;
    w2[1] /= n;
    s2 = std::abs(std::conj(w2[0]) * mz2[0] + std::conj(w2[1]) * mz2[1]);
  } else {
    // Rank-deficient direction: complete the left basis and absorb the
    // residual phase so that w2^dag M z2 = s2 >= 0.
    w2 = {-std::conj(w1[1]), std::conj(w1[0])};
    const cplx c = std::conj(w2[0]) * mz2[0] + std::conj(w2[1]) * mz2[1];
    s2 = std::abs(c);
    if (s2 > 0.0) {
      const cplx ph = c / s2;
      w2[0] *= ph;
      w2[1] *= ph;
    }
  }

  // With M = W diag(s1,s2) Z^dag and the target T = diag(s1,s2)*J,
  // J = [[0,1],[-1,0]], the factors are U = W and V = conj(Z) J.
  SchmidtForm out;
  out.u = CMat(2, 2);
  out.u(0, 0) = w1[0];
  out.u(1, 0) = w1[1];
  out.u(0, 1) = w2[0];
  out.u(1, 1) = w2[1];
  out.v = CMat(2, 2);
  // conj(Z) J: column 0 = -conj(z2), column 1 = conj(z1).
  out.v(0, 0) = -std::conj(z2[0]);
  out.v(1, 0) = -std::conj(z2[1]);
  out.v(0, 1) = std::conj(z1[0]);
  out.v(1, 1) = std::conj(z1[1]);
  out.s1 = s1;
  out.s2 = s2;
  out.concurrence = 2.0 * s1 * s2;

  // Internal consistency: the reconstruction must be exact.
  CVec4 rec{};
  const CVec4 target{0.0, s1, -s2, 0.0};
  rec = mat_vec(kron(out.u, out.v), target);
  double resid = 0.0;
  for (int i = 0; i < 4; ++i) resid = std::max(resid, std::abs(rec[i] - p[i]));
  if (resid > 1e-9) {
    throw std::runtime_error("schmidt_decompose: reconstruction residual exceeds 1e-9");
  }
  return out;
}

double concurrence_pure(const PureState& phi) { return schmidt_decompose(phi).concurrence; }

}  // namespace qbell
