#include "qbell/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qbell {

namespace {

void check_dim(int n, const char* who) {
  if (n != 2 && n != 4) {
    throw std::invalid_argument(std::string(who) + ": dimensions must be 2 or 4");
  }
}

void check_same_shape(const CMat& a, const CMat& b, const char* who) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument(std::string(who) + ": shape mismatch");
  }
}

}  // namespace

CMat::CMat(int rows, int cols) : rows_(rows), cols_(cols) {
  check_dim(rows, "CMat");
  check_dim(cols, "CMat");
}

CMat CMat::identity(int n) {
  CMat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

bool CMat::finite() const {
  for (int i = 0; i < rows_ * cols_; ++i) {
    if (!std::isfinite(e_[i].real()) || !std::isfinite(e_[i].imag())) return false;
  }
  return true;
}

CMat operator+(const CMat& a, const CMat& b) {
  check_same_shape(a, b, "operator+");
  CMat out(a.rows(), a.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) + b(r, c);
  return out;
}

CMat operator-(const CMat& a, const CMat& b) {
  check_same_shape(a, b, "operator-");
  CMat out(a.rows(), a.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) - b(r, c);
  return out;
}

CMat operator*(const CMat& a, const CMat& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("operator*: shape mismatch");
  CMat out(a.rows(), b.cols());
  for (int r = 0; r < a.rows(); ++r) {
    for (int k = 0; k < a.cols(); ++k) {
      const cplx ark = a(r, k);
      for (int c = 0; c < b.cols(); ++c) out(r, c) += ark * b(k, c);
    }
  }
  return out;
}

CMat operator*(const cplx& s, const CMat& a) {
  CMat out(a.rows(), a.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) out(r, c) = s * a(r, c);
  return out;
}

CMat operator*(double s, const CMat& a) { return cplx(s, 0.0) * a; }

CMat adjoint(const CMat& a) {
  CMat out(a.cols(), a.rows());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) out(c, r) = std::conj(a(r, c));
  return out;
}

cplx trace(const CMat& a) {
  cplx t = 0.0;
  for (int i = 0; i < std::min(a.rows(), a.cols()); ++i) t += a(i, i);
  return t;
}

double max_abs(const CMat& a) {
  double m = 0.0;
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) m = std::max(m, std::abs(a(r, c)));
  return m;
}

double max_abs_diff(const CMat& a, const CMat& b) { return max_abs(a - b); }

double hermiticity_defect(const CMat& a) { return max_abs_diff(a, adjoint(a)); }

const CMat& pauli(int i) {
  static const std::array<CMat, 4> sigma = [] {
    std::array<CMat, 4> s{CMat(2, 2), CMat(2, 2), CMat(2, 2), CMat(2, 2)};
    s[0](0, 0) = 1.0;
    s[0](1, 1) = 1.0;
    s[1](0, 1) = 1.0;
    s[1](1, 0) = 1.0;
    s[2](0, 1) = cplx(0.0, -1.0);
    s[2](1, 0) = cplx(0.0, 1.0);
    s[3](0, 0) = 1.0;
    s[3](1, 1) = -1.0;
    return s;
  }();
  if (i < 0 || i > 3) throw std::invalid_argument("pauli: index must be 0..3");
  return sigma[i];
}

CMat kron(const CMat& a, const CMat& b) {
  if (a.rows() != 2 || a.cols() != 2 || b.rows() != 2 || b.cols() != 2) {
    throw std::invalid_argument("kron: both factors must be 2x2");
  }
  CMat out(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return out;
}

CMat partial_transpose_B(const CMat& m) {
  if (m.rows() != 4 || m.cols() != 4) {
    throw std::invalid_argument("partial_transpose_B: input must be 4x4");
  }
  CMat out(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) out(2 * i + l, 2 * j + k) = m(2 * i + k, 2 * j + l);
  return out;
}

namespace {

double offdiag_frobenius(const CMat& a) {
  double s = 0.0;
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c)
      if (r != c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

// One complex Jacobi rotation zeroing a(p,q). The 2x2 unitary is
// J = [[c, -conj(s)], [s, c]] with c = cos(theta), s = e^{-i phi} sin(theta),
// phi = arg(a(p,q)) and cot(2 theta) = (a_pp - a_qq) / (2 |a_pq|).
void jacobi_rotate(CMat& a, CMat& v, int p, int q) {
  const cplx apq = a(p, q);
  const double r = std::abs(apq);
  if (r == 0.0) return;
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const cplx phase = apq / r;

  const double zeta = (app - aqq) / (2.0 * r);
  const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const cplx s = std::conj(phase) * (t * c);

  const int n = a.rows();
  for (int k = 0; k < n; ++k) {  // A <- A J
    const cplx akp = a(k, p), akq = a(k, q);
    a(k, p) = c * akp + s * akq;
    a(k, q) = -std::conj(s) * akp + c * akq;
  }
  for (int k = 0; k < n; ++k) {  // A <- J^dag A
    const cplx apk = a(p, k), aqk = a(q, k);
    a(p, k) = c * apk + std::conj(s) * aqk;
    a(q, k) = -s * apk + c * aqk;
  }
  for (int k = 0; k < n; ++k) {  // V <- V J
    const cplx vkp = v(k, p), vkq = v(k, q);
    v(k, p) = c * vkp + s * vkq;
    v(k, q) = -std::conj(s) * vkp + c * vkq;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
}

}  // namespace

EigResult hermitian_eig(const CMat& m) {
  const int n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("hermitian_eig: input must be square");
  check_dim(n, "hermitian_eig");
  if (!m.finite()) throw std::invalid_argument("hermitian_eig: non-finite entries");
  if (hermiticity_defect(m) > 1e-9) {
    throw std::invalid_argument("hermitian_eig: input not Hermitian within 1e-9");
  }

  CMat a = 0.5 * (m + adjoint(m));
  CMat v = CMat::identity(n);

  constexpr double kOffTol = 1e-14;
  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (offdiag_frobenius(a) < kOffTol) break;
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

  EigResult out;
  out.eigenvalues.resize(n);
  out.vectors = CMat(n, n);
  for (int i = 0; i < n; ++i) {
    out.eigenvalues[i] = a(order[i], order[i]).real();
    for (int k = 0; k < n; ++k) out.vectors(k, i) = v(k, order[i]);
  }
  return out;
}

CVec4 mat_vec(const CMat& m, const CVec4& v) {
  if (m.rows() != 4 || m.cols() != 4) throw std::invalid_argument("mat_vec: matrix must be 4x4");
  CVec4 out{};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out[r] += m(r, c) * v[c];
  return out;
}

cplx inner(const CVec4& a, const CVec4& b) {
  cplx s = 0.0;
  for (int i = 0; i < 4; ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double vec_norm(const CVec4& v) { return std::sqrt(inner(v, v).real()); }

CMat outer(const CVec4& v) {
  CMat out(4, 4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out(r, c) = v[r] * std::conj(v[c]);
  return out;
}

}  // namespace qbell
