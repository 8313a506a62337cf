#include "qbell/observables.hpp"

#include <cmath>
#include <stdexcept>

namespace qbell {

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

CMat spin_obs(const Vec3& a) {
  CMat m(2, 2);
  m(0, 0) = a[2];
  m(0, 1) = cplx(a[0], -a[1]);
  m(1, 0) = cplx(a[0], a[1]);
  m(1, 1) = -a[2];
  return m;
}

Quat quat_mul(const Quat& a, const Quat& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

Quat quat_normalize(const Quat& q) {
  const double n = std::sqrt(q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z);
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw std::invalid_argument("quat_normalize: zero or non-finite quaternion");
  }
  return {q.w / n, q.x / n, q.y / n, q.z / n};
}

Quat quat_axis_angle(int axis, double angle) {
  const double c = std::cos(angle / 2.0), s = std::sin(angle / 2.0);
  switch (axis) {
    case 0:
      return {c, s, 0, 0};
    case 1:
      return {c, 0, s, 0};
    case 2:
      return {c, 0, 0, s};
    default:
      throw std::invalid_argument("quat_axis_angle: axis must be 0..2");
  }
}

const Vec3& Triad::axis(int i) const {
  switch (i) {
    case 1:
      return a1;
    case 2:
      return a2;
    case 3:
      return a3;
    default:
      throw std::invalid_argument("Triad::axis: index must be 1..3");
  }
}

namespace {

double triad_drift(const Vec3& a1, const Vec3& a2, const Vec3& a3) {
  double d = 0.0;
  d = std::max(d, std::abs(norm(a1) - 1.0));
  d = std::max(d, std::abs(norm(a2) - 1.0));
  d = std::max(d, std::abs(norm(a3) - 1.0));
  d = std::max(d, std::abs(dot(a1, a2)));
  d = std::max(d, std::abs(dot(a1, a3)));
  d = std::max(d, std::abs(dot(a2, a3)));
  return d;
}

double triad_det(const Vec3& a1, const Vec3& a2, const Vec3& a3) { return dot(a1, cross(a2, a3)); }

}  // namespace

Triad make_triad(const Vec3& a1, const Vec3& a2, const Vec3& a3, double tol) {
  if (triad_drift(a1, a2, a3) > tol) {
    throw std::invalid_argument("make_triad: axes not orthonormal within tolerance");
  }
  const double det = triad_det(a1, a2, a3);
  if (std::abs(std::abs(det) - 1.0) > 1e-6) {
    throw std::invalid_argument("make_triad: determinant not within 1e-6 of +-1");
  }
  return Triad{a1, a2, a3};
}

int orientation(const Triad& t) {
  const double det = triad_det(t.a1, t.a2, t.a3);
  if (std::abs(std::abs(det) - 1.0) > 1e-6) {
    throw std::invalid_argument("orientation: determinant not within 1e-6 of +-1");
  }
  return det > 0.0 ? +1 : -1;
}

Triad triad_from_rotation(const Quat& q) {
  const double n = std::sqrt(q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z);
  if (std::abs(n - 1.0) > 1e-9) {
    throw std::invalid_argument("triad_from_rotation: quaternion not unit within 1e-9");
  }
  const double w = q.w / n, x = q.x / n, y = q.y / n, z = q.z / n;
  const Vec3 c1{1 - 2 * (y * y + z * z), 2 * (x * y + w * z), 2 * (x * z - w * y)};
  const Vec3 c2{2 * (x * y - w * z), 1 - 2 * (x * x + z * z), 2 * (y * z + w * x)};
  const Vec3 c3{2 * (x * z + w * y), 2 * (y * z - w * x), 1 - 2 * (x * x + y * y)};
  return Triad{c1, c2, c3};
}

Triad triad_of_conjugation(const CMat& u) {
  if (u.rows() != 2 || u.cols() != 2) {
    throw std::invalid_argument("triad_of_conjugation: unitary must be 2x2");
  }
  if (max_abs_diff(adjoint(u) * u, CMat::identity(2)) > 1e-9) {
    throw std::invalid_argument("triad_of_conjugation: input not unitary within 1e-9");
  }
  Vec3 rows[3];
  const CMat udag = adjoint(u);
  for (int i = 0; i < 3; ++i) {
    const CMat conj_i = u * pauli(i + 1) * udag;
    for (int j = 0; j < 3; ++j) {
      rows[i][j] = 0.5 * trace(pauli(j + 1) * conj_i).real();
    }
  }
  return make_triad(rows[0], rows[1], rows[2], 1e-8);
}

Triad standard_triad() { return Triad{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}; }

Triad negate_axis(const Triad& t, int i) {
  if (i < 1 || i > 3) throw std::invalid_argument("negate_axis: index must be 1..3");
  Triad out = t;
  Vec3& a = (i == 1) ? out.a1 : (i == 2) ? out.a2 : out.a3;
  a = {-a[0], -a[1], -a[2]};
  return out;
}

Triad orthonormalized_triad(const Vec3& a1, const Vec3& a2, const Vec3& a3) {
  const double drift = triad_drift(a1, a2, a3);
  if (drift <= 1e-9) return make_triad(a1, a2, a3);
  if (drift > 1e-6) {
    throw std::invalid_argument("triad: axes deviate from orthonormal beyond 1e-6");
  }
  Vec3 b1 = a1, b2 = a2, b3 = a3;
  const auto scale = [](Vec3& v, double s) {
    v[0] *= s;
    v[1] *= s;
    v[2] *= s;
  };
  const auto reject = [](Vec3& v, const Vec3& onto) {
    const double p = dot(v, onto);
    v[0] -= p * onto[0];
    v[1] -= p * onto[1];
    v[2] -= p * onto[2];
  };
  scale(b1, 1.0 / norm(b1));
  reject(b2, b1);
  scale(b2, 1.0 / norm(b2));
  reject(b3, b1);
  reject(b3, b2);
  scale(b3, 1.0 / norm(b3));
  return make_triad(b1, b2, b3);
}

TestSetting make_setting(const Triad& a, const Triad& b) {
  TestSetting s;
  s.A = a;
  s.B = b;
  s.same_orientation = orientation(a) * orientation(b) == 1;
  return s;
}

TestSetting aligned_setting() { return make_setting(standard_triad(), standard_triad()); }

TestSetting flipped_b3_setting() {
  return make_setting(standard_triad(), negate_axis(standard_triad(), 3));
}

namespace {

double real_trace_checked(const CMat& rho, const CMat& op, const char* who) {
  const cplx t = trace(rho * op);
  if (std::abs(t.imag()) > 1e-9) {
    throw std::runtime_error(std::string(who) + ": trace has non-negligible imaginary part");
  }
  return t.real();
}

}  // namespace

TestStatistics correlators(const DensityMatrix& rho, const TestSetting& s) {
  const CMat i2 = CMat::identity(2);
  const CMat a1 = spin_obs(s.A.a1), a2 = spin_obs(s.A.a2), a3 = spin_obs(s.A.a3);
  const CMat b1 = spin_obs(s.B.a1), b2 = spin_obs(s.B.a2), b3 = spin_obs(s.B.a3);

  TestStatistics out;
  out.x1 = real_trace_checked(rho.mat(), kron(a1, b1) + kron(a2, b2), "correlators");
  out.x2 = real_trace_checked(rho.mat(), kron(a3, i2) + kron(i2, b3), "correlators");
  out.x3corr = real_trace_checked(rho.mat(), kron(a3, b3), "correlators");
  return out;
}

PauliMoments pauli_moments(const DensityMatrix& rho) {
  PauliMoments m;
  const CMat i2 = CMat::identity(2);
  for (int i = 0; i < 3; ++i) {
    m.a_marg[i] = trace(rho.mat() * kron(pauli(i + 1), i2)).real();
    m.b_marg[i] = trace(rho.mat() * kron(i2, pauli(i + 1))).real();
    for (int j = 0; j < 3; ++j) {
      m.corr[i][j] = trace(rho.mat() * kron(pauli(i + 1), pauli(j + 1))).real();
    }
  }
  return m;
}

}  // namespace qbell
