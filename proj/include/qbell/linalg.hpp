// Dense complex matrix kernel for the 2x2 / 4x4 operators used everywhere
// else: products, adjoints, Kronecker products, Hermitian eigendecomposition
// and the partial transpose. Self-contained on purpose; nothing here knows
// about quantum states.

#pragma once

#include <array>
#include <complex>
#include <vector>

namespace qbell {

using cplx = std::complex<double>;

/// Row-major dense complex matrix restricted to 2 or 4 rows/columns.
class CMat {
 public:
  CMat() = default;
  CMat(int rows, int cols);

  static CMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  cplx& operator()(int r, int c) { return e_[r * cols_ + c]; }
  const cplx& operator()(int r, int c) const { return e_[r * cols_ + c]; }

  /// True when every entry is finite (no NaN/Inf in either component).
  bool finite() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::array<cplx, 16> e_{};
};

CMat operator+(const CMat& a, const CMat& b);
CMat operator-(const CMat& a, const CMat& b);
CMat operator*(const CMat& a, const CMat& b);
CMat operator*(const cplx& s, const CMat& a);
CMat operator*(double s, const CMat& a);

CMat adjoint(const CMat& a);
cplx trace(const CMat& a);

/// Largest entry magnitude (max-norm).
double max_abs(const CMat& a);
double max_abs_diff(const CMat& a, const CMat& b);
/// Max-norm of a - a^dagger; zero for exactly Hermitian input.
double hermiticity_defect(const CMat& a);

/// Pauli matrix sigma_i; pauli(0) is the 2x2 identity.
const CMat& pauli(int i);

/// Kronecker product of two 2x2 matrices: out[2i+k][2j+l] = a[i][j]*b[k][l].
CMat kron(const CMat& a, const CMat& b);

/// Partial transpose over the second qubit: each 2x2 block of the 4x4 input
/// is transposed in place. Involutive and trace-preserving.
CMat partial_transpose_B(const CMat& m);

struct EigResult {
  std::vector<double> eigenvalues;  // ascending
  CMat vectors;                     // column i pairs with eigenvalues[i]
};

/// Eigendecomposition of a Hermitian 2x2 or 4x4 matrix by cyclic complex
/// Jacobi rotations. Input must satisfy max|M - M^dag| <= 1e-9; it is
/// symmetrized before the sweep loop. Eigenvectors within a degenerate
/// eigenspace are an arbitrary orthonormal completion.
EigResult hermitian_eig(const CMat& m);

// 4-vector helpers used by the state layer.
using CVec4 = std::array<cplx, 4>;

CVec4 mat_vec(const CMat& m, const CVec4& v);
cplx inner(const CVec4& a, const CVec4& b);  // conjugate-linear in a
double vec_norm(const CVec4& v);
/// |v><v| as a 4x4 matrix.
CMat outer(const CVec4& v);

}  // namespace qbell
