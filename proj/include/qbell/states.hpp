// Two-qubit state constructors and validation: Bell states, the Werner
// family, seeded random ensembles, Schmidt decomposition and pure-state
// concurrence. Computational basis order is |00>, |01>, |10>, |11>.

#pragma once

#include <cstdint>

#include "qbell/linalg.hpp"
#include "qbell/rng.hpp"

namespace qbell {

/// Validated two-qubit density matrix: Hermitian within 1e-9 (then
/// symmetrized), trace within 1e-9 of 1 (then renormalized), smallest
/// eigenvalue >= -1e-9.
class DensityMatrix {
 public:
  const CMat& mat() const { return mat_; }

 private:
  friend DensityMatrix validate_density(const CMat& m);
  explicit DensityMatrix(const CMat& m) : mat_(m) {}
  CMat mat_;
};

/// Normalized complex 4-vector.
class PureState {
 public:
  /// Requires the input norm to lie within 1e-9 of 1; the stored vector is
  /// renormalized exactly.
  explicit PureState(const CVec4& v);
  /// Normalizes an arbitrary nonzero vector.
  static PureState normalized(const CVec4& v);

  const CVec4& vec() const { return v_; }

 private:
  CVec4 v_;
};

DensityMatrix validate_density(const CMat& m);

/// |phi><phi| as a validated state.
DensityMatrix projector(const PureState& phi);

enum class BellKind { phi_plus, phi_minus, psi_plus, psi_minus };

PureState bell_state(BellKind kind);

/// Werner state W = ((1-beta)/4) I + beta |psi-><psi-|, beta in [0, 1].
/// Separable exactly when beta <= 1/3.
DensityMatrix werner(double beta);

// Seeded random ensembles. All are deterministic functions of the stream.
PureState sample_pure_haar(Rng& rng);
PureState sample_product_pure(Rng& rng);
/// GG^dag / tr(GG^dag) with G a 4 x rank complex Gaussian matrix, rank 1..4.
DensityMatrix sample_mixed(int rank, Rng& rng);
/// Convex mixture of `terms` random product pure projectors with
/// uniform-simplex weights; separable by construction.
DensityMatrix sample_separable(int terms, Rng& rng);

struct SchmidtForm {
  CMat u;          // 2x2 unitary on qubit A
  CMat v;          // 2x2 unitary on qubit B
  double s1 = 0;   // s1 >= s2 >= 0, s1^2 + s2^2 = 1
  double s2 = 0;
  double concurrence = 0;  // C = 2 s1 s2
};

/// Decomposes phi as (U (x) V)(s1|01> - s2|10>), exactly (no residual global
/// phase). |0>/|1> are the +1/-1 eigenstates of sigma_3.
SchmidtForm schmidt_decompose(const PureState& phi);

double concurrence_pure(const PureState& phi);

}  // namespace qbell
