#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qbell/linalg.hpp"
#include "qbell/rng.hpp"
#include "test_util.hpp"

using namespace qbell;
using qbell::testing::random_hermitian4;

namespace {

CMat random_c2(Rng& rng) {
  CMat m(2, 2);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) m(r, c) = cplx(rng.gaussian(), rng.gaussian());
  return m;
}

CMat singlet_projector() {
  // |psi-><psi-| with psi- = (|01> - |10>)/sqrt(2)
  CVec4 v{0.0, 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0.0};
  return outer(v);
}

}  // namespace

TEST_CASE("kron identity and diagonal cases") {
  const CMat i4 = kron(pauli(0), pauli(0));
  CHECK(max_abs_diff(i4, CMat::identity(4)) == doctest::Approx(0.0).epsilon(1e-15));

  const CMat zz = kron(pauli(3), pauli(3));
  CMat expect(4, 4);
  expect(0, 0) = 1;
  expect(1, 1) = -1;
  expect(2, 2) = -1;
  expect(3, 3) = 1;
  CHECK(max_abs_diff(zz, expect) < 1e-15);
}

TEST_CASE("kron against the entrywise definition") {
  // sigma_1 (x) sigma_2 has +-i in the anti-diagonal block pattern; check
  // every entry against the brute-force formula.
  const CMat k = kron(pauli(1), pauli(2));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q) {
          CHECK(std::abs(k(2 * i + p, 2 * j + q) - pauli(1)(i, j) * pauli(2)(p, q)) < 1e-15);
        }
  CHECK(std::abs(k(0, 3) - cplx(0, -1)) < 1e-15);
  CHECK(std::abs(k(1, 2) - cplx(0, 1)) < 1e-15);
}

TEST_CASE("kron is bilinear and multiplicative") {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const CMat a = random_c2(rng), b = random_c2(rng), c = random_c2(rng), d = random_c2(rng);
    const cplx alpha(rng.gaussian(), rng.gaussian());

    CHECK(max_abs_diff(kron(a + c, b), kron(a, b) + kron(c, b)) < 1e-12);
    CHECK(max_abs_diff(kron(a, alpha * b), alpha * kron(a, b)) < 1e-12);
    CHECK(max_abs_diff(kron(a, b) * kron(c, d), kron(a * c, b * d)) < 1e-12);
  }
}

TEST_CASE("hermitian_eig on a diagonal matrix") {
  CMat m(4, 4);
  m(0, 0) = 3;
  m(1, 1) = 1;
  m(2, 2) = 2;
  m(3, 3) = 0;
  const EigResult e = hermitian_eig(m);
  REQUIRE(e.eigenvalues.size() == 4);
  CHECK(e.eigenvalues[0] == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(e.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(e.eigenvalues[2] == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(e.eigenvalues[3] == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("hermitian_eig of the partially transposed singlet") {
  const CMat pt = partial_transpose_B(singlet_projector());
  const EigResult e = hermitian_eig(pt);
  CHECK(std::abs(e.eigenvalues[0] - (-0.5)) < 1e-12);
  CHECK(std::abs(e.eigenvalues[1] - 0.5) < 1e-12);
  CHECK(std::abs(e.eigenvalues[2] - 0.5) < 1e-12);
  CHECK(std::abs(e.eigenvalues[3] - 0.5) < 1e-12);
}

TEST_CASE("hermitian_eig of the identity") {
  const EigResult e = hermitian_eig(CMat::identity(4));
  for (double lam : e.eigenvalues) CHECK(std::abs(lam - 1.0) < 1e-14);
  CHECK(max_abs_diff(adjoint(e.vectors) * e.vectors, CMat::identity(4)) < 1e-10);
}

TEST_CASE("hermitian_eig rejects non-Hermitian input") {
  CMat m = CMat::identity(4);
  m(0, 1) = 1.0;  // no conjugate partner
  CHECK_THROWS_AS(hermitian_eig(m), std::invalid_argument);
}

TEST_CASE("hermitian_eig residual and orthonormality on random input") {
  Rng rng(23);
  for (int trial = 0; trial < 1000; ++trial) {
    const CMat m = random_hermitian4(rng);
    const EigResult e = hermitian_eig(m);

    // reconstruction  M = V diag(lambda) V^dag
    CMat lam(4, 4);
    for (int i = 0; i < 4; ++i) lam(i, i) = e.eigenvalues[i];
    CHECK(max_abs_diff(m, e.vectors * lam * adjoint(e.vectors)) < 1e-10);
    CHECK(max_abs_diff(adjoint(e.vectors) * e.vectors, CMat::identity(4)) < 1e-10);

    // eigenvalue equation, columnwise
    for (int i = 0; i < 4; ++i) {
      CVec4 v;
      for (int k = 0; k < 4; ++k) v[k] = e.vectors(k, i);
      const CVec4 mv = mat_vec(m, v);
      for (int k = 0; k < 4; ++k) {
        CHECK(std::abs(mv[k] - e.eigenvalues[i] * v[k]) < 1e-10);
      }
    }
    for (int i = 0; i + 1 < 4; ++i) CHECK(e.eigenvalues[i] <= e.eigenvalues[i + 1]);
  }
}

TEST_CASE("partial transpose of a product state transposes the B factor") {
  Rng rng(5);
  CMat a = random_c2(rng);
  a = 0.5 * (a + adjoint(a));
  CMat b = random_c2(rng);
  b = 0.5 * (b + adjoint(b));

  CMat bt(2, 2);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) bt(r, c) = b(c, r);

  CHECK(max_abs_diff(partial_transpose_B(kron(a, b)), kron(a, bt)) < 1e-14);
}

TEST_CASE("partial transpose is an involution and preserves the trace") {
  Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const CMat m = random_hermitian4(rng);
    const CMat pt = partial_transpose_B(m);
    CHECK(max_abs_diff(partial_transpose_B(pt), m) < 1e-15);
    CHECK(std::abs(trace(pt) - trace(m)) < 1e-14);
  }
}

TEST_CASE("partial transpose and local time reversal share a spectrum") {
  // (1 (x) tau_2) M^TB (1 (x) tau_2) is a unitary conjugation of M^TB.
  Rng rng(29);
  const CMat y = kron(pauli(0), pauli(2));
  for (int trial = 0; trial < 1000; ++trial) {
    const CMat m = random_hermitian4(rng);
    const CMat pt = partial_transpose_B(m);
    const EigResult e1 = hermitian_eig(pt);
    const EigResult e2 = hermitian_eig(y * pt * y);
    for (int i = 0; i < 4; ++i) {
      CHECK(std::abs(e1.eigenvalues[i] - e2.eigenvalues[i]) < 1e-10);
    }
  }
}

TEST_CASE("CMat guards its shape") {
  CHECK_THROWS_AS(CMat(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(kron(CMat::identity(4), CMat::identity(2)), std::invalid_argument);
  CHECK_THROWS_AS(partial_transpose_B(CMat::identity(2)), std::invalid_argument);
}
