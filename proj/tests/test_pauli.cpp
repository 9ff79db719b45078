#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oneway/pauli.hpp"

using namespace oneway;

namespace {

// Composition is exact, so dense products must match to rounding noise.
constexpr double kDense = 1e-12;

void check_compose_matches_dense(PrimeDim d) {
  for (const PauliLabel& a : all_labels(d)) {
    for (const PauliLabel& b : all_labels(d)) {
      const PhasedPauli c = pauli_compose(d, {a, 0}, {b, 0});
      const Matrix lhs = make_pauli(d, a) * make_pauli(d, b);
      const Matrix rhs = make_pauli(d, c.label, c.phase_exp);
      CAPTURE(d.value());
      CAPTURE(a.a1);
      CAPTURE(a.a2);
      CAPTURE(b.a1);
      CAPTURE(b.a2);
      REQUIRE(max_abs_diff(lhs, rhs) < kDense);
    }
  }
}

}  // namespace

TEST_CASE("shift and phase act as expected on basis vectors") {
  for (int dim : {2, 3, 5, 7}) {
    const PrimeDim d(dim);
    const Matrix x = make_shift(d), z = make_phase(d);
    for (int j = 0; j < dim; ++j) {
      Vector e = Vector::Zero(dim);
      e(j) = 1.0;
      Vector shifted = Vector::Zero(dim);
      shifted((j + 1) % dim) = 1.0;
      CHECK(max_abs(Matrix(x * e - shifted)) < kDense);
      CHECK(max_abs(Matrix(z * e - root_of_unity(dim, j) * e)) < kDense);
    }
  }
}

TEST_CASE("composition law matches dense multiplication for every label pair") {
  for (int dim : {2, 3, 5}) check_compose_matches_dense(PrimeDim(dim));
}

TEST_CASE("qubit XZ products carry quartic phases") {
  const PrimeDim d(2);
  // XZ = -iY and ZX = iY in the canonical labeling.
  const PhasedPauli xz = pauli_compose(d, {{1, 0}, 0}, {{0, 1}, 0});
  CHECK(xz.label == PauliLabel{1, 1});
  CHECK(xz.phase_exp == 3);
  const PhasedPauli zx = pauli_compose(d, {{0, 1}, 0}, {{1, 0}, 0});
  CHECK(zx.label == PauliLabel{1, 1});
  CHECK(zx.phase_exp == 1);
  const PhasedPauli y2 = pauli_compose(d, {{1, 1}, 0}, {{1, 1}, 0});
  CHECK(y2.label == PauliLabel{0, 0});
  CHECK(y2.phase_exp == 0);
}

TEST_CASE("odd-dimension products stay in the d-th roots") {
  const PrimeDim d(3);
  const PhasedPauli xz = pauli_compose(d, {{1, 0}, 0}, {{0, 1}, 0});
  CHECK(xz.label == PauliLabel{1, 1});
  CHECK(xz.phase_exp == 0);
  const PhasedPauli zx = pauli_compose(d, {{0, 1}, 0}, {{1, 0}, 0});
  CHECK(zx.label == PauliLabel{1, 1});
  CHECK(zx.phase_exp == 1);  // ZX = w XZ
}

TEST_CASE("d-th power of any generalized Pauli is the identity") {
  for (int dim : {2, 3, 5}) {
    const PrimeDim d(dim);
    for (const PauliLabel& a : all_labels(d)) {
      const PhasedPauli p = pauli_power(d, {a, 0}, dim);
      CAPTURE(dim);
      CAPTURE(a.a1);
      CAPTURE(a.a2);
      CHECK(p.label == PauliLabel{0, 0});
      CHECK(p.phase_exp == 0);
    }
  }
}

TEST_CASE("pauli operators are trace orthogonal") {
  for (int dim : {2, 3, 5}) {
    const PrimeDim d(dim);
    for (const PauliLabel& a : all_labels(d)) {
      for (const PauliLabel& b : all_labels(d)) {
        const cplx t = (make_pauli(d, a).adjoint() * make_pauli(d, b)).trace();
        const double expected = (a == b) ? static_cast<double>(dim) : 0.0;
        CHECK(std::abs(t - expected) < kDense);
      }
    }
  }
}

TEST_CASE("pauli operators are unitary and unit determinant free") {
  for (int dim : {2, 3, 5}) {
    const PrimeDim d(dim);
    for (const PauliLabel& a : all_labels(d)) {
      CHECK_NOTHROW(check_unitary(make_pauli(d, a), 1e-12, "pauli"));
    }
  }
}

TEST_CASE("label enumeration covers the full grid once") {
  for (int dim : {2, 5}) {
    const auto labels = all_labels(PrimeDim(dim));
    CHECK(labels.size() == static_cast<std::size_t>(dim * dim));
    for (std::size_t i = 1; i < labels.size(); ++i) CHECK(labels[i - 1] < labels[i]);
  }
}

TEST_CASE("non-prime dimensions are rejected") {
  CHECK_THROWS_AS(PrimeDim(1), validation_error);
  CHECK_THROWS_AS(PrimeDim(4), validation_error);
  CHECK_THROWS_AS(PrimeDim(6), validation_error);
  CHECK_THROWS_AS(PrimeDim(9), validation_error);
  CHECK_NOTHROW(PrimeDim(13));
}
