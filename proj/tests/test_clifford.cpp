#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oneway/clifford.hpp"

using namespace oneway;

namespace {

constexpr double kTol = 1e-9;

Matrix random_word(PrimeDim d, std::mt19937_64& rng, int len, std::vector<Matrix>& picks) {
  const std::vector<Matrix> gens = {clifford_fourier(d), clifford_sgate(d),
                                    make_pauli(d, {1, 0}), make_pauli(d, {0, 1})};
  Matrix u = Matrix::Identity(d.value(), d.value());
  for (int i = 0; i < len; ++i) {
    const Matrix& g = gens[rng() % gens.size()];
    picks.push_back(g);
    u = g * u;
  }
  return u;
}

// d = 2 rotation about Y, exactly unitary for any angle.
Matrix rotation_y(double theta) {
  Matrix r(2, 2);
  r(0, 0) = std::cos(theta / 2);
  r(0, 1) = -std::sin(theta / 2);
  r(1, 0) = std::sin(theta / 2);
  r(1, 1) = std::cos(theta / 2);
  return r;
}

}  // namespace

TEST_CASE("fourier and phase gates are clifford with exact image phases") {
  for (int dim : {2, 3, 5}) {
    const PrimeDim d(dim);
    for (const Matrix& u : {clifford_fourier(d), clifford_sgate(d)}) {
      const CliffordVerdict v = is_clifford(d, u, kTol);
      CHECK(v.status == CliffordStatus::yes);
      CHECK(v.x_image.phase_is_exact);
      CHECK(v.z_image.phase_is_exact);
      CHECK(v.residual < kTol);
    }
    // The fourier transform swaps the generators: X -> Z, Z -> X^-1.
    const CliffordVerdict f = is_clifford(d, clifford_fourier(d), kTol);
    CHECK(f.x_image.label == PauliLabel{0, 1});
    CHECK(f.z_image.label == PauliLabel{dim - 1, 0});
  }
}

TEST_CASE("a non-clifford diagonal gate is rejected with a large residual") {
  const PrimeDim d(2);
  Matrix t = Matrix::Identity(2, 2);
  t(1, 1) = std::polar(1.0, std::acos(-1.0) / 4);
  const CliffordVerdict v = is_clifford(d, t, kTol);
  CHECK(v.status == CliffordStatus::no);
  CHECK(v.residual > 0.1);
}

TEST_CASE("verdicts depend on the tolerance only inside the declared band") {
  const PrimeDim d(2);
  const Matrix u = rotation_y(6e-9) * clifford_fourier(d);
  // The stray coefficient is ~6e-9: clean at 1e-6, banded at 1e-9,
  // clearly present (hence a second operator) at 1e-12.
  CHECK(is_clifford(d, u, 1e-6).status == CliffordStatus::yes);
  CHECK(is_clifford(d, u, 1e-9).status == CliffordStatus::indeterminate);
  CHECK(is_clifford(d, u, 1e-12).status == CliffordStatus::no);
}

TEST_CASE("non-unitary input is rejected outright") {
  const PrimeDim d(2);
  Matrix m(2, 2);
  m << 1.0, 0.0, 0.0, 0.5;
  CHECK_THROWS_AS(is_clifford(d, m, kTol), validation_error);
}

TEST_CASE("extracted actions track dense conjugation on random words") {
  std::mt19937_64 rng(11);
  for (int dim : {2, 3}) {
    const PrimeDim d(dim);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Matrix> picks;
      const Matrix u = random_word(d, rng, 6, picks);
      CliffordAction act;  // identity
      for (const Matrix& g : picks) act = compose_actions(d, extract_action(d, g, kTol), act);
      for (const PauliLabel& label : all_labels(d)) {
        const PhasedPauli img = apply_action(d, act, {label, 0});
        const Matrix lhs = u * make_pauli(d, label) * u.adjoint();
        const Matrix rhs = make_pauli(d, img.label, img.phase_exp);
        CAPTURE(dim);
        CAPTURE(trial);
        REQUIRE(max_abs_diff(lhs, rhs) < 1e-9);
      }
    }
  }
}

TEST_CASE("projective closure over the generators has the known order") {
  CHECK(clifford_enumerate_projective(PrimeDim(2)).size() == 24);
  CHECK(clifford_enumerate_projective(PrimeDim(3)).size() == 216);
}

TEST_CASE("orbit states are stabilizer projectors") {
  // Averaging the powers of the conjugated phase operator projects onto
  // its +1 eigenspace, a pure stabilizer state.
  for (int dim : {2, 3}) {
    const PrimeDim d(dim);
    for (const CliffordAction& act : clifford_enumerate_projective(d)) {
      const Matrix rho = action_orbit_state(d, act);
      CHECK(max_abs_diff(rho * rho, rho) < 1e-12);
      CHECK(std::abs(rho.trace() - cplx(1.0, 0.0)) < 1e-12);
      CHECK_NOTHROW(check_density(rho, 1e-12, "orbit state"));
    }
  }
}
