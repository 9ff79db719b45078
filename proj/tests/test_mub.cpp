#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oneway/mub.hpp"

using namespace oneway;

TEST_CASE("each basis is an eigenbasis of its labeled operator") {
  for (int dim : {2, 3, 5, 7}) {
    const PrimeDim d(dim);
    for (int k = 1; k <= dim + 1; ++k) {
      const Matrix op = mub_operator(d, k);
      Matrix resolution = Matrix::Zero(dim, dim);
      for (int j = 0; j < dim; ++j) {
        const Vector psi = mub_state(d, {k, j});
        const cplx eig = dim == 2 ? cplx(j == 0 ? 1.0 : -1.0, 0.0) : root_of_unity(dim, j);
        CHECK(max_abs(Matrix(op * psi - eig * psi)) < 1e-12);
        CHECK(std::abs(psi.norm() - 1.0) < 1e-12);
        // Phase convention: the first nonzero component is real positive.
        Eigen::Index lead = 0;
        while (lead < psi.size() && std::abs(psi(lead)) < 1e-12) ++lead;
        REQUIRE(lead < psi.size());
        CHECK(psi(lead).imag() == 0.0);
        CHECK(psi(lead).real() > 0.0);
        resolution += mub_projector(d, {k, j});
      }
      CHECK(max_abs_diff(resolution, Matrix::Identity(dim, dim)) < 1e-12);
    }
  }
}

TEST_CASE("exact overlaps match dense traces for every state pair") {
  for (int dim : {2, 3, 5}) {
    const PrimeDim d(dim);
    const int total = dim * (dim + 1);
    for (int r1 = 1; r1 <= total; ++r1) {
      for (int r2 = 1; r2 <= total; ++r2) {
        const StabilizerStateId a = vertex_id(d, r1), b = vertex_id(d, r2);
        const Rat exact = overlap(d, a, b);
        const cplx dense = (mub_projector(d, a) * mub_projector(d, b)).trace();
        CAPTURE(dim);
        CAPTURE(r1);
        CAPTURE(r2);
        REQUIRE(std::abs(dense - cplx(to_double(exact), 0.0)) < 1e-12);
        // The three cases, by identity of the pair.
        if (r1 == r2)
          CHECK(exact == Rat(1));
        else if (a.k == b.k)
          CHECK(exact == Rat(0));
        else
          CHECK(exact == Rat(1, dim));
      }
    }
  }
}

TEST_CASE("vertex numbering is a bijection onto basis and eigenvalue pairs") {
  for (int dim : {2, 5}) {
    const PrimeDim d(dim);
    int r = 0;
    for (int k = 1; k <= dim + 1; ++k) {
      for (int j = 0; j < dim; ++j) {
        ++r;
        CHECK(vertex_index(d, {k, j}) == r);
        const StabilizerStateId id = vertex_id(d, r);
        CHECK(id.k == k);
        CHECK(id.j == j);
      }
    }
    CHECK_THROWS_AS(vertex_id(d, 0), validation_error);
    CHECK_THROWS_AS(vertex_id(d, dim * (dim + 1) + 1), validation_error);
    CHECK_THROWS_AS(vertex_index(d, {dim + 2, 0}), validation_error);
    CHECK_THROWS_AS(vertex_index(d, {1, dim}), validation_error);
  }
}

TEST_CASE("stabilizer vertex list is ordered and consistent") {
  const PrimeDim d(3);
  const std::vector<Vertex> verts = stabilizer_vertices(d);
  CHECK(verts.size() == 12);
  for (std::size_t i = 0; i < verts.size(); ++i) {
    CHECK(vertex_index(d, verts[i].id) == static_cast<int>(i) + 1);
    CHECK(max_abs_diff(verts[i].projector, mub_projector(d, verts[i].id)) == 0.0);
  }
}

TEST_CASE("bloch coordinates round trip qubit states") {
  const PrimeDim d(2);
  // The six vertices sit at the axis tips.
  const double expected[6][3] = {{0, 0, 1},  {0, 0, -1}, {1, 0, 0},
                                 {-1, 0, 0}, {0, 1, 0},  {0, -1, 0}};
  for (int r = 1; r <= 6; ++r) {
    const Matrix rho = mub_projector(d, vertex_id(d, r));
    const BlochVector n = bloch_of(rho);
    CHECK(std::abs(n.nx - expected[r - 1][0]) < 1e-12);
    CHECK(std::abs(n.ny - expected[r - 1][1]) < 1e-12);
    CHECK(std::abs(n.nz - expected[r - 1][2]) < 1e-12);
    CHECK(max_abs_diff(state_from_bloch(n), rho) < 1e-12);
  }
  const BlochVector tilted{0.3, -0.4, 0.5};
  const BlochVector back = bloch_of(state_from_bloch(tilted));
  CHECK(std::abs(back.nx - 0.3) < 1e-12);
  CHECK(std::abs(back.ny + 0.4) < 1e-12);
  CHECK(std::abs(back.nz - 0.5) < 1e-12);
  CHECK_THROWS_AS(state_from_bloch(BlochVector{1.0, 1.0, 0.0}), validation_error);
}
