#include "oneway/mub.hpp"

#include <cmath>

namespace oneway {

int vertex_index(PrimeDim d, StabilizerStateId id) {
  check_state_id(d, id);
  return d.value() * (id.k - 1) + id.j + 1;
}

StabilizerStateId vertex_id(PrimeDim d, int r) {
  const int n = d.value();
  if (r < 1 || r > n * (n + 1))
    throw validation_error("vertex index out of range [1, d(d+1)]: " + std::to_string(r));
  return {(r - 1) / n + 1, (r - 1) % n};
}

void check_state_id(PrimeDim d, StabilizerStateId id) {
  const int n = d.value();
  if (id.k < 1 || id.k > n + 1)
    throw validation_error("basis index k out of range [1, d+1]: " + std::to_string(id.k));
  if (id.j < 0 || id.j >= n)
    throw validation_error("eigenvalue index j out of range [0, d): " + std::to_string(id.j));
}

PauliLabel mub_operator_label(PrimeDim d, int k) {
  check_state_id(d, {k, 0});
  return k == 1 ? PauliLabel{0, 1} : PauliLabel{1, k - 2};
}

Matrix mub_operator(PrimeDim d, int k) { return make_pauli(d, mub_operator_label(d, k)); }

Vector mub_state(PrimeDim d, StabilizerStateId id) {
  check_state_id(d, id);
  const int n = d.value();
  Vector v = Vector::Zero(n);
  if (id.k == 1) {
    v(id.j) = 1.0;
  } else if (n == 2) {
    const double s = 1.0 / std::sqrt(2.0);
    v(0) = s;
    v(1) = id.k == 2 ? cplx(id.j == 0 ? s : -s, 0.0) : cplx(0.0, id.j == 0 ? s : -s);
  } else {
    // Recurrence c_{m+1} = omega^(bm - j) c_m for the eigenvector of
    // X Z^b with eigenvalue omega^j, solved in closed form. Exponents are
    // reduced exactly before touching floating point.
    const long long b = id.k - 2;
    const double s = 1.0 / std::sqrt(static_cast<double>(n));
    for (long long m = 0; m < n; ++m)
      v(m) = s * root_of_unity(n, b * m * (m - 1) / 2 - static_cast<long long>(id.j) * m);
  }
  // The first component is real positive by construction; the eigenvalue
  // equation holds to rounding. Both are internal guarantees, checked here
  // so a construction bug can never propagate silently.
  const cplx eig = d.value() == 2 ? cplx(id.j == 0 ? 1.0 : -1.0, 0.0) : root_of_unity(n, id.j);
  const double dev = (mub_operator(d, id.k) * v - eig * v).cwiseAbs().maxCoeff();
  if (dev > 1e-12)
    throw std::logic_error("mub_state: eigenvalue equation violated by " + std::to_string(dev));
  return v;
}

Matrix mub_projector(PrimeDim d, StabilizerStateId id) {
  const Vector v = mub_state(d, id);
  return v * v.adjoint();
}

std::vector<std::vector<Matrix>> mub_projectors(PrimeDim d) {
  const int n = d.value();
  std::vector<std::vector<Matrix>> out(n + 1);
  for (int k = 1; k <= n + 1; ++k) {
    out[k - 1].reserve(n);
    for (int j = 0; j < n; ++j) out[k - 1].push_back(mub_projector(d, {k, j}));
  }
  return out;
}

Rat overlap(PrimeDim d, StabilizerStateId a, StabilizerStateId b) {
  check_state_id(d, a);
  check_state_id(d, b);
  if (a.k == b.k) return a.j == b.j ? Rat(1) : Rat(0);
  return Rat(1, d.value());
}

std::vector<Vertex> stabilizer_vertices(PrimeDim d) {
  const int n = d.value();
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(n) * (n + 1));
  for (int r = 1; r <= n * (n + 1); ++r) {
    const StabilizerStateId id = vertex_id(d, r);
    out.push_back({id, mub_projector(d, id)});
  }
  return out;
}

double BlochVector::norm() const { return std::sqrt(nx * nx + ny * ny + nz * nz); }

BlochVector bloch_of(const Matrix& rho) {
  const PrimeDim two(2);
  check_square(rho, 2, "bloch_of input");
  BlochVector n;
  n.nx = (rho * make_pauli(two, {1, 0})).trace().real();
  n.ny = (rho * make_pauli(two, {1, 1})).trace().real();
  n.nz = (rho * make_pauli(two, {0, 1})).trace().real();
  return n;
}

Matrix state_from_bloch(const BlochVector& n) {
  if (n.norm() > 1.0 + 1e-12)
    throw validation_error("bloch vector outside unit ball: |n| = " + std::to_string(n.norm()));
  const PrimeDim two(2);
  Matrix rho = Matrix::Identity(2, 2);
  rho += n.nx * make_pauli(two, {1, 0});
  rho += n.ny * make_pauli(two, {1, 1});
  rho += n.nz * make_pauli(two, {0, 1});
  return rho / 2.0;
}

}  // namespace oneway
