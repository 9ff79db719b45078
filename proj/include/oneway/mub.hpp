#pragma once

#include <vector>

#include "oneway/pauli.hpp"
#include "oneway/rational.hpp"

namespace oneway {

// Names the j-th eigenstate of the k-th mutually unbiased basis. Basis
// k = 1 belongs to Z = P_(0,1); basis k = 2..d+1 belongs to P_(1,k-2).
// State (k, j) has eigenvalue omega^j ((-1)^j for d = 2).
struct StabilizerStateId {
  int k = 1;
  int j = 0;
  bool operator==(const StabilizerStateId&) const = default;
};

// Flat index r = d(k-1) + j + 1, running over [1, d(d+1)].
int vertex_index(PrimeDim d, StabilizerStateId id);
StabilizerStateId vertex_id(PrimeDim d, int r);

// Throws validation_error unless k in [1, d+1] and j in [0, d).
void check_state_id(PrimeDim d, StabilizerStateId id);

PauliLabel mub_operator_label(PrimeDim d, int k);
Matrix mub_operator(PrimeDim d, int k);

// Unit eigenvector, phase fixed so the first nonzero component is real and
// positive. Built from the closed form (basis k >= 2 has components
// omega^((k-2) m(m-1)/2 - j m) / sqrt(d)), then checked against the
// eigenvalue equation to 1e-12.
Vector mub_state(PrimeDim d, StabilizerStateId id);
Matrix mub_projector(PrimeDim d, StabilizerStateId id);

// All d+1 bases: result[k-1][j] is the projector onto state (k, j).
std::vector<std::vector<Matrix>> mub_projectors(PrimeDim d);

// Exact Tr(proj_a proj_b): 1 if a == b, 0 for distinct states of one
// basis, 1/d across bases.
Rat overlap(PrimeDim d, StabilizerStateId a, StabilizerStateId b);

// Extreme points of the stabilizer polytope, ordered by vertex_index.
struct Vertex {
  StabilizerStateId id;
  Matrix projector;
};
std::vector<Vertex> stabilizer_vertices(PrimeDim d);

// Qubit Bloch coordinates: n = (Tr rho X, Tr rho Y, Tr rho Z).
struct BlochVector {
  double nx = 0.0, ny = 0.0, nz = 0.0;
  double norm() const;
};
BlochVector bloch_of(const Matrix& rho);
// (I + n . sigma) / 2. Throws validation_error when |n| > 1 + 1e-12.
Matrix state_from_bloch(const BlochVector& n);

}  // namespace oneway
