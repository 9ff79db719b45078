#pragma once

#include <vector>

#include "oneway/mub.hpp"

namespace oneway {

// Verdict of a stabilizer-polytope membership test. Exactly one certificate
// is populated and it is re-verified by substitution before returning; an
// unverifiable certificate raises an error rather than a silent verdict.
//   inside:  weights are nonnegative, sum to 1 within 1e-12, and
//            reconstruct the state entrywise within 1e-9.
//   outside: the affine functional F(M) = Tr(H M) + offset satisfies
//            F(vertex) <= 0 on every vertex while F(state) > 0; margin is
//            F(state) - max_vertex F(vertex), with max|coeff| normalized
//            to 1 so margins are comparable across calls.
struct PolytopeCertificate {
  bool inside = false;
  std::vector<double> weights;
  double reconstruction_error = 0.0;
  Matrix separating_hermitian;
  double separating_offset = 0.0;
  double margin = 0.0;
};

// Feasibility of rho = sum_r w_r V_r, w >= 0, sum w = 1 over the d(d+1)
// basis projectors, decided by linear programming in the isometric real
// parametrization of Hermitian space. rho must be a valid density matrix
// (checked against tol).
PolytopeCertificate polytope_membership(PrimeDim d, const Matrix& rho, double tol = 1e-9);

struct MagicValue {
  double value = 0.0;
  // Amount of maximally mixed state needed to reach the polytope: the
  // smallest t >= 0 with (rho + t I/d) / (1+t) inside.
  std::string measure = "mixing-robustness";
};

// Closed form for d = 2 (max(0, |n|_1 - 1) in Bloch coordinates), LP
// bisection for d > 2. Faithful: 0 exactly iff the state is inside.
MagicValue magic_l1(PrimeDim d, const Matrix& rho, double tol = 1e-9);

// The LP bisection route for any prime d, kept callable on d = 2 so the
// closed form and the LP can be checked against each other.
MagicValue magic_l1_lp(PrimeDim d, const Matrix& rho, double tol = 1e-9);

}  // namespace oneway
