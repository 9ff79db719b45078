#pragma once

#include "oneway/dense.hpp"
#include "oneway/prime_dim.hpp"

namespace oneway {

// Label (a1, a2) of the displacement operator built from the cyclic shift X
// and the clock Z, with the dimension-dependent canonical phase:
//   d = 2 :  P_(a1,a2) = i^(a1*a2) X^a1 Z^a2      (P_(1,1) is the standard Y)
//   d > 2 :  P_(a1,a2) = X^a1 Z^a2
// Components are always stored reduced mod d.
struct PauliLabel {
  int a1 = 0;
  int a2 = 0;
  bool operator==(const PauliLabel&) const = default;
  bool operator<(const PauliLabel& o) const {
    return a1 != o.a1 ? a1 < o.a1 : a2 < o.a2;
  }
};

// Phase exponents live in Z_4 (powers of i) for d = 2 and in Z_d (powers of
// omega) for odd prime d. This is the group actually generated by Pauli
// products in each case.
inline int phase_modulus(PrimeDim d) { return d.value() == 2 ? 4 : d.value(); }

// A canonical Pauli scaled by a unit phase:
//   d = 2 :  i^phase_exp     * P_label
//   d > 2 :  omega^phase_exp * P_label
struct PhasedPauli {
  PauliLabel label;
  int phase_exp = 0;
  bool operator==(const PhasedPauli&) const = default;
};

// Numeric value of the phase: i^k (d = 2) or omega^k (d > 2).
inline cplx phase_value(PrimeDim d, long long k) {
  return d.value() == 2 ? quartic_phase(k) : root_of_unity(d.value(), k);
}

// Dense d x d matrices. X|j> = |j+1 mod d>, Z|j> = omega^j |j>.
Matrix make_shift(PrimeDim d);
Matrix make_phase(PrimeDim d);
Matrix make_pauli(PrimeDim d, PauliLabel label, int phase_exp = 0);

// Exact group law: returns r with r == p * q as operators. Integer
// arithmetic throughout; no floating point is involved.
PhasedPauli pauli_compose(PrimeDim d, const PhasedPauli& p, const PhasedPauli& q);

// p^c for c >= 0, by repeated composition.
PhasedPauli pauli_power(PrimeDim d, const PhasedPauli& p, int c);

// All d*d canonical labels in lexicographic order, (0,0) first.
std::vector<PauliLabel> all_labels(PrimeDim d);

}  // namespace oneway
