#pragma once

#include <vector>

#include "oneway/pauli.hpp"

namespace oneway {

enum class CliffordStatus { yes, no, indeterminate };

// Image of a generator under conjugation: U G U^dag = phase * P_label.
// The phase is an arbitrary unit complex in general; when it lies within
// tolerance of an exact power of i (d = 2) or omega (d > 2) it is also
// reported as that exponent.
struct ConjugateImage {
  PauliLabel label;
  cplx phase = 1.0;
  bool phase_is_exact = false;
  int phase_exp = 0;
};

struct CliffordVerdict {
  CliffordStatus status = CliffordStatus::no;
  ConjugateImage x_image;  // meaningful only when status == yes
  ConjugateImage z_image;
  // Largest coefficient magnitude left unexplained by the single-Pauli
  // image (0 for a clean Clifford, the stray mass otherwise).
  double residual = 0.0;
};

// Decides whether the unitary u normalizes the Pauli group by expanding
// U X U^dag and U Z U^dag in the Pauli basis. Clifford iff each expansion
// has exactly one nonvanishing coefficient, of unit modulus. Coefficients
// with magnitude in [tol, 10*tol] are neither clearly zero nor clearly
// present; any such coefficient makes the verdict indeterminate rather
// than guessing. Throws validation_error if u is not unitary within tol.
// Invariant under global phase of u.
CliffordVerdict is_clifford(PrimeDim d, const Matrix& u, double tol = 1e-9);

// A projective Clifford element, represented by its conjugation action on
// the two generators. Phase exponents are exact integers, so group
// arithmetic on actions is exact.
struct CliffordAction {
  PhasedPauli x_image{{1, 0}, 0};
  PhasedPauli z_image{{0, 1}, 0};
  bool operator==(const CliffordAction&) const = default;
  bool operator<(const CliffordAction& o) const;
};

// Image of an arbitrary phased Pauli under the action.
PhasedPauli apply_action(PrimeDim d, const CliffordAction& act, const PhasedPauli& p);

// (g o h)(P) = g(h(P)), matching unitary composition U_g U_h.
CliffordAction compose_actions(PrimeDim d, const CliffordAction& g, const CliffordAction& h);

// is_clifford specialized to gates whose image phases snap to exact
// exponents; throws validation_error when they do not.
CliffordAction extract_action(PrimeDim d, const Matrix& u, double tol = 1e-9);

// Density matrix U |0><0| U^dag, reconstructed from the action alone via
// the stabilizer sum (1/d) * sum_c (U Z U^dag)^c.
Matrix action_orbit_state(PrimeDim d, const CliffordAction& act);

// Dense generators. F is the discrete Fourier transform; S is diag(1, i)
// for d = 2 and |j> -> omega^(j(j-1)/2) |j> for odd d.
Matrix clifford_fourier(PrimeDim d);
Matrix clifford_sgate(PrimeDim d);

// Closure of {F, S, X, Z} under composition of exact actions. Supported
// for d in {2, 3}; sizes are 24 and 216 (d^2 times |SL(2, Z_d)|).
std::vector<CliffordAction> clifford_enumerate_projective(PrimeDim d);

}  // namespace oneway
