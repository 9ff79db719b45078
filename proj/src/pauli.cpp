#include "oneway/pauli.hpp"

namespace oneway {

namespace {

int mod(int v, int m) {
  int r = v % m;
  return r < 0 ? r + m : r;
}

}  // namespace

Matrix make_shift(PrimeDim d) {
  const int n = d.value();
  Matrix x = Matrix::Zero(n, n);
  for (int j = 0; j < n; ++j) x((j + 1) % n, j) = 1.0;
  return x;
}

Matrix make_phase(PrimeDim d) {
  const int n = d.value();
  Matrix z = Matrix::Zero(n, n);
  for (int j = 0; j < n; ++j) z(j, j) = root_of_unity(n, j);
  return z;
}

Matrix make_pauli(PrimeDim d, PauliLabel label, int phase_exp) {
  const int n = d.value();
  const int a1 = mod(label.a1, n);
  const int a2 = mod(label.a2, n);
  // Entry (j+a1, j) of X^a1 Z^a2 is omega^(j*a2); the canonical phase for
  // d = 2 adds i^(a1*a2) on top of the requested phase.
  const cplx front = d.value() == 2 ? quartic_phase(phase_exp + a1 * a2)
                                    : root_of_unity(n, phase_exp);
  Matrix p = Matrix::Zero(n, n);
  for (int j = 0; j < n; ++j) p((j + a1) % n, j) = front * root_of_unity(n, j * a2);
  return p;
}

PhasedPauli pauli_compose(PrimeDim d, const PhasedPauli& p, const PhasedPauli& q) {
  const int n = d.value();
  const int a = mod(p.label.a1, n), b = mod(p.label.a2, n);
  const int ap = mod(q.label.a1, n), bp = mod(q.label.a2, n);
  PhasedPauli r;
  r.label = {(a + ap) % n, (b + bp) % n};
  if (n == 2) {
    // i^(ab) X^a Z^b * i^(a'b') X^a' Z^b' picks up (-1)^(ba') from moving
    // Z^b across X^a', then i^(-AB) converts X^A Z^B back to canonical form.
    r.phase_exp =
        mod(p.phase_exp + q.phase_exp + a * b + ap * bp + 2 * b * ap - r.label.a1 * r.label.a2, 4);
  } else {
    // Z^b X^a' = omega^(ba') X^a' Z^b and exponents reduce mod d exactly.
    r.phase_exp = mod(p.phase_exp + q.phase_exp + b * ap, n);
  }
  return r;
}

PhasedPauli pauli_power(PrimeDim d, const PhasedPauli& p, int c) {
  if (c < 0) throw validation_error("pauli_power: exponent must be nonnegative");
  PhasedPauli acc;  // identity
  for (int i = 0; i < c; ++i) acc = pauli_compose(d, acc, p);
  return acc;
}

std::vector<PauliLabel> all_labels(PrimeDim d) {
  const int n = d.value();
  std::vector<PauliLabel> out;
  out.reserve(static_cast<std::size_t>(n) * n);
  for (int a1 = 0; a1 < n; ++a1)
    for (int a2 = 0; a2 < n; ++a2) out.push_back({a1, a2});
  return out;
}

}  // namespace oneway
