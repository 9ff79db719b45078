#include "oneway/clifford.hpp"

#include <deque>
#include <set>
#include <tuple>

namespace oneway {

namespace {

int mod(int v, int m) {
  int r = v % m;
  return r < 0 ? r + m : r;
}

struct PauliExpansion {
  bool single = false;  // exactly one coefficient, of unit modulus
  bool indeterminate = false;
  ConjugateImage image;
  double residual = 0.0;
};

// Expands c in the canonical Pauli basis: coef_L = Tr(P_L^dag c) / d.
// For unitary input the coefficient magnitudes square-sum to 1, so a single
// clean coefficient is automatically of unit modulus up to O(d^2 tol^2).
PauliExpansion expand_in_pauli_basis(PrimeDim d, const Matrix& c, double tol) {
  const int n = d.value();
  PauliExpansion out;
  double best = -1.0, second = 0.0;
  PauliLabel best_label;
  cplx best_coef;
  int clearly_present = 0;
  bool in_band = false;
  for (const PauliLabel& label : all_labels(d)) {
    const cplx coef = (make_pauli(d, label).adjoint() * c).trace() / static_cast<double>(n);
    const double mag = std::abs(coef);
    if (mag >= tol && mag < 10.0 * tol) in_band = true;
    if (mag >= 10.0 * tol) ++clearly_present;
    if (mag > best) {
      second = std::max(second, best);
      best = mag;
      best_label = label;
      best_coef = coef;
    } else if (mag > second) {
      second = mag;
    }
  }
  out.residual = second;
  if (in_band) {
    out.indeterminate = true;
    return out;
  }
  if (clearly_present == 1 && std::abs(best - 1.0) <= 10.0 * tol) {
    out.single = true;
    out.image.label = best_label;
    out.image.phase = best_coef;
    const int pm = phase_modulus(d);
    for (int k = 0; k < pm; ++k) {
      if (std::abs(best_coef - phase_value(d, k)) <= 10.0 * tol) {
        out.image.phase_is_exact = true;
        out.image.phase_exp = k;
        break;
      }
    }
  }
  return out;
}

}  // namespace

CliffordVerdict is_clifford(PrimeDim d, const Matrix& u, double tol) {
  check_square(u, d.value(), "is_clifford input");
  check_unitary(u, tol, "is_clifford input");
  const PauliExpansion ex = expand_in_pauli_basis(d, u * make_shift(d) * u.adjoint(), tol);
  const PauliExpansion ez = expand_in_pauli_basis(d, u * make_phase(d) * u.adjoint(), tol);
  CliffordVerdict v;
  v.residual = std::max(ex.residual, ez.residual);
  if (ex.indeterminate || ez.indeterminate) {
    v.status = CliffordStatus::indeterminate;
  } else if (ex.single && ez.single) {
    v.status = CliffordStatus::yes;
    v.x_image = ex.image;
    v.z_image = ez.image;
  } else {
    v.status = CliffordStatus::no;
  }
  return v;
}

bool CliffordAction::operator<(const CliffordAction& o) const {
  return std::tie(x_image.label.a1, x_image.label.a2, x_image.phase_exp, z_image.label.a1,
                  z_image.label.a2, z_image.phase_exp) <
         std::tie(o.x_image.label.a1, o.x_image.label.a2, o.x_image.phase_exp,
                  o.z_image.label.a1, o.z_image.label.a2, o.z_image.phase_exp);
}

PhasedPauli apply_action(PrimeDim d, const CliffordAction& act, const PhasedPauli& p) {
  const int n = d.value();
  const int l1 = mod(p.label.a1, n), l2 = mod(p.label.a2, n);
  PhasedPauli out = pauli_compose(d, pauli_power(d, act.x_image, l1),
                                  pauli_power(d, act.z_image, l2));
  // P_(l1,l2) = i^(l1 l2) X^l1 Z^l2 for d = 2, so the canonical prefactor
  // rides along; for odd d there is none.
  const int extra = p.phase_exp + (n == 2 ? l1 * l2 : 0);
  out.phase_exp = mod(out.phase_exp + extra, phase_modulus(d));
  return out;
}

CliffordAction compose_actions(PrimeDim d, const CliffordAction& g, const CliffordAction& h) {
  return {apply_action(d, g, h.x_image), apply_action(d, g, h.z_image)};
}

CliffordAction extract_action(PrimeDim d, const Matrix& u, double tol) {
  const CliffordVerdict v = is_clifford(d, u, tol);
  if (v.status != CliffordStatus::yes)
    throw validation_error("extract_action: matrix is not Clifford");
  if (!v.x_image.phase_is_exact || !v.z_image.phase_is_exact)
    throw validation_error("extract_action: image phases do not snap to exact exponents");
  return {{v.x_image.label, v.x_image.phase_exp}, {v.z_image.label, v.z_image.phase_exp}};
}

Matrix action_orbit_state(PrimeDim d, const CliffordAction& act) {
  const int n = d.value();
  Matrix acc = Matrix::Zero(n, n);
  for (int c = 0; c < n; ++c) {
    const PhasedPauli zc = pauli_power(d, act.z_image, c);
    acc += make_pauli(d, zc.label, zc.phase_exp);
  }
  return acc / static_cast<double>(n);
}

Matrix clifford_fourier(PrimeDim d) {
  const int n = d.value();
  Matrix f(n, n);
  const double norm = 1.0 / std::sqrt(static_cast<double>(n));
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) f(j, k) = norm * root_of_unity(n, static_cast<long long>(j) * k);
  return f;
}

Matrix clifford_sgate(PrimeDim d) {
  const int n = d.value();
  Matrix s = Matrix::Zero(n, n);
  if (n == 2) {
    s(0, 0) = 1.0;
    s(1, 1) = cplx(0.0, 1.0);
  } else {
    for (int j = 0; j < n; ++j) s(j, j) = root_of_unity(n, static_cast<long long>(j) * (j - 1) / 2);
  }
  return s;
}

std::vector<CliffordAction> clifford_enumerate_projective(PrimeDim d) {
  const int n = d.value();
  if (n != 2 && n != 3)
    throw validation_error("clifford_enumerate_projective: supported for d in {2, 3}");
  const std::vector<CliffordAction> gens = {
      extract_action(d, clifford_fourier(d)),
      extract_action(d, clifford_sgate(d)),
      extract_action(d, make_pauli(d, {1, 0})),
      extract_action(d, make_pauli(d, {0, 1})),
  };
  std::set<CliffordAction> seen;
  std::deque<CliffordAction> frontier;
  seen.insert(CliffordAction{});
  frontier.push_back(CliffordAction{});
  while (!frontier.empty()) {
    const CliffordAction cur = frontier.front();
    frontier.pop_front();
    for (const CliffordAction& g : gens) {
      const CliffordAction next = compose_actions(d, g, cur);
      if (seen.insert(next).second) {
        frontier.push_back(next);
        if (seen.size() > 100000)
          throw std::runtime_error("clifford_enumerate_projective: closure exceeded bound");
      }
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace oneway
