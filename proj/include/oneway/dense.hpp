#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>

#include "oneway/prime_dim.hpp"

namespace oneway {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Largest entrywise absolute value; the distance measure used by every
// "within tol" contract on dense operators.
inline double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

inline double max_abs_diff(const Matrix& a, const Matrix& b) { return max_abs(a - b); }

// Primitive d-th root of unity omega^k, with k reduced exactly before the
// trig call so large exponents lose no precision.
inline cplx root_of_unity(int d, long long k) {
  long long r = k % d;
  if (r < 0) r += d;
  constexpr double two_pi = 6.283185307179586476925286766559;
  return std::polar(1.0, two_pi * static_cast<double>(r) / static_cast<double>(d));
}

// i^k for the qubit phase group.
inline cplx quartic_phase(long long k) {
  long long r = k % 4;
  if (r < 0) r += 4;
  switch (r) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

// Validators throw validation_error naming the broken invariant and the
// observed magnitude. `what` labels the operator in the message.

void check_square(const Matrix& m, int dim, const std::string& what);
void check_unitary(const Matrix& u, double tol, const std::string& what);
void check_hermitian(const Matrix& m, double tol, const std::string& what);
// Hermitian, unit trace, positive semidefinite (eigenvalues >= -tol).
void check_density(const Matrix& rho, double tol, const std::string& what);
// Each effect Hermitian with spectrum in [-tol, 1+tol]; effects sum to identity.
void check_povm(const std::vector<Matrix>& effects, double tol, const std::string& what);

// True when the effects are linearly independent as vectors in d*d
// Hermitian space. A diagnostic aid only: linear independence is necessary
// but not sufficient for extremality of a measurement.
bool povm_effects_linearly_independent(const std::vector<Matrix>& effects, double tol);

}  // namespace oneway
