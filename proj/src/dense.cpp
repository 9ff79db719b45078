#include "oneway/dense.hpp"

#include <Eigen/Eigenvalues>
#include <sstream>

namespace oneway {

namespace {

[[noreturn]] void fail(const std::string& what, const std::string& invariant, double magnitude) {
  std::ostringstream os;
  os << what << ": " << invariant << " (deviation " << magnitude << ")";
  throw validation_error(os.str());
}

}  // namespace

void check_square(const Matrix& m, int dim, const std::string& what) {
  if (m.rows() != dim || m.cols() != dim)
    throw validation_error(what + ": expected " + std::to_string(dim) + "x" +
                           std::to_string(dim) + " matrix, got " + std::to_string(m.rows()) +
                           "x" + std::to_string(m.cols()));
}

void check_unitary(const Matrix& u, double tol, const std::string& what) {
  if (u.rows() != u.cols()) throw validation_error(what + ": unitary must be square");
  const Matrix gram = u.adjoint() * u;
  const double dev = max_abs_diff(gram, Matrix::Identity(u.rows(), u.cols()));
  if (dev > tol) fail(what, "not unitary: U^dag U != I", dev);
}

void check_hermitian(const Matrix& m, double tol, const std::string& what) {
  if (m.rows() != m.cols()) throw validation_error(what + ": hermitian must be square");
  const double dev = max_abs_diff(m, m.adjoint());
  if (dev > tol) fail(what, "not hermitian", dev);
}

void check_density(const Matrix& rho, double tol, const std::string& what) {
  check_hermitian(rho, tol, what);
  const double trace_dev = std::abs(rho.trace() - cplx(1.0, 0.0));
  if (trace_dev > tol) fail(what, "trace != 1", trace_dev);
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho, Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < -tol) fail(what, "not positive semidefinite", -min_eig);
}

void check_povm(const std::vector<Matrix>& effects, double tol, const std::string& what) {
  if (effects.empty()) throw validation_error(what + ": measurement needs at least one effect");
  const auto dim = effects.front().rows();
  Matrix sum = Matrix::Zero(dim, dim);
  for (std::size_t i = 0; i < effects.size(); ++i) {
    const std::string label = what + " effect " + std::to_string(i);
    if (effects[i].rows() != dim || effects[i].cols() != dim)
      throw validation_error(label + ": dimension mismatch");
    check_hermitian(effects[i], tol, label);
    Eigen::SelfAdjointEigenSolver<Matrix> es(effects[i], Eigen::EigenvaluesOnly);
    const double lo = es.eigenvalues().minCoeff();
    const double hi = es.eigenvalues().maxCoeff();
    if (lo < -tol) fail(label, "not positive semidefinite", -lo);
    if (hi > 1.0 + tol) fail(label, "eigenvalue above 1", hi - 1.0);
    sum += effects[i];
  }
  const double dev = max_abs_diff(sum, Matrix::Identity(dim, dim));
  if (dev > tol) fail(what, "effects do not sum to identity", dev);
}

bool povm_effects_linearly_independent(const std::vector<Matrix>& effects, double tol) {
  if (effects.empty()) return true;
  const auto d = effects.front().rows();
  // Flatten each effect into a real vector (real and imaginary parts) and
  // rank-check the stack.
  Eigen::MatrixXd stack(static_cast<Eigen::Index>(effects.size()), 2 * d * d);
  for (std::size_t i = 0; i < effects.size(); ++i) {
    Eigen::Index col = 0;
    for (Eigen::Index r = 0; r < d; ++r)
      for (Eigen::Index c = 0; c < d; ++c) {
        stack(static_cast<Eigen::Index>(i), col++) = effects[i](r, c).real();
        stack(static_cast<Eigen::Index>(i), col++) = effects[i](r, c).imag();
      }
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(stack.transpose());
  qr.setThreshold(tol);
  return static_cast<std::size_t>(qr.rank()) == effects.size();
}

}  // namespace oneway
