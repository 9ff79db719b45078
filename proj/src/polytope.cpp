#include "oneway/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace oneway {

namespace {

// Isometric real coordinates of a Hermitian d x d matrix: diagonal first,
// then (sqrt(2) Re, sqrt(2) Im) of the upper triangle row by row. The map
// satisfies x(M) . x(N) = Tr(M N), so LP functionals transfer verbatim.
std::vector<double> hermitian_coords(const Matrix& m) {
  const auto d = m.rows();
  std::vector<double> x;
  x.reserve(static_cast<std::size_t>(d) * d);
  for (Eigen::Index i = 0; i < d; ++i) x.push_back(m(i, i).real());
  const double s = std::sqrt(2.0);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = i + 1; j < d; ++j) {
      x.push_back(s * m(i, j).real());
      x.push_back(s * m(i, j).imag());
    }
  return x;
}

Matrix hermitian_from_coords(int d, const std::vector<double>& x) {
  Matrix m = Matrix::Zero(d, d);
  std::size_t pos = 0;
  for (int i = 0; i < d; ++i) m(i, i) = x[pos++];
  const double s = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      const double re = x[pos++] * s;
      const double im = x[pos++] * s;
      m(i, j) = cplx(re, im);
      m(j, i) = cplx(re, -im);
    }
  return m;
}

struct PhaseOneResult {
  bool feasible = false;
  double objective = 0.0;      // minimal total artificial mass, ~0 iff feasible
  std::vector<double> x;       // structural solution when feasible
  std::vector<double> y;       // Farkas dual when infeasible: y.A <= 0, y.b > 0
};

// Phase-I simplex with Bland's rule on the system A x = b, x >= 0.
// Dense tableau; columns are [structural | artificial | rhs]. Bland's rule
// guarantees termination, and the artificial reduced costs at optimality
// yield the dual vector y_i = 1 - rc_i exactly when the system is
// infeasible (Farkas certificate).
PhaseOneResult phase_one(std::vector<std::vector<double>> a, std::vector<double> b) {
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a[0].size();
  constexpr double rc_eps = 1e-12;
  constexpr double piv_eps = 1e-11;

  std::vector<double> flip(m, 1.0);
  for (std::size_t i = 0; i < m; ++i)
    if (b[i] < 0.0) {
      flip[i] = -1.0;
      b[i] = -b[i];
      for (double& v : a[i]) v = -v;
    }

  const std::size_t cols = n + m;
  std::vector<std::vector<double>> t(m, std::vector<double>(cols + 1, 0.0));
  for (std::size_t i = 0; i < m; ++i) {
    std::copy(a[i].begin(), a[i].end(), t[i].begin());
    t[i][n + i] = 1.0;
    t[i][cols] = b[i];
  }
  // Reduced costs for cost vector (0,...,0,1,...,1) with artificial basis.
  std::vector<double> rc(cols, 0.0);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < m; ++i) rc[j] -= t[i][j];

  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  for (;;) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (rc[j] < -rc_eps) {
        enter = j;
        break;
      }
    if (enter == cols) break;

    std::size_t leave = m;
    double best_ratio = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= piv_eps) continue;
      const double ratio = t[i][cols] / t[i][enter];
      if (leave == m || ratio < best_ratio - rc_eps ||
          (ratio < best_ratio + rc_eps && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m)
      throw std::runtime_error("phase_one: unbounded pivot column, tableau is corrupt");

    const double piv = t[leave][enter];
    for (double& v : t[leave]) v /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave) continue;
      const double f = t[i][enter];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j <= cols; ++j) t[i][j] -= f * t[leave][j];
    }
    const double fr = rc[enter];
    for (std::size_t j = 0; j < cols; ++j) rc[j] -= fr * t[leave][j];
    basis[leave] = enter;
  }

  // Remaining artificial mass, read off the final basis directly.
  double value = 0.0;
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] >= n) value += t[i][cols];

  PhaseOneResult out;
  out.objective = value;
  out.feasible = value <= 1e-11;
  if (out.feasible) {
    out.x.assign(n, 0.0);
    for (std::size_t i = 0; i < m; ++i)
      if (basis[i] < n) out.x[basis[i]] = std::max(0.0, t[i][cols]);
  } else {
    out.y.assign(m, 0.0);
    for (std::size_t i = 0; i < m; ++i) out.y[i] = (1.0 - rc[n + i]) * flip[i];
  }
  return out;
}

struct VertexLp {
  std::vector<std::vector<double>> a;  // (d*d + 1) rows, d(d+1) columns
  std::vector<Vertex> vertices;
};

// Columns are the vertex coordinates; the extra all-ones row enforces that
// the weights form a probability distribution.
VertexLp build_vertex_lp(PrimeDim d) {
  VertexLp lp;
  lp.vertices = stabilizer_vertices(d);
  const std::size_t rows = static_cast<std::size_t>(d.value()) * d.value() + 1;
  lp.a.assign(rows, std::vector<double>(lp.vertices.size(), 0.0));
  for (std::size_t c = 0; c < lp.vertices.size(); ++c) {
    const std::vector<double> col = hermitian_coords(lp.vertices[c].projector);
    for (std::size_t r = 0; r + 1 < rows; ++r) lp.a[r][c] = col[r];
    lp.a[rows - 1][c] = 1.0;
  }
  return lp;
}

std::vector<double> rhs_for_state(const Matrix& rho) {
  std::vector<double> b = hermitian_coords(rho);
  b.push_back(1.0);
  return b;
}

[[noreturn]] void certificate_failure(const char* which, double magnitude) {
  std::ostringstream os;
  os << "polytope_membership: " << which
     << " certificate failed verification (deviation " << magnitude
     << "); the LP is ill-conditioned for this input";
  throw std::runtime_error(os.str());
}

}  // namespace

PolytopeCertificate polytope_membership(PrimeDim d, const Matrix& rho, double tol) {
  check_density(rho, tol, "polytope_membership input");
  const VertexLp lp = build_vertex_lp(d);
  const PhaseOneResult r = phase_one(lp.a, rhs_for_state(rho));

  PolytopeCertificate cert;
  if (r.feasible) {
    cert.inside = true;
    cert.weights = r.x;
    double wsum = 0.0;
    Matrix recon = Matrix::Zero(d.value(), d.value());
    for (std::size_t i = 0; i < cert.weights.size(); ++i) {
      wsum += cert.weights[i];
      recon += cert.weights[i] * lp.vertices[i].projector;
    }
    cert.reconstruction_error = max_abs_diff(recon, rho);
    if (cert.reconstruction_error > 1e-9) certificate_failure("inside", cert.reconstruction_error);
    if (std::abs(wsum - 1.0) > 1e-9) certificate_failure("inside", std::abs(wsum - 1.0));
    return cert;
  }

  // The Farkas dual is scale free; normalize before reading off margins.
  std::vector<double> y = r.y;
  double ymax = 0.0;
  for (double v : y) ymax = std::max(ymax, std::abs(v));
  if (ymax <= 0.0) certificate_failure("outside", 0.0);
  for (double& v : y) v /= ymax;

  cert.inside = false;
  cert.separating_offset = y.back();
  y.pop_back();
  cert.separating_hermitian = hermitian_from_coords(d.value(), y);

  double worst_vertex = -1e300;
  for (const Vertex& v : lp.vertices) {
    const double fv =
        (cert.separating_hermitian * v.projector).trace().real() + cert.separating_offset;
    worst_vertex = std::max(worst_vertex, fv);
  }
  const double fstate =
      (cert.separating_hermitian * rho).trace().real() + cert.separating_offset;
  cert.margin = fstate - worst_vertex;
  if (worst_vertex > 1e-10) certificate_failure("outside", worst_vertex);
  if (fstate <= 1e-11 || cert.margin <= 0.0) certificate_failure("outside", fstate);
  return cert;
}

MagicValue magic_l1(PrimeDim d, const Matrix& rho, double tol) {
  if (d.value() != 2) return magic_l1_lp(d, rho, tol);
  check_density(rho, tol, "magic_l1 input");
  const BlochVector n = bloch_of(rho);
  MagicValue mv;
  mv.value = std::max(0.0, std::abs(n.nx) + std::abs(n.ny) + std::abs(n.nz) - 1.0);
  return mv;
}

MagicValue magic_l1_lp(PrimeDim d, const Matrix& rho, double tol) {
  check_density(rho, tol, "magic_l1_lp input");
  const VertexLp lp = build_vertex_lp(d);
  const Matrix mixed = Matrix::Identity(d.value(), d.value()) / static_cast<double>(d.value());
  const auto feasible_at = [&](double t) {
    const Matrix state = (rho + t * mixed) / (1.0 + t);
    return phase_one(lp.a, rhs_for_state(state)).feasible;
  };

  MagicValue mv;
  if (feasible_at(0.0)) return mv;  // value 0 exactly; faithfulness hinges on this
  double lo = 0.0, hi = 1.0;
  while (!feasible_at(hi)) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e6)
      throw std::runtime_error("magic_l1_lp: no feasible mixing level found; input suspect");
  }
  while (hi - lo > 1e-12 * std::max(1.0, hi)) {
    const double mid = 0.5 * (lo + hi);
    (feasible_at(mid) ? hi : lo) = mid;
  }
  mv.value = hi;  // the provably feasible end of the bracket
  return mv;
}

}  // namespace oneway
