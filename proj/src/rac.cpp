#include "oneway/rac.hpp"

#include <cmath>
#include <optional>

namespace oneway {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<std::string> bit_strings(int n) {
  std::vector<std::string> out;
  out.reserve(std::size_t{1} << n);
  for (std::size_t x = 0; x < (std::size_t{1} << n); ++x) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int y = 0; y < n; ++y)
      if ((x >> (n - 1 - y)) & 1) s[static_cast<std::size_t>(y)] = '1';
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<std::string> question_labels(int n) {
  std::vector<std::string> out;
  for (int y = 1; y <= n; ++y) out.push_back(std::to_string(y));
  return out;
}

// Bloch axis read off by basis k: Z measures nz, X measures nx, Y ny.
double axis_component(int k, const BlochVector& n) {
  switch (k) {
    case 1: return n.nz;
    case 2: return n.nx;
    default: return n.ny;
  }
}

// The six basis eigenstates as Bloch vectors, in vertex order.
BlochVector vertex_bloch(StabilizerStateId id) {
  const double s = id.j == 0 ? 1.0 : -1.0;
  if (id.k == 1) return {0.0, 0.0, s};
  if (id.k == 2) return {s, 0.0, 0.0};
  return {0.0, s, 0.0};
}

void check_bases(const RacTask& task, const std::vector<int>& basis_per_y) {
  if (basis_per_y.size() != static_cast<std::size_t>(task.n_bits()))
    throw validation_error("need one measured basis per question");
  for (int k : basis_per_y)
    if (k < 1 || k > 3) throw validation_error("qubit basis index must be 1, 2, or 3");
}

// Per-string coefficient vector of a fixed-basis protocol: the success is
// 1/2 + (c . n) / (2N) per string, with c accumulating (-1)^bit onto the
// axis each question measures.
BlochVector coefficient_vector(const RacTask& task, const std::vector<int>& basis_per_y,
                               std::size_t x) {
  BlochVector c{0.0, 0.0, 0.0};
  for (int y = 0; y < task.n_bits(); ++y) {
    const double sign = task.bit(x, y) == 0 ? 1.0 : -1.0;
    switch (basis_per_y[static_cast<std::size_t>(y)]) {
      case 1: c.nz += sign; break;
      case 2: c.nx += sign; break;
      default: c.ny += sign; break;
    }
  }
  return c;
}

// Exact per-string brace at a vertex: integer because every coefficient is
// an integer and the vertex is a signed axis.
long long vertex_brace(const RacTask& task, const std::vector<int>& basis_per_y, std::size_t x,
                       StabilizerStateId v) {
  long long brace = 0;
  for (int y = 0; y < task.n_bits(); ++y) {
    const int k = basis_per_y[static_cast<std::size_t>(y)];
    const long long sign = task.bit(x, y) == 0 ? 1 : -1;
    if (k == v.k) brace += sign * (v.j == 0 ? 1 : -1);
  }
  return brace;
}

struct SphereSearch {
  BlochVector argmax;
  double best = 0.0;
  std::uint64_t evaluations = 0;
};

// Maximize the linear form c . n over the unit sphere by coarse grid plus
// box refinement. The optimum is |c| at n = c/|c|; the search exists to
// stay independent of that fact so the two can be compared.
SphereSearch maximize_on_sphere(const BlochVector& c, double refine_tol) {
  SphereSearch out;
  const auto eval = [&](double theta, double phi) {
    const BlochVector n{std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
                        std::cos(theta)};
    ++out.evaluations;
    return c.nx * n.nx + c.ny * n.ny + c.nz * n.nz;
  };
  double best_theta = 0.0, best_phi = 0.0;
  out.best = eval(0.0, 0.0);
  for (int i = 0; i <= 30; ++i)
    for (int j = 0; j < 60; ++j) {
      const double theta = kPi * i / 30.0, phi = 2.0 * kPi * j / 60.0;
      const double v = eval(theta, phi);
      if (v > out.best) {
        out.best = v;
        best_theta = theta;
        best_phi = phi;
      }
    }
  double h = kPi / 30.0;
  while (h > refine_tol) {
    double next_theta = best_theta, next_phi = best_phi;
    for (int i = -4; i <= 4; ++i)
      for (int j = -4; j <= 4; ++j) {
        const double theta = best_theta + h * i / 4.0;
        const double phi = best_phi + h * j / 4.0;
        if (theta < 0.0 || theta > kPi) continue;
        const double v = eval(theta, phi);
        if (v > out.best) {
          out.best = v;
          next_theta = theta;
          next_phi = phi;
        }
      }
    best_theta = next_theta;
    best_phi = next_phi;
    h *= 0.5;
  }
  out.argmax = {std::sin(best_theta) * std::cos(best_phi),
                std::sin(best_theta) * std::sin(best_phi), std::cos(best_theta)};
  return out;
}

double bloch_norm(const BlochVector& c) {
  return std::sqrt(c.nx * c.nx + c.ny * c.ny + c.nz * c.nz);
}

}  // namespace

RacTask::RacTask(int n_bits)
    : n_(n_bits),
      spaces_((n_bits >= 1 && n_bits <= 16)
                  ? TaskSpaces(PrimeDim(2), bit_strings(n_bits), question_labels(n_bits),
                               {"0", "1"})
                  : throw validation_error("bit count must be in [1, 16], got " +
                                           std::to_string(n_bits))) {}

int RacTask::bit(std::size_t x, int y) const {
  if (x >= n_strings() || y < 0 || y >= n_)
    throw validation_error("string or question index out of range");
  return static_cast<int>((x >> (n_ - 1 - y)) & 1);
}

PayoffTable rac_payoff(const RacTask& task) {
  const TaskSpaces& s = task.spaces();
  PayoffTable pay;
  pay.weight.assign(s.nx() * s.ny() * s.nb(), 0);
  for (std::size_t x = 0; x < s.nx(); ++x)
    for (std::size_t y = 0; y < s.ny(); ++y)
      pay.weight[(x * s.ny() + y) * s.nb() +
                 static_cast<std::size_t>(task.bit(x, static_cast<int>(y)))] = 1;
  pay.divisor = static_cast<long long>(s.nx()) * static_cast<long long>(s.ny());
  return pay;
}

SuccessReport rac_success(const RacTask& task, const Correlation& corr) {
  if (!(corr.spaces() == task.spaces()))
    throw validation_error("correlation does not live on this task's spaces");
  const std::size_t nx = task.n_strings();
  const int n = task.n_bits();
  SuccessReport rep;
  rep.exact = corr.mode() == ArithmeticMode::exact;
  rep.per_string_value.resize(nx);
  if (rep.exact) rep.per_string.resize(nx);
  Rat avg(0);
  double avg_value = 0.0;
  for (std::size_t x = 0; x < nx; ++x) {
    Rat sx(0);
    double sx_value = 0.0;
    for (int y = 0; y < n; ++y) {
      const auto b = static_cast<std::size_t>(task.bit(x, y));
      if (rep.exact) sx += corr.exact_at(x, static_cast<std::size_t>(y), b);
      sx_value += corr.at(x, static_cast<std::size_t>(y), b);
    }
    if (rep.exact) {
      rep.per_string[x] = sx / Rat(n);
      avg += rep.per_string[x];
    }
    rep.per_string_value[x] = sx_value / n;
    avg_value += rep.per_string_value[x];
  }
  if (rep.exact) {
    rep.average = avg / Rat(static_cast<long long>(nx));
    rep.average_value = to_double(rep.average);
  } else {
    rep.average_value = avg_value / static_cast<double>(nx);
  }
  return rep;
}

ClassicalPureStrategy meid_strategy(const RacTask& task) {
  ClassicalPureStrategy c;
  for (std::size_t x = 0; x < task.n_strings(); ++x) {
    int ones = 0;
    for (int y = 0; y < task.n_bits(); ++y) ones += task.bit(x, y);
    c.encode.push_back(2 * ones > task.n_bits() ? 1 : 0);  // ties send 0
  }
  c.decode.assign(task.spaces().ny(), {0, 1});
  validate_classical(task.spaces(), c);
  return c;
}

int margin_coefficient(const RacTask& task, std::size_t x) {
  int sum = 0;
  for (int y = 0; y + 1 < task.n_bits(); ++y) sum += task.bit(x, y) == 0 ? 1 : -1;
  return std::abs(sum);
}

namespace {

// Shared construction for both parities: majority of the first N-1 bits
// as a Z eigenstate, odd-N ties as an X eigenstate of the last bit.
QuantumStrategy eigenstate_strategy(const RacTask& task) {
  QuantumStrategy q;
  for (std::size_t x = 0; x < task.n_strings(); ++x) {
    int sum = 0;
    for (int y = 0; y + 1 < task.n_bits(); ++y) sum += task.bit(x, y) == 0 ? 1 : -1;
    if (sum != 0)
      q.encode.emplace_back(StabilizerStateId{1, sum > 0 ? 0 : 1});
    else
      q.encode.emplace_back(StabilizerStateId{2, task.bit(x, task.n_bits() - 1)});
  }
  for (int y = 0; y < task.n_bits(); ++y) {
    q.decode.emplace_back(MubMeasurement{y + 1 == task.n_bits() ? 2 : 1});
    q.post.emplace_back();
  }
  validate_quantum(task.spaces(), q);
  return q;
}

}  // namespace

QuantumStrategy onmq_strategy(const RacTask& task) {
  if (task.n_bits() % 2 == 0)
    throw validation_error("this protocol needs an odd bit count, got " +
                           std::to_string(task.n_bits()));
  return eigenstate_strategy(task);
}

QuantumStrategy enmq_strategy(const RacTask& task) {
  if (task.n_bits() % 2 == 1)
    throw validation_error("this protocol needs an even bit count, got " +
                           std::to_string(task.n_bits()));
  return eigenstate_strategy(task);
}

Rat eigenstate_per_string(const RacTask& task, std::size_t x) {
  const int n = task.n_bits();
  const int margin = margin_coefficient(task, x);
  // Clear majority: (N + margin) / 2N. Tie (odd N): the last question is
  // answered perfectly instead, giving (N + 1) / 2N.
  return margin > 0 ? Rat(n + margin, 2LL * n) : Rat(n + 1, 2LL * n);
}

UpliftReport single_magic_uplift(const RacTask& task, std::size_t target_x,
                                 const BlochVector& r) {
  const int n = task.n_bits();
  if (n < 2) throw validation_error("uplift needs at least 2 bits");
  if (target_x >= task.n_strings()) throw validation_error("target string out of range");
  QuantumStrategy q = eigenstate_strategy(task);
  q.encode[target_x] = r;
  validate_quantum(task.spaces(), q);

  UpliftReport rep;
  rep.strategy = rac_success(task, eval_quantum(task.spaces(), q, 1e-12));
  rep.target_born = rep.strategy.per_string_value[target_x];

  double sum = 0.0;
  for (int y = 0; y < n; ++y) {
    const double sign = task.bit(target_x, y) == 0 ? 1.0 : -1.0;
    sum += 0.5 * (1.0 + sign * (y + 1 == n ? r.nx : r.nz));
  }
  rep.target_closed_form = sum / n;
  rep.target_base = eigenstate_per_string(task, target_x);
  rep.gain_scaled = 2.0 * n * (rep.target_closed_form - to_double(rep.target_base));

  rep.coefficient = margin_coefficient(task, target_x);
  rep.tie = rep.coefficient == 0;
  rep.optimal_theta = rep.tie ? kPi / 2.0 : std::atan(1.0 / rep.coefficient);
  rep.max_gain_scaled =
      rep.tie ? 0.0
              : std::sqrt(1.0 + static_cast<double>(rep.coefficient) * rep.coefficient) -
                    rep.coefficient;
  int window = 0;
  for (int y = 0; y + 1 < n; ++y) window += task.bit(target_x, y) == 0 ? 1 : -1;
  const double sz = window >= 0 ? 1.0 : -1.0;
  const double sx = task.bit(target_x, n - 1) == 0 ? 1.0 : -1.0;
  rep.optimal_bloch = {sx * std::sin(rep.optimal_theta), 0.0, sz * std::cos(rep.optimal_theta)};

  rep.magic = magic_l1(PrimeDim(2), state_from_bloch(r)).value;
  rep.plane_excess = std::max(0.0, std::abs(r.nx) + std::abs(r.nz) - 1.0);
  return rep;
}

ProtocolReport fixed_basis_protocol(const RacTask& task, const std::vector<int>& basis_per_y,
                                    const std::vector<BlochVector>& encode) {
  check_bases(task, basis_per_y);
  if (encode.size() != task.n_strings())
    throw validation_error("need one prepared state per string");
  QuantumStrategy q;
  for (const BlochVector& n : encode) q.encode.emplace_back(n);
  for (int y = 0; y < task.n_bits(); ++y) {
    q.decode.emplace_back(MubMeasurement{basis_per_y[static_cast<std::size_t>(y)]});
    q.post.emplace_back();
  }
  validate_quantum(task.spaces(), q);

  ProtocolReport rep;
  rep.born = rac_success(task, eval_quantum(task.spaces(), q, 1e-12));
  double total = 0.0;
  for (std::size_t x = 0; x < task.n_strings(); ++x) {
    const BlochVector c = coefficient_vector(task, basis_per_y, x);
    total += 0.5 +
             (c.nx * encode[x].nx + c.ny * encode[x].ny + c.nz * encode[x].nz) /
                 (2.0 * task.n_bits());
  }
  rep.closed_form = total / static_cast<double>(task.n_strings());
  rep.deviation = std::abs(rep.closed_form - rep.born.average_value);
  for (const BlochVector& n : encode) {
    rep.max_magic = std::max(rep.max_magic, magic_l1(PrimeDim(2), state_from_bloch(n)).value);
    rep.max_plane_excess =
        std::max(rep.max_plane_excess, std::abs(n.nx) + std::abs(n.nz) - 1.0);
  }
  rep.max_plane_excess = std::max(0.0, rep.max_plane_excess);
  return rep;
}

std::vector<int> rac2_bases() { return {1, 2}; }

std::vector<int> rac3_case_bases(int case_id) {
  switch (case_id) {
    case 1: return {2, 2, 2};
    case 2: return {1, 2, 3};
    case 3: return {2, 2, 1};
    default: throw validation_error("case id must be 1, 2, or 3");
  }
}

VertexOptimum stabilizer_vertex_optimum(const RacTask& task,
                                        const std::vector<int>& basis_per_y) {
  check_bases(task, basis_per_y);
  const int n = task.n_bits();
  VertexOptimum opt;
  Rat total(0);
  for (std::size_t x = 0; x < task.n_strings(); ++x) {
    long long best = 0;
    StabilizerStateId best_v{1, 0};
    bool first = true;
    for (int k = 1; k <= 3; ++k)
      for (int j = 0; j < 2; ++j) {
        const long long brace = vertex_brace(task, basis_per_y, x, {k, j});
        if (first || brace > best) {
          best = brace;
          best_v = {k, j};
          first = false;
        }
      }
    opt.argmax.push_back(best_v);
    total += Rat(1, 2) + Rat(best, 2LL * n);
  }
  opt.best = total / Rat(static_cast<long long>(task.n_strings()));
  return opt;
}

AssignmentOptimum stabilizer_vertex_optimum_all(const RacTask& task) {
  const int n = task.n_bits();
  AssignmentOptimum out;
  std::uint64_t count = 1;
  for (int y = 0; y < n; ++y) count *= 3;
  out.assignments = count;
  for (std::uint64_t a = 0; a < count; ++a) {
    std::vector<int> bases(static_cast<std::size_t>(n));
    std::uint64_t rem = a;
    for (int y = n; y-- > 0;) {
      bases[static_cast<std::size_t>(y)] = static_cast<int>(rem % 3) + 1;
      rem /= 3;
    }
    const Rat v = stabilizer_vertex_optimum(task, bases).best;
    if (out.basis_per_y.empty() || v > out.best) {
      out.best = v;
      out.basis_per_y = bases;
    }
  }
  return out;
}

BallOptimum optimize_unrestricted(const RacTask& task, const std::vector<int>& basis_per_y,
                                  double refine_tol) {
  check_bases(task, basis_per_y);
  const int n = task.n_bits();
  BallOptimum out;
  double total = 0.0, total_analytic = 0.0;
  for (std::size_t x = 0; x < task.n_strings(); ++x) {
    const BlochVector c = coefficient_vector(task, basis_per_y, x);
    const SphereSearch s = maximize_on_sphere(c, refine_tol);
    out.evaluations += s.evaluations;
    out.argmax.push_back(s.argmax);
    total += s.best;
    total_analytic += bloch_norm(c);
  }
  const double denom = 2.0 * n * static_cast<double>(task.n_strings());
  out.best = 0.5 + total / denom;
  out.analytic = 0.5 + total_analytic / denom;
  out.gap = out.analytic - out.best;
  return out;
}

BallOptimum optimize_unrestricted(const RacTask& task, double refine_tol) {
  if (task.n_bits() == 2) return optimize_unrestricted(task, rac2_bases(), refine_tol);
  if (task.n_bits() == 3) return optimize_unrestricted(task, rac3_case_bases(2), refine_tol);
  throw validation_error("distinct-bases optimization is defined for 2 or 3 bits");
}

BallOptimum single_magic_optimum(const RacTask& task, const std::vector<int>& basis_per_y,
                                 double refine_tol) {
  check_bases(task, basis_per_y);
  const int n = task.n_bits();
  const VertexOptimum vertices = stabilizer_vertex_optimum(task, basis_per_y);

  // Free one string at a time; everything else stays at its best vertex.
  double best_gain = 0.0;
  std::size_t best_x = 0;
  SphereSearch best_search;
  std::uint64_t evaluations = 0;
  double analytic_gain = 0.0;
  for (std::size_t x = 0; x < task.n_strings(); ++x) {
    const BlochVector c = coefficient_vector(task, basis_per_y, x);
    const double vertex_value =
        static_cast<double>(vertex_brace(task, basis_per_y, x, vertices.argmax[x]));
    const SphereSearch s = maximize_on_sphere(c, refine_tol);
    evaluations += s.evaluations;
    const double gain = s.best - vertex_value;
    analytic_gain = std::max(analytic_gain, bloch_norm(c) - vertex_value);
    if (x == 0 || gain > best_gain) {
      best_gain = gain;
      best_x = x;
      best_search = s;
    }
  }

  BallOptimum out;
  out.evaluations = evaluations;
  const double denom = 2.0 * n * static_cast<double>(task.n_strings());
  out.best = to_double(vertices.best) + best_gain / denom;
  out.analytic = to_double(vertices.best) + analytic_gain / denom;
  out.gap = out.analytic - out.best;
  for (std::size_t x = 0; x < task.n_strings(); ++x)
    out.argmax.push_back(x == best_x ? best_search.argmax : vertex_bloch(vertices.argmax[x]));
  return out;
}

namespace {

struct RegionSetup {
  RacTask task;
  // Two axis orientations per task: the swept state lives in the XZ plane,
  // so only Z/X decodings matter; each orientation carries the precomputed
  // best vertex brace for every string.
  std::vector<std::vector<int>> orientations;
  std::vector<std::vector<long long>> vertex_best;
  std::vector<std::vector<BlochVector>> coeffs;  // per orientation, per string
  long long denom;
};

RegionSetup region_setup(RegionTask which) {
  RegionSetup setup{RacTask(which == RegionTask::rac2 ? 2 : 3), {}, {}, {}, 0};
  if (which == RegionTask::rac2)
    setup.orientations = {{1, 2}, {2, 1}};
  else
    setup.orientations = {{2, 2, 1}, {1, 1, 2}};
  for (const auto& bases : setup.orientations) {
    const VertexOptimum v = stabilizer_vertex_optimum(setup.task, bases);
    std::vector<long long> best;
    std::vector<BlochVector> cs;
    for (std::size_t x = 0; x < setup.task.n_strings(); ++x) {
      best.push_back(vertex_brace(setup.task, bases, x, v.argmax[x]));
      cs.push_back(coefficient_vector(setup.task, bases, x));
    }
    setup.vertex_best.push_back(std::move(best));
    setup.coeffs.push_back(std::move(cs));
  }
  setup.denom = 2LL * setup.task.n_bits() *
                static_cast<long long>(setup.task.n_strings());
  return setup;
}

// Best average success with the swept state prepared for exactly one
// string (choice of string and orientation optimized), everything else at
// vertices.
double region_success(const RegionSetup& setup, double nx, double nz) {
  double best = -1.0;
  for (std::size_t o = 0; o < setup.orientations.size(); ++o) {
    long long vertex_total = 0;
    for (long long v : setup.vertex_best[o]) vertex_total += v;
    for (std::size_t x = 0; x < setup.task.n_strings(); ++x) {
      const BlochVector& c = setup.coeffs[o][x];
      const double brace = c.nx * nx + c.nz * nz;
      const double total = static_cast<double>(vertex_total - setup.vertex_best[o][x]) + brace;
      best = std::max(best, 0.5 + total / static_cast<double>(setup.denom));
    }
  }
  return best;
}

RegionSample classify_point(const RegionSetup& setup, double nx, double nz) {
  RegionSample sample;
  sample.nx = nx;
  sample.nz = nz;
  sample.success = region_success(setup, nx, nz);
  const double l1 = std::abs(nx) + std::abs(nz);
  if (l1 <= 1.0 + 1e-12)
    sample.cls = RegionClass::stabilizer;
  else if (std::abs(sample.success - 0.75) <= 1e-8)
    sample.cls = RegionClass::boundary;
  else if (sample.success > 0.75)
    sample.cls = RegionClass::magic_advantage;
  else
    sample.cls = RegionClass::magic_no_advantage;
  return sample;
}

std::vector<RegionSample> region_scan(RegionTask which, double step, bool parallel) {
  if (!(step > 1e-6) || step > 1.0)
    throw validation_error("grid step must lie in (1e-6, 1]");
  const RegionSetup setup = region_setup(which);
  const long long points = std::llround(2.0 / step) + 1;
  std::vector<std::optional<RegionSample>> grid(
      static_cast<std::size_t>(points) * static_cast<std::size_t>(points));

  const auto run_row = [&](long long i) {
    const double nx = -1.0 + static_cast<double>(i) * step;
    for (long long j = 0; j < points; ++j) {
      const double nz = -1.0 + static_cast<double>(j) * step;
      if (nx * nx + nz * nz > 1.0 + 1e-12) continue;
      grid[static_cast<std::size_t>(i * points + j)] = classify_point(setup, nx, nz);
    }
  };

  if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < points; ++i) run_row(i);
#else
    for (long long i = 0; i < points; ++i) run_row(i);
#endif
  } else {
    for (long long i = 0; i < points; ++i) run_row(i);
  }

  std::vector<RegionSample> out;
  out.reserve(grid.size());
  for (const auto& g : grid)
    if (g) out.push_back(*g);
  return out;
}

}  // namespace

std::vector<RegionSample> advantage_region(RegionTask task, double step) {
  return region_scan(task, step, true);
}

std::vector<RegionSample> advantage_region_serial(RegionTask task, double step) {
  return region_scan(task, step, false);
}

const char* region_class_name(RegionClass cls) {
  switch (cls) {
    case RegionClass::stabilizer: return "stabilizer";
    case RegionClass::magic_no_advantage: return "magic-no-advantage";
    case RegionClass::magic_advantage: return "magic-advantage";
    default: return "boundary";
  }
}

MeidCheck meid_is_optimal_check(const RacTask& task, std::uint64_t budget) {
  MeidCheck check;
  check.search = classical_optimum(task.spaces(), rac_payoff(task), budget);
  const Rat meid =
      rac_success(task, eval_classical(task.spaces(), meid_strategy(task))).average;
  check.gap = check.search.best - meid;
  check.optimal = check.gap == Rat(0);
  return check;
}

}  // namespace oneway
