#include "oneway/simulation.hpp"

#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace oneway {

namespace {

int mod(int v, int m) {
  int r = v % m;
  return r < 0 ? r + m : r;
}

// Tally table shared by both sampling implementations. counts is indexed
// like the correlation: ((x * ny) + y) * d + outcome.
constexpr int kMaxBases = 32;  // bases are d+1; plenty for any tested prime

void tally_round(const TaskSpaces& s, const Partitions& p, std::uint64_t seed, std::uint64_t i,
                 std::vector<long long>& counts) {
  const int d = s.dim();
  // One dit per basis, drawn from the round's own counter stream.
  int lambda[kMaxBases];
  const std::uint64_t base = splitmix64(seed ^ (0x517cc1b727220a95ULL * (i + 1)));
  for (int t = 1; t <= d + 1; ++t)
    lambda[t] = static_cast<int>(splitmix64(base + static_cast<std::uint64_t>(t)) % d);
  for (std::size_t x = 0; x < s.nx(); ++x) {
    const StabilizerStateId id = decode_cell(s.d(), p.x_cells[x]);
    const int m = mod(id.j - lambda[id.k], d);
    for (std::size_t y = 0; y < s.ny(); ++y) {
      const int b = mod(m + lambda[p.y_cells[y]], d);
      ++counts[(x * s.ny() + y) * d + b];
    }
  }
}

SampledReport report_from_counts(const TaskSpaces& s, std::vector<long long> counts,
                                 std::uint64_t samples, std::uint64_t seed) {
  SampledReport rep{Correlation(s, ArithmeticMode::floating, 1.0), samples, seed, {}, 0.0};
  rep.std_errors.assign(counts.size(), 0.0);
  const double n = static_cast<double>(samples);
  for (std::size_t x = 0; x < s.nx(); ++x)
    for (std::size_t y = 0; y < s.ny(); ++y)
      for (std::size_t b = 0; b < s.nb(); ++b) {
        const std::size_t i = (x * s.ny() + y) * s.nb() + b;
        const double p = static_cast<double>(counts[i]) / n;
        rep.correlation.set(x, y, b, p);
        rep.std_errors[i] = std::sqrt(std::max(0.0, p * (1.0 - p)) / n);
        rep.max_std_error = std::max(rep.max_std_error, rep.std_errors[i]);
      }
  rep.correlation.check_normalized();
  return rep;
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void validate_partitions(const TaskSpaces& s, const Partitions& p) {
  const int d = s.dim();
  if (p.x_cells.size() != s.nx())
    throw validation_error("partitions: " + std::to_string(p.x_cells.size()) +
                           " input cells for " + std::to_string(s.nx()) + " inputs");
  if (p.y_cells.size() != s.ny())
    throw validation_error("partitions: " + std::to_string(p.y_cells.size()) +
                           " question cells for " + std::to_string(s.ny()) + " questions");
  for (int r : p.x_cells)
    if (r < 1 || r > d * (d + 1))
      throw validation_error("partitions: input cell " + std::to_string(r) +
                             " outside [1, d(d+1)]");
  for (int t : p.y_cells)
    if (t < 1 || t > d + 1)
      throw validation_error("partitions: question cell " + std::to_string(t) +
                             " outside [1, d+1]");
}

StabilizerStateId decode_cell(PrimeDim d, int r) { return vertex_id(d, r); }

QuantumStrategy build_stabilizer_strategy(const TaskSpaces& s, const Partitions& p) {
  validate_partitions(s, p);
  if (s.nb() != static_cast<std::size_t>(s.dim()))
    throw validation_error("stabilizer strategy answers with the outcome itself; need |B| = d");
  QuantumStrategy q;
  for (std::size_t x = 0; x < s.nx(); ++x)
    q.encode.emplace_back(decode_cell(s.d(), p.x_cells[x]));
  for (std::size_t y = 0; y < s.ny(); ++y) {
    q.decode.emplace_back(MubMeasurement{p.y_cells[y]});
    q.post.emplace_back();  // identity
  }
  validate_quantum(s, q);
  return q;
}

Correlation classical_simulation_exact(const TaskSpaces& s, const Partitions& p) {
  validate_partitions(s, p);
  if (s.nb() != static_cast<std::size_t>(s.dim()))
    throw validation_error("classical simulation answers with a dit; need |B| = d");
  const int d = s.dim();
  Correlation out(s, ArithmeticMode::exact);
  for (std::size_t x = 0; x < s.nx(); ++x) {
    const StabilizerStateId id = decode_cell(s.d(), p.x_cells[x]);
    for (std::size_t y = 0; y < s.ny(); ++y) {
      const int t = p.y_cells[y];
      std::vector<Rat> prob(s.nb(), Rat(0));
      if (t == id.k) {
        // Same dit on both sides; it cancels for every value.
        for (int lam = 0; lam < d; ++lam) {
          const int m = mod(id.j - lam, d);
          prob[mod(m + lam, d)] += Rat(1, d);
        }
      } else {
        for (int lam_k = 0; lam_k < d; ++lam_k) {
          const int m = mod(id.j - lam_k, d);
          for (int lam_t = 0; lam_t < d; ++lam_t)
            prob[mod(m + lam_t, d)] += Rat(1, static_cast<long long>(d) * d);
        }
      }
      for (std::size_t b = 0; b < s.nb(); ++b) out.set(x, y, b, prob[b]);
    }
  }
  out.check_normalized();
  return out;
}

SampledReport classical_simulation_sampled(const TaskSpaces& s, const Partitions& p,
                                           std::uint64_t samples, std::uint64_t seed) {
  validate_partitions(s, p);
  if (samples == 0) throw validation_error("sampled simulation needs samples > 0");
  if (s.dim() + 1 >= kMaxBases) throw validation_error("sampled simulation supports d < 31");
  const std::size_t cells = s.nx() * s.ny() * static_cast<std::size_t>(s.dim());
  std::vector<long long> counts(cells, 0);
#ifdef _OPENMP
#pragma omp parallel
  {
    std::vector<long long> local(cells, 0);
#pragma omp for nowait
    for (long long i = 0; i < static_cast<long long>(samples); ++i)
      tally_round(s, p, seed, static_cast<std::uint64_t>(i), local);
    // Merge order varies with scheduling, but integer sums commute, so the
    // final table is identical for any thread count.
#pragma omp critical
    for (std::size_t c = 0; c < cells; ++c) counts[c] += local[c];
  }
#else
  for (std::uint64_t i = 0; i < samples; ++i) tally_round(s, p, seed, i, counts);
#endif
  return report_from_counts(s, std::move(counts), samples, seed);
}

SampledReport classical_simulation_sampled_serial(const TaskSpaces& s, const Partitions& p,
                                                  std::uint64_t samples, std::uint64_t seed) {
  validate_partitions(s, p);
  if (samples == 0) throw validation_error("sampled simulation needs samples > 0");
  if (s.dim() + 1 >= kMaxBases) throw validation_error("sampled simulation supports d < 31");
  const std::size_t cells = s.nx() * s.ny() * static_cast<std::size_t>(s.dim());
  std::vector<long long> counts(cells, 0);
  for (std::uint64_t i = 0; i < samples; ++i) tally_round(s, p, seed, i, counts);
  return report_from_counts(s, std::move(counts), samples, seed);
}

SimulationCheck verify_simulation(const TaskSpaces& s, const Partitions& p, double tol) {
  const Correlation quantum = eval_quantum(s, build_stabilizer_strategy(s, p), 1e-12);
  const Correlation classical = classical_simulation_exact(s, p);
  SimulationCheck check;
  check.mode = "exact";
  check.tolerance = tol;
  check.max_deviation = correlation_distance(quantum, classical);
  check.pass = check.max_deviation < tol;
  return check;
}

SimulationCheck verify_simulation_sampled(const TaskSpaces& s, const Partitions& p,
                                          std::uint64_t samples, std::uint64_t seed) {
  const Correlation quantum = eval_quantum(s, build_stabilizer_strategy(s, p), 1e-12);
  const SampledReport rep = classical_simulation_sampled(s, p, samples, seed);
  SimulationCheck check;
  check.mode = "sampled";
  check.samples = samples;
  check.seed = seed;
  check.tolerance = 6.0 * std::sqrt(0.25 / static_cast<double>(samples));
  check.max_deviation = correlation_distance(quantum, rep.correlation);
  check.pass = check.max_deviation <= check.tolerance;
  return check;
}

SharedStrategy expand_shared_simulation(const TaskSpaces& s,
                                        const std::vector<SharedSimAtom>& atoms,
                                        std::size_t max_atoms) {
  if (atoms.empty()) throw validation_error("shared simulation needs at least one atom");
  const int d = s.dim();
  SharedStrategy mix;
  for (const SharedSimAtom& atom : atoms) {
    validate_partitions(s, atom.partitions);
    // Only dits some party actually reads matter; the rest marginalize out.
    std::vector<int> used;
    for (int t = 1; t <= d + 1; ++t) {
      bool hit = false;
      for (std::size_t x = 0; x < s.nx() && !hit; ++x)
        hit = decode_cell(s.d(), atom.partitions.x_cells[x]).k == t;
      for (std::size_t y = 0; y < s.ny() && !hit; ++y) hit = atom.partitions.y_cells[y] == t;
      if (hit) used.push_back(t);
    }
    std::size_t configs = 1;
    for (std::size_t u = 0; u < used.size(); ++u) {
      configs *= static_cast<std::size_t>(d);
      if (mix.weights.size() + configs > max_atoms)
        throw validation_error("shared simulation expansion exceeds " +
                               std::to_string(max_atoms) + " atoms; evaluate by mixing tables");
    }
    const Rat w = atom.weight / Rat(static_cast<long long>(configs));
    for (std::size_t c = 0; c < configs; ++c) {
      std::vector<int> lambda(d + 2, 0);
      std::size_t rem = c;
      for (int t : used) {
        lambda[t] = static_cast<int>(rem % d);
        rem /= d;
      }
      ClassicalPureStrategy cps;
      for (std::size_t x = 0; x < s.nx(); ++x) {
        const StabilizerStateId id = decode_cell(s.d(), atom.partitions.x_cells[x]);
        cps.encode.push_back(mod(id.j - lambda[id.k], d));
      }
      for (std::size_t y = 0; y < s.ny(); ++y) {
        std::vector<int> row(d);
        for (int m = 0; m < d; ++m) row[m] = mod(m + lambda[atom.partitions.y_cells[y]], d);
        cps.decode.push_back(std::move(row));
      }
      mix.weights.push_back(w);
      mix.classical_atoms.push_back(std::move(cps));
    }
  }
  validate_shared(s, mix);
  return mix;
}

TaskSpaces maximal_task(PrimeDim d) {
  const int n = d.value();
  std::vector<std::string> x, y, b;
  for (int r = 1; r <= n * (n + 1); ++r) x.push_back(std::to_string(r));
  for (int t = 1; t <= n + 1; ++t) y.push_back(std::to_string(t));
  for (int v = 0; v < n; ++v) b.push_back(std::to_string(v));
  return TaskSpaces(d, std::move(x), std::move(y), std::move(b));
}

Partitions maximal_partitions(PrimeDim d) {
  const int n = d.value();
  Partitions p;
  for (int r = 1; r <= n * (n + 1); ++r) p.x_cells.push_back(r);
  for (int t = 1; t <= n + 1; ++t) p.y_cells.push_back(t);
  return p;
}

}  // namespace oneway
