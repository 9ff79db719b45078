#pragma once

#include <cstdint>

#include "oneway/correlation.hpp"

namespace oneway {

// Cell assignments defining an extreme one-way strategy: each input x is
// tied to a vertex index r in [1, d(d+1)] (which basis eigenstate the
// sender prepares), each question y to a basis index t in [1, d+1].
struct Partitions {
  std::vector<int> x_cells;
  std::vector<int> y_cells;
};

void validate_partitions(const TaskSpaces& s, const Partitions& p);

// Vertex index -> (basis k, eigenvalue j) of the prepared state.
StabilizerStateId decode_cell(PrimeDim d, int r);

// The quantum side: prepare eigenstate decode_cell(x_cells[x]), measure
// basis y_cells[y], answer the outcome. Requires |B| = d.
QuantumStrategy build_stabilizer_strategy(const TaskSpaces& s, const Partitions& p);

// The classical side, marginalized exactly: with shared uniform dits
// lambda_1..lambda_{d+1}, the sender transmits m = j - lambda_k and the
// receiver answers m + lambda_t. Agreement is certain when t = k and the
// answer is uniform otherwise, which reproduces the quantum table.
Correlation classical_simulation_exact(const TaskSpaces& s, const Partitions& p);

struct SampledReport {
  Correlation correlation;  // empirical frequencies, one tally per round
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<double> std_errors;  // per (x,y,b), sqrt(p(1-p)/n)
  double max_std_error = 0.0;
};

// Monte Carlo run of the same protocol. Draws are counter-based (one
// generator state per round index), so the tally is a pure function of
// (samples, seed): reruns and thread counts cannot change it.
SampledReport classical_simulation_sampled(const TaskSpaces& s, const Partitions& p,
                                           std::uint64_t samples, std::uint64_t seed);
// Single-loop reference used to pin down the parallel kernel in tests.
SampledReport classical_simulation_sampled_serial(const TaskSpaces& s, const Partitions& p,
                                                  std::uint64_t samples, std::uint64_t seed);

struct SimulationCheck {
  double max_deviation = 0.0;
  bool pass = false;
  std::string mode;  // "exact" or "sampled"
  double tolerance = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

// Exact check: Born table of the stabilizer strategy vs the marginalized
// classical table, entrywise, gated at tol.
SimulationCheck verify_simulation(const TaskSpaces& s, const Partitions& p, double tol = 1e-12);
// Statistical check: sampled table vs Born table, gated at six binomial
// standard errors (worst case p(1-p) = 1/4).
SimulationCheck verify_simulation_sampled(const TaskSpaces& s, const Partitions& p,
                                          std::uint64_t samples, std::uint64_t seed);

// One atom of a mixed simulation: a weight and the partitions of the
// extreme strategy it plays.
struct SharedSimAtom {
  Rat weight;
  Partitions partitions;
};

// Expands a mixture of extreme strategies into an explicit shared-dit
// classical strategy: every assignment of the dits each atom actually
// uses becomes one deterministic atom of weight w / d^(#used). Throws
// when the expansion would exceed max_atoms.
SharedStrategy expand_shared_simulation(const TaskSpaces& s,
                                        const std::vector<SharedSimAtom>& atoms,
                                        std::size_t max_atoms = 200000);

// Task with one input per vertex and one question per basis, cells
// assigned bijectively: the hardest instance for fixed d.
TaskSpaces maximal_task(PrimeDim d);
Partitions maximal_partitions(PrimeDim d);

// Deterministic counter-based generator step (also used by benchmarks).
std::uint64_t splitmix64(std::uint64_t z);

}  // namespace oneway
