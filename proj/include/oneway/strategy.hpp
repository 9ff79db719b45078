#pragma once

#include <variant>
#include <vector>

#include "oneway/mub.hpp"
#include "oneway/rational.hpp"
#include "oneway/spaces.hpp"

namespace oneway {

// Deterministic one-way strategy over classical messages: the sender maps
// each input to a dit, the receiver maps (question, dit) to an output.
// Values are indices: encode[x] in [0, d), decode[y][m] indexes B.
struct ClassicalPureStrategy {
  std::vector<int> encode;
  std::vector<std::vector<int>> decode;
};

// Prepared states are given either by name (a basis eigenstate), by Bloch
// vector (d = 2 only), or as an explicit density matrix.
using EncodeSpec = std::variant<StabilizerStateId, BlochVector, Matrix>;

// Measure one of the d+1 bases (outcome j is the eigenvalue index) ...
struct MubMeasurement {
  int k = 1;
};
// ... or an arbitrary POVM with one effect per outcome.
struct PovmMeasurement {
  std::vector<Matrix> effects;
};
using DecodeSpec = std::variant<MubMeasurement, PovmMeasurement>;

// Prepare-and-measure strategy. post[y] maps measurement outcomes to
// output indices; an empty post[y] means identity and requires the
// outcome count to equal |B|.
struct QuantumStrategy {
  std::vector<EncodeSpec> encode;
  std::vector<DecodeSpec> decode;
  std::vector<std::vector<int>> post;
};

// Convex mixture. Exactly one atom list is populated; weights are exact,
// positive, and sum to 1.
struct SharedStrategy {
  std::vector<Rat> weights;
  std::vector<ClassicalPureStrategy> classical_atoms;
  std::vector<QuantumStrategy> quantum_atoms;
};

// Validators throw validation_error naming the broken invariant. Quantum
// validation is eager about the physics: states must be density matrices,
// effects must form a POVM, both within tol.
void validate_classical(const TaskSpaces& s, const ClassicalPureStrategy& c);
void validate_quantum(const TaskSpaces& s, const QuantumStrategy& q, double tol = 1e-9);
void validate_shared(const TaskSpaces& s, const SharedStrategy& mix, double tol = 1e-9);

// Materializers used by the evaluators.
Matrix encode_state(PrimeDim d, const EncodeSpec& e);
std::vector<Matrix> decode_effects(PrimeDim d, const DecodeSpec& m);
std::size_t decode_outcome_count(PrimeDim d, const DecodeSpec& m);

// True when every prepared state is a named basis eigenstate and every
// measurement a named basis: the regime where Born probabilities are exact
// rationals.
bool is_stabilizer_typed(const QuantumStrategy& q);

}  // namespace oneway
