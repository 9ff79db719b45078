#include "oneway/strategy.hpp"

#include <algorithm>
#include <set>

namespace oneway {

namespace {

void check_alphabet(const std::vector<std::string>& labels, const char* which) {
  if (labels.empty()) throw validation_error(std::string(which) + " alphabet is empty");
  std::set<std::string> seen;
  for (const std::string& l : labels) {
    if (l.empty()) throw validation_error(std::string(which) + " alphabet has an empty label");
    if (!seen.insert(l).second)
      throw validation_error(std::string(which) + " alphabet repeats label '" + l + "'");
  }
}

std::size_t lookup(const std::vector<std::string>& labels, const std::string& label,
                   const char* which) {
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end())
    throw validation_error("label '" + label + "' not in " + which + " alphabet");
  return static_cast<std::size_t>(it - labels.begin());
}

}  // namespace

TaskSpaces::TaskSpaces(PrimeDim d, std::vector<std::string> x, std::vector<std::string> y,
                       std::vector<std::string> b)
    : d_(d), x_(std::move(x)), y_(std::move(y)), b_(std::move(b)) {
  check_alphabet(x_, "input");
  check_alphabet(y_, "question");
  check_alphabet(b_, "output");
}

std::size_t TaskSpaces::x_index(const std::string& label) const { return lookup(x_, label, "input"); }
std::size_t TaskSpaces::y_index(const std::string& label) const {
  return lookup(y_, label, "question");
}
std::size_t TaskSpaces::b_index(const std::string& label) const { return lookup(b_, label, "output"); }

void validate_classical(const TaskSpaces& s, const ClassicalPureStrategy& c) {
  if (c.encode.size() != s.nx())
    throw validation_error("classical strategy: encode covers " + std::to_string(c.encode.size()) +
                           " inputs, task has " + std::to_string(s.nx()));
  for (int m : c.encode)
    if (m < 0 || m >= s.dim())
      throw validation_error("classical strategy: message " + std::to_string(m) +
                             " outside [0, d)");
  if (c.decode.size() != s.ny())
    throw validation_error("classical strategy: decode covers " + std::to_string(c.decode.size()) +
                           " questions, task has " + std::to_string(s.ny()));
  for (const auto& row : c.decode) {
    if (row.size() != static_cast<std::size_t>(s.dim()))
      throw validation_error("classical strategy: decode row must map all d messages");
    for (int b : row)
      if (b < 0 || static_cast<std::size_t>(b) >= s.nb())
        throw validation_error("classical strategy: output index " + std::to_string(b) +
                               " outside B");
  }
}

Matrix encode_state(PrimeDim d, const EncodeSpec& e) {
  if (const auto* id = std::get_if<StabilizerStateId>(&e)) return mub_projector(d, *id);
  if (const auto* n = std::get_if<BlochVector>(&e)) {
    if (d.value() != 2)
      throw validation_error("bloch-vector encoding requires d = 2, got d = " +
                             std::to_string(d.value()));
    return state_from_bloch(*n);
  }
  return std::get<Matrix>(e);
}

std::vector<Matrix> decode_effects(PrimeDim d, const DecodeSpec& m) {
  if (const auto* mub = std::get_if<MubMeasurement>(&m)) {
    std::vector<Matrix> effects;
    effects.reserve(d.value());
    for (int j = 0; j < d.value(); ++j) effects.push_back(mub_projector(d, {mub->k, j}));
    return effects;
  }
  return std::get<PovmMeasurement>(m).effects;
}

std::size_t decode_outcome_count(PrimeDim d, const DecodeSpec& m) {
  if (std::holds_alternative<MubMeasurement>(m)) return static_cast<std::size_t>(d.value());
  return std::get<PovmMeasurement>(m).effects.size();
}

void validate_quantum(const TaskSpaces& s, const QuantumStrategy& q, double tol) {
  const PrimeDim d = s.d();
  if (q.encode.size() != s.nx())
    throw validation_error("quantum strategy: " + std::to_string(q.encode.size()) +
                           " prepared states for " + std::to_string(s.nx()) + " inputs");
  for (std::size_t x = 0; x < q.encode.size(); ++x) {
    const std::string what = "prepared state for input '" + s.X()[x] + "'";
    if (const auto* id = std::get_if<StabilizerStateId>(&q.encode[x]))
      check_state_id(d, *id);
    else {
      const Matrix rho = encode_state(d, q.encode[x]);
      check_square(rho, d.value(), what);
      check_density(rho, tol, what);
    }
  }
  if (q.decode.size() != s.ny() || q.post.size() != s.ny())
    throw validation_error("quantum strategy: decode/post must cover every question");
  for (std::size_t y = 0; y < q.decode.size(); ++y) {
    const std::string what = "measurement for question '" + s.Y()[y] + "'";
    if (const auto* mub = std::get_if<MubMeasurement>(&q.decode[y]))
      check_state_id(d, {mub->k, 0});
    else
      check_povm(std::get<PovmMeasurement>(q.decode[y]).effects, tol, what);
    const std::size_t outcomes = decode_outcome_count(d, q.decode[y]);
    if (q.post[y].empty()) {
      if (outcomes != s.nb())
        throw validation_error(what + ": identity post-processing needs " +
                               std::to_string(s.nb()) + " outcomes, measurement has " +
                               std::to_string(outcomes));
    } else {
      if (q.post[y].size() != outcomes)
        throw validation_error(what + ": post-processing covers " +
                               std::to_string(q.post[y].size()) + " outcomes of " +
                               std::to_string(outcomes));
      for (int b : q.post[y])
        if (b < 0 || static_cast<std::size_t>(b) >= s.nb())
          throw validation_error(what + ": post-processing hits output index " +
                                 std::to_string(b) + " outside B");
    }
  }
}

void validate_shared(const TaskSpaces& s, const SharedStrategy& mix, double tol) {
  const bool classical = !mix.classical_atoms.empty();
  const bool quantum = !mix.quantum_atoms.empty();
  if (classical == quantum)
    throw validation_error("shared strategy: atoms must be all classical or all quantum");
  const std::size_t n = classical ? mix.classical_atoms.size() : mix.quantum_atoms.size();
  if (mix.weights.size() != n)
    throw validation_error("shared strategy: " + std::to_string(mix.weights.size()) +
                           " weights for " + std::to_string(n) + " atoms");
  Rat total(0);
  for (const Rat& w : mix.weights) {
    if (w <= Rat(0)) throw validation_error("shared strategy: weights must be positive");
    total += w;
  }
  if (total != Rat(1))
    throw validation_error("shared strategy: weights sum to " + to_string(total) + ", not 1");
  for (const auto& c : mix.classical_atoms) validate_classical(s, c);
  for (const auto& q : mix.quantum_atoms) validate_quantum(s, q, tol);
}

bool is_stabilizer_typed(const QuantumStrategy& q) {
  for (const auto& e : q.encode)
    if (!std::holds_alternative<StabilizerStateId>(e)) return false;
  for (const auto& m : q.decode)
    if (!std::holds_alternative<MubMeasurement>(m)) return false;
  return true;
}

}  // namespace oneway
