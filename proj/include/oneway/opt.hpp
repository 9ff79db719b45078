#pragma once

#include <cstdint>
#include <string>

#include "oneway/correlation.hpp"

namespace oneway {

// Deterministic-strategy search over a payoff with nonnegative integer
// weights: score(strategy) = sum of weight(x, y, b) over the (x, y) pairs
// where the strategy answers b, divided by divisor. Integer weights keep
// every comparison exact.
struct PayoffTable {
  std::vector<long long> weight;  // indexed (x * ny + y) * nb + b
  long long divisor = 1;
};

void validate_payoff(const TaskSpaces& s, const PayoffTable& pay);

struct OptReport {
  Rat best{0};
  double best_value = 0.0;
  ClassicalPureStrategy argmax;
  std::uint64_t search_size = 0;
  std::string method;  // "exhaustive" or "per-string-decomposed"
};

// Raised when a search would cover more candidates than the budget allows.
class budget_error : public std::runtime_error {
 public:
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// Every encoding, with the decoding maximized per question (separable, so
// the full product space d^|X| * |B|^(d |Y|) is covered exactly). Ties are
// broken toward the lexicographically first strategy, encodings ordered
// before decodings. Throws budget_error when the candidate count exceeds
// the budget; the per-string-decomposed search usually still applies.
OptReport classical_optimum(const TaskSpaces& s, const PayoffTable& pay,
                            std::uint64_t budget = 100000000);
// Literal nested-loop scan of the same space, kept as the reference the
// kernel is tested against. Only viable for tiny instances.
OptReport classical_optimum_serial(const TaskSpaces& s, const PayoffTable& pay,
                                   std::uint64_t budget = 100000000);

// Every decoding, with the encoding maximized per input. Sound because
// max over (E, D) = max over D of sum_x max_m; reaches tasks whose
// encoding space is astronomically large. Tie-break is decoding-major,
// so only the optimal value (not the argmax) is comparable with the
// exhaustive search.
OptReport classical_optimum_decomposed(const TaskSpaces& s, const PayoffTable& pay,
                                       std::uint64_t budget = 100000000);

}  // namespace oneway
