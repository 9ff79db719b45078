#pragma once

#include "oneway/strategy.hpp"

namespace oneway {

enum class ArithmeticMode { exact, floating };

// Conditional distribution p(b | x, y) over task alphabets. Exact tables
// hold rationals end to end; floating tables carry the tolerance their
// producer promises on each entry.
class Correlation {
 public:
  Correlation(TaskSpaces spaces, ArithmeticMode mode, double tol = 1e-12);

  const TaskSpaces& spaces() const { return spaces_; }
  ArithmeticMode mode() const { return mode_; }
  double tol() const { return tol_; }

  void set(std::size_t x, std::size_t y, std::size_t b, const Rat& v);
  void set(std::size_t x, std::size_t y, std::size_t b, double v);
  double at(std::size_t x, std::size_t y, std::size_t b) const;
  // Exact entry; throws validation_error on a floating table.
  Rat exact_at(std::size_t x, std::size_t y, std::size_t b) const;

  // Every column sums to 1: exactly in exact mode, within 8*|B|*tol in
  // floating mode. Throws on violation.
  void check_normalized() const;

 private:
  std::size_t idx(std::size_t x, std::size_t y, std::size_t b) const;
  TaskSpaces spaces_;
  ArithmeticMode mode_;
  double tol_;
  std::vector<Rat> exact_;
  std::vector<double> floating_;
};

// Exact 0/1 table of a deterministic strategy.
Correlation eval_classical(const TaskSpaces& s, const ClassicalPureStrategy& c);

// Born-rule table, floating: p(b|x,y) = sum of Tr(rho_x E_{j|y}) over
// outcomes j that post-process to b.
Correlation eval_quantum(const TaskSpaces& s, const QuantumStrategy& q, double tol = 1e-9);

// Born-rule table in exact rationals, available when is_stabilizer_typed:
// every probability is an eigenstate-eigenstate overlap (1, 0, or 1/d).
Correlation eval_stabilizer_exact(const TaskSpaces& s, const QuantumStrategy& q);

// Mixture table. Exact when the atoms are classical; floating otherwise.
Correlation eval_shared(const TaskSpaces& s, const SharedStrategy& mix, double tol = 1e-9);

// Weighted sum of tables. Exact iff every part is exact (weights must sum
// to 1 exactly); demotes to floating otherwise.
Correlation mix_correlations(const std::vector<Rat>& weights,
                             const std::vector<Correlation>& parts);

// Largest entrywise difference. Requires identical spaces. When both
// tables are exact the comparison is exact as well, so 0 means equality.
double correlation_distance(const Correlation& p, const Correlation& q);

}  // namespace oneway
