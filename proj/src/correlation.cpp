#include "oneway/correlation.hpp"

#include <cmath>

namespace oneway {

Correlation::Correlation(TaskSpaces spaces, ArithmeticMode mode, double tol)
    : spaces_(std::move(spaces)), mode_(mode), tol_(tol) {
  const std::size_t n = spaces_.nx() * spaces_.ny() * spaces_.nb();
  if (mode_ == ArithmeticMode::exact)
    exact_.assign(n, Rat(0));
  else
    floating_.assign(n, 0.0);
}

std::size_t Correlation::idx(std::size_t x, std::size_t y, std::size_t b) const {
  if (x >= spaces_.nx() || y >= spaces_.ny() || b >= spaces_.nb())
    throw validation_error("correlation index out of range");
  return (x * spaces_.ny() + y) * spaces_.nb() + b;
}

void Correlation::set(std::size_t x, std::size_t y, std::size_t b, const Rat& v) {
  if (mode_ != ArithmeticMode::exact)
    throw validation_error("cannot store a rational in a floating correlation");
  exact_[idx(x, y, b)] = v;
}

void Correlation::set(std::size_t x, std::size_t y, std::size_t b, double v) {
  if (mode_ != ArithmeticMode::floating)
    throw validation_error("cannot store a double in an exact correlation");
  floating_[idx(x, y, b)] = v;
}

double Correlation::at(std::size_t x, std::size_t y, std::size_t b) const {
  const std::size_t i = idx(x, y, b);
  return mode_ == ArithmeticMode::exact ? to_double(exact_[i]) : floating_[i];
}

Rat Correlation::exact_at(std::size_t x, std::size_t y, std::size_t b) const {
  if (mode_ != ArithmeticMode::exact)
    throw validation_error("exact_at called on a floating correlation");
  return exact_[idx(x, y, b)];
}

void Correlation::check_normalized() const {
  for (std::size_t x = 0; x < spaces_.nx(); ++x)
    for (std::size_t y = 0; y < spaces_.ny(); ++y) {
      if (mode_ == ArithmeticMode::exact) {
        Rat sum(0);
        for (std::size_t b = 0; b < spaces_.nb(); ++b) {
          const Rat v = exact_at(x, y, b);
          if (v < Rat(0)) throw validation_error("correlation entry below 0");
          sum += v;
        }
        if (sum != Rat(1))
          throw validation_error("correlation column (" + spaces_.X()[x] + ", " + spaces_.Y()[y] +
                                 ") sums to " + to_string(sum));
      } else {
        double sum = 0.0;
        for (std::size_t b = 0; b < spaces_.nb(); ++b) {
          const double v = at(x, y, b);
          if (v < -tol_) throw validation_error("correlation entry below 0");
          sum += v;
        }
        if (std::abs(sum - 1.0) > 8.0 * static_cast<double>(spaces_.nb()) * tol_)
          throw validation_error("correlation column (" + spaces_.X()[x] + ", " + spaces_.Y()[y] +
                                 ") sums to " + std::to_string(sum));
      }
    }
}

Correlation eval_classical(const TaskSpaces& s, const ClassicalPureStrategy& c) {
  validate_classical(s, c);
  Correlation out(s, ArithmeticMode::exact);
  for (std::size_t x = 0; x < s.nx(); ++x)
    for (std::size_t y = 0; y < s.ny(); ++y)
      out.set(x, y, static_cast<std::size_t>(c.decode[y][c.encode[x]]), Rat(1));
  out.check_normalized();
  return out;
}

Correlation eval_quantum(const TaskSpaces& s, const QuantumStrategy& q, double tol) {
  validate_quantum(s, q, tol);
  const PrimeDim d = s.d();
  Correlation out(s, ArithmeticMode::floating, tol);
  for (std::size_t y = 0; y < s.ny(); ++y) {
    const std::vector<Matrix> effects = decode_effects(d, q.decode[y]);
    for (std::size_t x = 0; x < s.nx(); ++x) {
      const Matrix rho = encode_state(d, q.encode[x]);
      std::vector<double> p(s.nb(), 0.0);
      for (std::size_t j = 0; j < effects.size(); ++j) {
        const std::size_t b = q.post[y].empty() ? j : static_cast<std::size_t>(q.post[y][j]);
        p[b] += (rho * effects[j]).trace().real();
      }
      for (std::size_t b = 0; b < s.nb(); ++b) out.set(x, y, b, p[b]);
    }
  }
  out.check_normalized();
  return out;
}

Correlation eval_stabilizer_exact(const TaskSpaces& s, const QuantumStrategy& q) {
  validate_quantum(s, q);
  if (!is_stabilizer_typed(q))
    throw validation_error(
        "exact evaluation needs named eigenstates and named bases throughout");
  const PrimeDim d = s.d();
  Correlation out(s, ArithmeticMode::exact);
  for (std::size_t y = 0; y < s.ny(); ++y) {
    const int k = std::get<MubMeasurement>(q.decode[y]).k;
    for (std::size_t x = 0; x < s.nx(); ++x) {
      const StabilizerStateId enc = std::get<StabilizerStateId>(q.encode[x]);
      std::vector<Rat> p(s.nb(), Rat(0));
      for (int j = 0; j < d.value(); ++j) {
        const std::size_t b =
            q.post[y].empty() ? static_cast<std::size_t>(j) : static_cast<std::size_t>(q.post[y][j]);
        p[b] += overlap(d, enc, {k, j});
      }
      for (std::size_t b = 0; b < s.nb(); ++b) out.set(x, y, b, p[b]);
    }
  }
  out.check_normalized();
  return out;
}

Correlation eval_shared(const TaskSpaces& s, const SharedStrategy& mix, double tol) {
  validate_shared(s, mix, tol);
  std::vector<Correlation> parts;
  parts.reserve(mix.weights.size());
  for (const auto& c : mix.classical_atoms) parts.push_back(eval_classical(s, c));
  for (const auto& q : mix.quantum_atoms) parts.push_back(eval_quantum(s, q, tol));
  return mix_correlations(mix.weights, parts);
}

Correlation mix_correlations(const std::vector<Rat>& weights,
                             const std::vector<Correlation>& parts) {
  if (parts.empty() || weights.size() != parts.size())
    throw validation_error("mixture needs one weight per correlation");
  Rat total(0);
  for (const Rat& w : weights) {
    if (w < Rat(0)) throw validation_error("mixture weights must be nonnegative");
    total += w;
  }
  if (total != Rat(1)) throw validation_error("mixture weights sum to " + to_string(total));
  const TaskSpaces& s = parts.front().spaces();
  bool all_exact = true;
  double tol = 0.0;
  for (const Correlation& p : parts) {
    if (!(p.spaces() == s)) throw validation_error("mixture parts disagree on task spaces");
    all_exact = all_exact && p.mode() == ArithmeticMode::exact;
    tol = std::max(tol, p.mode() == ArithmeticMode::floating ? p.tol() : 0.0);
  }
  Correlation out(s, all_exact ? ArithmeticMode::exact : ArithmeticMode::floating,
                  all_exact ? 1e-12 : tol);
  for (std::size_t x = 0; x < s.nx(); ++x)
    for (std::size_t y = 0; y < s.ny(); ++y)
      for (std::size_t b = 0; b < s.nb(); ++b) {
        if (all_exact) {
          Rat acc(0);
          for (std::size_t i = 0; i < parts.size(); ++i)
            acc += weights[i] * parts[i].exact_at(x, y, b);
          out.set(x, y, b, acc);
        } else {
          double acc = 0.0;
          for (std::size_t i = 0; i < parts.size(); ++i)
            acc += to_double(weights[i]) * parts[i].at(x, y, b);
          out.set(x, y, b, acc);
        }
      }
  out.check_normalized();
  return out;
}

double correlation_distance(const Correlation& p, const Correlation& q) {
  if (!(p.spaces() == q.spaces()))
    throw validation_error("correlation_distance: tables live on different task spaces");
  const TaskSpaces& s = p.spaces();
  const bool exact =
      p.mode() == ArithmeticMode::exact && q.mode() == ArithmeticMode::exact;
  Rat worst_exact(0);
  double worst = 0.0;
  for (std::size_t x = 0; x < s.nx(); ++x)
    for (std::size_t y = 0; y < s.ny(); ++y)
      for (std::size_t b = 0; b < s.nb(); ++b) {
        if (exact)
          worst_exact = std::max(worst_exact, rat_abs(p.exact_at(x, y, b) - q.exact_at(x, y, b)));
        else
          worst = std::max(worst, std::abs(p.at(x, y, b) - q.at(x, y, b)));
      }
  return exact ? to_double(worst_exact) : worst;
}

}  // namespace oneway
