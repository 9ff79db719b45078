#include "oneway/opt.hpp"

#include <optional>

namespace oneway {

namespace {

std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return std::nullopt;
  return a * b;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    const auto next = checked_mul(r, base);
    if (!next) return std::nullopt;
    r = *next;
  }
  return r;
}

void require_budget(const std::optional<std::uint64_t>& candidates, std::uint64_t budget,
                    const char* method) {
  if (!candidates || *candidates > budget)
    throw budget_error(std::string(method) + " search would cover " +
                       (candidates ? std::to_string(*candidates) : std::string(">2^64")) +
                       " candidates, budget is " + std::to_string(budget));
}

std::vector<int> encoding_digits(std::uint64_t e, std::size_t nx, int d) {
  // Digit for x = 0 is most significant, so the index order is the
  // lexicographic order on encodings.
  std::vector<int> enc(nx);
  for (std::size_t x = nx; x-- > 0;) {
    enc[x] = static_cast<int>(e % static_cast<std::uint64_t>(d));
    e /= static_cast<std::uint64_t>(d);
  }
  return enc;
}

// Best decoding for a fixed encoding. Separable per question and per
// message, so the lexicographically first maximizer is the first-argmax
// table; the returned score covers all |B|^(d |Y|) decodings.
long long best_decoding(const TaskSpaces& s, const PayoffTable& pay, const std::vector<int>& enc,
                        std::vector<std::vector<int>>* rows) {
  const int d = s.dim();
  long long total = 0;
  if (rows) rows->assign(s.ny(), std::vector<int>(d, 0));
  for (std::size_t y = 0; y < s.ny(); ++y) {
    for (int m = 0; m < d; ++m) {
      long long best = -1;
      int best_b = 0;
      for (std::size_t b = 0; b < s.nb(); ++b) {
        long long w = 0;
        for (std::size_t x = 0; x < s.nx(); ++x)
          if (enc[x] == m) w += pay.weight[(x * s.ny() + y) * s.nb() + b];
        if (w > best) {
          best = w;
          best_b = static_cast<int>(b);
        }
      }
      total += best;
      if (rows) (*rows)[y][m] = best_b;
    }
  }
  return total;
}

}  // namespace

void validate_payoff(const TaskSpaces& s, const PayoffTable& pay) {
  if (pay.weight.size() != s.nx() * s.ny() * s.nb())
    throw validation_error("payoff table size does not match task spaces");
  if (pay.divisor <= 0) throw validation_error("payoff divisor must be positive");
  for (long long w : pay.weight)
    if (w < 0) throw validation_error("payoff weights must be nonnegative");
}

OptReport classical_optimum(const TaskSpaces& s, const PayoffTable& pay, std::uint64_t budget) {
  validate_payoff(s, pay);
  const int d = s.dim();
  const auto n_enc = checked_pow(static_cast<std::uint64_t>(d), s.nx());
  const auto n_dec = checked_pow(static_cast<std::uint64_t>(s.nb()),
                                 static_cast<std::uint64_t>(d) * s.ny());
  const auto candidates = n_enc && n_dec ? checked_mul(*n_enc, *n_dec) : std::nullopt;
  require_budget(candidates, budget, "exhaustive");

  const long long total_enc = static_cast<long long>(*n_enc);
  long long best_val = -1;
  long long best_e = 0;
#ifdef _OPENMP
#pragma omp parallel
  {
    long long loc_val = -1, loc_e = 0;
#pragma omp for nowait
    for (long long e = 0; e < total_enc; ++e) {
      const long long v =
          best_decoding(s, pay, encoding_digits(static_cast<std::uint64_t>(e), s.nx(), d), nullptr);
      if (v > loc_val) {
        loc_val = v;
        loc_e = e;
      }
    }
    // Deterministic merge: highest value, then lowest encoding index.
#pragma omp critical
    if (loc_val > best_val || (loc_val == best_val && loc_e < best_e)) {
      best_val = loc_val;
      best_e = loc_e;
    }
  }
#else
  for (long long e = 0; e < total_enc; ++e) {
    const long long v =
        best_decoding(s, pay, encoding_digits(static_cast<std::uint64_t>(e), s.nx(), d), nullptr);
    if (v > best_val) {
      best_val = v;
      best_e = e;
    }
  }
#endif

  OptReport rep;
  rep.method = "exhaustive";
  rep.search_size = *candidates;
  rep.argmax.encode = encoding_digits(static_cast<std::uint64_t>(best_e), s.nx(), d);
  best_decoding(s, pay, rep.argmax.encode, &rep.argmax.decode);
  rep.best = Rat(best_val, pay.divisor);
  rep.best_value = to_double(rep.best);
  validate_classical(s, rep.argmax);
  return rep;
}

OptReport classical_optimum_serial(const TaskSpaces& s, const PayoffTable& pay,
                                   std::uint64_t budget) {
  validate_payoff(s, pay);
  const int d = s.dim();
  const auto n_enc = checked_pow(static_cast<std::uint64_t>(d), s.nx());
  const std::uint64_t rows_per_y =
      *checked_pow(static_cast<std::uint64_t>(s.nb()), static_cast<std::uint64_t>(d));
  const auto n_dec = checked_pow(rows_per_y, s.ny());
  const auto candidates = n_enc && n_dec ? checked_mul(*n_enc, *n_dec) : std::nullopt;
  require_budget(candidates, budget, "exhaustive");

  OptReport rep;
  rep.method = "exhaustive";
  rep.search_size = *candidates;
  long long best_val = -1;

  for (std::uint64_t e = 0; e < *n_enc; ++e) {
    const std::vector<int> enc = encoding_digits(e, s.nx(), d);
    // Decodings in lexicographic order: question 0's row is the most
    // significant digit block, message 0 the most significant digit.
    for (std::uint64_t dec = 0; dec < *n_dec; ++dec) {
      std::vector<std::vector<int>> rows(s.ny());
      std::uint64_t rem = dec;
      for (std::size_t y = s.ny(); y-- > 0;) {
        std::uint64_t row_code = rem % rows_per_y;
        rem /= rows_per_y;
        rows[y].assign(d, 0);
        for (int m = d; m-- > 0;) {
          rows[y][m] = static_cast<int>(row_code % s.nb());
          row_code /= s.nb();
        }
      }
      long long v = 0;
      for (std::size_t x = 0; x < s.nx(); ++x)
        for (std::size_t y = 0; y < s.ny(); ++y)
          v += pay.weight[(x * s.ny() + y) * s.nb() +
                          static_cast<std::size_t>(rows[y][enc[x]])];
      if (v > best_val) {
        best_val = v;
        rep.argmax.encode = enc;
        rep.argmax.decode = rows;
      }
    }
  }
  rep.best = Rat(best_val, pay.divisor);
  rep.best_value = to_double(rep.best);
  validate_classical(s, rep.argmax);
  return rep;
}

OptReport classical_optimum_decomposed(const TaskSpaces& s, const PayoffTable& pay,
                                       std::uint64_t budget) {
  validate_payoff(s, pay);
  const int d = s.dim();
  const std::uint64_t rows_per_y =
      *checked_pow(static_cast<std::uint64_t>(s.nb()), static_cast<std::uint64_t>(d));
  const auto n_dec = checked_pow(rows_per_y, s.ny());
  const auto work = n_dec ? checked_mul(*n_dec, s.nx()) : std::nullopt;
  require_budget(work, budget, "per-string-decomposed");

  const long long total_dec = static_cast<long long>(*n_dec);
  long long best_val = -1;
  long long best_dec = 0;

  const auto decode_rows = [&](std::uint64_t dec) {
    std::vector<std::vector<int>> rows(s.ny());
    std::uint64_t rem = dec;
    for (std::size_t y = s.ny(); y-- > 0;) {
      std::uint64_t row_code = rem % rows_per_y;
      rem /= rows_per_y;
      rows[y].assign(d, 0);
      for (int m = d; m-- > 0;) {
        rows[y][m] = static_cast<int>(row_code % s.nb());
        row_code /= s.nb();
      }
    }
    return rows;
  };
  const auto score = [&](const std::vector<std::vector<int>>& rows, std::vector<int>* enc) {
    if (enc) enc->assign(s.nx(), 0);
    long long total = 0;
    for (std::size_t x = 0; x < s.nx(); ++x) {
      long long best = -1;
      int best_m = 0;
      for (int m = 0; m < d; ++m) {
        long long w = 0;
        for (std::size_t y = 0; y < s.ny(); ++y)
          w += pay.weight[(x * s.ny() + y) * s.nb() + static_cast<std::size_t>(rows[y][m])];
        if (w > best) {
          best = w;
          best_m = m;
        }
      }
      total += best;
      if (enc) (*enc)[x] = best_m;
    }
    return total;
  };

#ifdef _OPENMP
#pragma omp parallel
  {
    long long loc_val = -1, loc_dec = 0;
#pragma omp for nowait
    for (long long dec = 0; dec < total_dec; ++dec) {
      const long long v = score(decode_rows(static_cast<std::uint64_t>(dec)), nullptr);
      if (v > loc_val) {
        loc_val = v;
        loc_dec = dec;
      }
    }
#pragma omp critical
    if (loc_val > best_val || (loc_val == best_val && loc_dec < best_dec)) {
      best_val = loc_val;
      best_dec = loc_dec;
    }
  }
#else
  for (long long dec = 0; dec < total_dec; ++dec) {
    const long long v = score(decode_rows(static_cast<std::uint64_t>(dec)), nullptr);
    if (v > best_val) {
      best_val = v;
      best_dec = dec;
    }
  }
#endif

  OptReport rep;
  rep.method = "per-string-decomposed";
  rep.search_size = *n_dec;
  rep.argmax.decode = decode_rows(static_cast<std::uint64_t>(best_dec));
  score(rep.argmax.decode, &rep.argmax.encode);
  rep.best = Rat(best_val, pay.divisor);
  rep.best_value = to_double(rep.best);
  validate_classical(s, rep.argmax);
  return rep;
}

}  // namespace oneway
