#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace oneway {

// Exact arithmetic for probabilities and weights. All deterministic and
// stabilizer-overlap code paths stay in Rat; conversion to double happens
// only at reporting boundaries.
using Rat = boost::rational<long long>;

inline double to_double(const Rat& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

// Canonical text form "num/den" (integers shown without the denominator).
inline std::string to_string(const Rat& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// Accepts "3", "-3", "3/4". Throws std::invalid_argument on malformed input.
inline Rat parse_rat(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(std::stoll(s));
    const long long num = std::stoll(s.substr(0, slash));
    const long long den = std::stoll(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational: '" + s + "'");
  }
}

inline Rat rat_abs(const Rat& r) { return r < Rat(0) ? -r : r; }

}  // namespace oneway
