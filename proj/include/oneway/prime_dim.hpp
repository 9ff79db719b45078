#pragma once

#include <stdexcept>
#include <string>

namespace oneway {

// Raised whenever an input breaks a documented precondition. The message
// names the violated invariant and, where meaningful, the offending value.
class validation_error : public std::invalid_argument {
 public:
  explicit validation_error(const std::string& what) : std::invalid_argument(what) {}
};

// Hilbert-space dimension, restricted to primes. Everything downstream
// (Pauli phase arithmetic, mutually unbiased bases, the shared-dit
// simulation) silently assumes primality, so it is enforced once here.
class PrimeDim {
 public:
  explicit PrimeDim(int d) : d_(d) {
    if (d < 2 || !is_prime(d))
      throw validation_error("dimension must be prime, got " + std::to_string(d));
  }

  int value() const { return d_; }
  bool operator==(const PrimeDim& o) const { return d_ == o.d_; }

  static bool is_prime(int n) {
    if (n < 2) return false;
    for (int p = 2; p * p <= n; ++p)
      if (n % p == 0) return false;
    return true;
  }

 private:
  int d_;
};

}  // namespace oneway
