#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nvalue/polynomial.hpp"

namespace nvalue {

struct PrimePower {
  Integer prime;
  unsigned exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// sign * prod(prime^exponent) * cofactor. The cofactor is 1 unless trial
/// division stopped on a composite it could not split.
struct Factorization {
  int sign = 1;  // 0 for zero
  std::vector<PrimePower> factors;
  Integer cofactor = 1;

  bool complete() const { return cofactor == 1; }
};

inline constexpr unsigned long kDefaultTrialBound = 1'000'000;

/// Trial division by every integer candidate up to `bound`; whatever remains
/// above the bound is kept as a prime when it passes a probable-prime test
/// (or is below bound^2), else as the cofactor.
Factorization factorize(const Integer& value, unsigned long bound = kDefaultTrialBound);

Integer multiply_back(const Factorization& f);

/// "2^3·3^4·19"; the sign is prefixed as "-" when `with_sign`.
std::string to_string(const Factorization& f, bool with_sign = true);

/// Base prime of n when n = p^m (m >= 1).
std::optional<unsigned> prime_power_base(unsigned n);

std::vector<unsigned> prime_divisors(unsigned n);

}  // namespace nvalue
