#include "nvalue/factor.hpp"

#include <sstream>

namespace nvalue {

namespace {

unsigned strip(Integer& v, unsigned long p) {
  unsigned e = 0;
  while (mpz_divisible_ui_p(v.get_mpz_t(), p)) {
    mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), p);
    ++e;
  }
  return e;
}

}  // namespace

Factorization factorize(const Integer& value, unsigned long bound) {
  Factorization f;
  f.sign = sgn(value);
  if (f.sign == 0) return f;
  Integer rest = abs(value);

  auto try_div = [&](unsigned long d) {
    if (unsigned e = strip(rest, d); e > 0) f.factors.push_back({Integer(d), e});
  };
  try_div(2);
  try_div(3);
  for (unsigned long d = 5; d <= bound; d += 6) {
    if (Integer(d) * d > rest) break;
    try_div(d);
    try_div(d + 2);
  }

  if (rest > 1) {
    const bool small = rest <= Integer(bound) * bound;
    if (small || mpz_probab_prime_p(rest.get_mpz_t(), 30) > 0) {
      f.factors.push_back({rest, 1});
    } else {
      f.cofactor = rest;
    }
  }
  return f;
}

Integer multiply_back(const Factorization& f) {
  Integer r = f.sign;
  for (const auto& pp : f.factors) {
    Integer t;
    mpz_pow_ui(t.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent);
    r *= t;
  }
  return r * f.cofactor;
}

std::string to_string(const Factorization& f, bool with_sign) {
  if (f.sign == 0) return "0";
  std::ostringstream out;
  if (with_sign && f.sign < 0) out << '-';
  bool first = true;
  for (const auto& pp : f.factors) {
    if (!first) out << "·";
    out << pp.prime.get_str();
    if (pp.exponent > 1) out << '^' << pp.exponent;
    first = false;
  }
  if (!f.complete()) {
    if (!first) out << "·";
    out << '(' << f.cofactor.get_str() << ')';
    first = false;
  }
  if (first) out << '1';
  return out.str();
}

std::vector<unsigned> prime_divisors(unsigned n) {
  std::vector<unsigned> ps;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    ps.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

std::optional<unsigned> prime_power_base(unsigned n) {
  auto ps = prime_divisors(n);
  if (ps.size() != 1) return std::nullopt;
  return ps.front();
}

}  // namespace nvalue
