#include "nvalue/polynomial.hpp"

#include <cmath>
#include <limits>

namespace nvalue {

Polynomial add(const Polynomial& a, const Polynomial& b) { return a + b; }

Polynomial mul(const Polynomial& a, const Polynomial& b) { return a * b; }

Polynomial pow(const Polynomial& a, unsigned k) {
  Polynomial result = Polynomial::one(a.vars());
  Polynomial base = a;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

namespace {

double to_double(const Integer& c, bool& overflow) {
  // mpz_get_d truncates silently once the exponent leaves the double range.
  if (mpz_sizeinbase(c.get_mpz_t(), 2) > static_cast<std::size_t>(std::numeric_limits<double>::max_exponent)) {
    overflow = true;
    return sgn(c) < 0 ? -std::numeric_limits<double>::infinity() : std::numeric_limits<double>::infinity();
  }
  return c.get_d();
}

}  // namespace

ComplexValue eval_complex(const Polynomial& a, const std::vector<std::complex<double>>& point) {
  if (point.size() != a.nvars()) throw VariableMismatch("evaluation point has the wrong length");
  using C = std::complex<double>;
  // powers[i][k] = point[i]^k, grown on demand
  std::vector<std::vector<C>> powers(point.size(), std::vector<C>{C(1.0, 0.0)});
  ComplexValue out{C(0.0, 0.0), false};
  for (const auto& [e, c] : a.terms()) {
    C term(to_double(c, out.overflow), 0.0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      auto& pw = powers[i];
      while (pw.size() <= e[i]) pw.push_back(pw.back() * point[i]);
      term *= pw[e[i]];
    }
    out.value += term;
  }
  if (!std::isfinite(out.value.real()) || !std::isfinite(out.value.imag())) out.overflow = true;
  return out;
}

Polynomial substitute_zero(const Polynomial& a, std::size_t index) {
  if (index >= a.nvars()) throw Error("variable index out of range");
  std::vector<std::string> vars = a.vars();
  vars.erase(vars.begin() + static_cast<std::ptrdiff_t>(index));
  Polynomial r(vars);
  for (const auto& [e, c] : a.terms()) {
    if (e[index] != 0) continue;
    ExponentVector reduced(e);
    reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(index));
    r.accumulate(reduced, c);
  }
  return r;
}

Polynomial exponent_divide(const Polynomial& a, std::size_t index, Exponent divisor,
                           std::optional<std::string> rename) {
  if (index >= a.nvars()) throw Error("variable index out of range");
  if (divisor == 0) throw Error("exponent divisor must be positive");
  std::vector<std::string> vars = a.vars();
  if (rename) vars[index] = *rename;
  Polynomial r(vars);
  for (const auto& [e, c] : a.terms()) {
    if (e[index] % divisor != 0) {
      throw IndivisibleExponent("exponent " + std::to_string(e[index]) + " of " + a.vars()[index] +
                                " is not divisible by " + std::to_string(divisor));
    }
    ExponentVector d(e);
    d[index] /= divisor;
    r.accumulate(d, c);
  }
  return r;
}

Polynomial swap_variables(const Polynomial& a, std::size_t i, std::size_t j) {
  if (i >= a.nvars() || j >= a.nvars()) throw Error("variable index out of range");
  Polynomial r(a.vars());
  for (const auto& [e, c] : a.terms()) {
    ExponentVector s(e);
    std::swap(s[i], s[j]);
    r.accumulate(s, c);
  }
  return r;
}

bool is_symmetric(const Polynomial& a) {
  // Adjacent transpositions generate the full symmetric group.
  for (std::size_t i = 0; i + 1 < a.nvars(); ++i) {
    if (!(swap_variables(a, i, i + 1) == a)) return false;
  }
  return true;
}

std::optional<Exponent> is_homogeneous(const Polynomial& a) {
  if (a.is_zero()) return std::nullopt;
  const Exponent d = Polynomial::sum(a.leading().first);
  for (const auto& [e, c] : a.terms()) {
    if (Polynomial::sum(e) != d) return std::nullopt;
  }
  return d;
}

RationalPolynomial to_rational(const Polynomial& a) {
  RationalPolynomial r(a.vars());
  for (const auto& [e, c] : a.terms()) r.accumulate(e, Rational(c));
  return r;
}

Polynomial to_integer(const RationalPolynomial& a) {
  Polynomial r(a.vars());
  for (const auto& [e, c] : a.terms()) {
    if (c.get_den() != 1) throw NonIntegralCoefficient("coefficient " + c.get_str() + " is not an integer");
    r.accumulate(e, c.get_num());
  }
  return r;
}

Polynomial embed(const Polynomial& a, const std::vector<std::string>& target) {
  std::vector<std::size_t> where(a.nvars());
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    auto it = std::find(target.begin(), target.end(), a.vars()[i]);
    if (it == target.end()) throw VariableMismatch("variable " + a.vars()[i] + " missing from target list");
    where[i] = static_cast<std::size_t>(it - target.begin());
  }
  Polynomial r(target);
  for (const auto& [e, c] : a.terms()) {
    ExponentVector t(target.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) t[where[i]] = e[i];
    r.accumulate(t, c);
  }
  return r;
}

}  // namespace nvalue
