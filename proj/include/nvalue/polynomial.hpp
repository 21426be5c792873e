#pragma once

// Sparse multivariate polynomials over arbitrary-precision integers and
// rationals. Terms are keyed by exponent vectors and kept in lexicographic
// descending order, so the first stored term is the lex-leading one.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "nvalue/errors.hpp"

namespace nvalue {

using Integer = mpz_class;
using Rational = mpq_class;
using Exponent = std::uint32_t;
using ExponentVector = std::vector<Exponent>;

/// Lexicographic descending order on exponent vectors: x^2 > x y > y^2.
struct LexDescending {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const { return b < a; }
};

template <class Coeff>
class BasicPolynomial {
 public:
  using coefficient_type = Coeff;
  using TermMap = std::map<ExponentVector, Coeff, LexDescending>;

  BasicPolynomial() = default;
  explicit BasicPolynomial(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  /// Builds from an arbitrary term list; repeated exponents are summed and
  /// zero coefficients dropped.
  BasicPolynomial(std::vector<std::string> vars,
                  const std::vector<std::pair<ExponentVector, Coeff>>& terms)
      : vars_(std::move(vars)) {
    for (const auto& [e, c] : terms) accumulate(e, c);
  }

  static BasicPolynomial constant(std::vector<std::string> vars, const Coeff& c) {
    BasicPolynomial p(std::move(vars));
    p.accumulate(ExponentVector(p.nvars(), 0), c);
    return p;
  }

  static BasicPolynomial one(std::vector<std::string> vars) { return constant(std::move(vars), Coeff(1)); }

  static BasicPolynomial variable(std::vector<std::string> vars, std::size_t index) {
    BasicPolynomial p(std::move(vars));
    if (index >= p.nvars()) throw Error("variable index out of range");
    ExponentVector e(p.nvars(), 0);
    e[index] = 1;
    p.accumulate(e, Coeff(1));
    return p;
  }

  static BasicPolynomial monomial(std::vector<std::string> vars, ExponentVector e, const Coeff& c) {
    BasicPolynomial p(std::move(vars));
    p.accumulate(e, c);
    return p;
  }

  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Coeff coefficient(const ExponentVector& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  /// Lex-leading term; undefined on the zero polynomial.
  const std::pair<const ExponentVector, Coeff>& leading() const { return *terms_.begin(); }

  /// Maximum total degree, -1 for zero.
  long total_degree() const {
    long d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<long>(sum(e)));
    return d;
  }

  /// Adds c * x^e in place. Only used while a value is still being built.
  void accumulate(const ExponentVector& e, const Coeff& c) {
    if (e.size() != vars_.size()) throw Error("exponent vector length does not match variable count");
    if constexpr (std::is_same_v<Coeff, Rational>) {
      // mpq arithmetic requires canonical operands
      if (sgn(c.get_den()) < 0 || (c.get_den() != 1 && gcd(c.get_num(), c.get_den()) != 1)) {
        Rational canonical(c);
        canonical.canonicalize();
        return accumulate(e, canonical);
      }
    }
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  BasicPolynomial operator-() const {
    BasicPolynomial r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  BasicPolynomial& operator+=(const BasicPolynomial& b) {
    check_same_vars(b);
    for (const auto& [e, c] : b.terms_) accumulate(e, c);
    return *this;
  }

  BasicPolynomial& operator-=(const BasicPolynomial& b) {
    check_same_vars(b);
    for (const auto& [e, c] : b.terms_) accumulate(e, Coeff(-c));
    return *this;
  }

  friend BasicPolynomial operator+(BasicPolynomial a, const BasicPolynomial& b) { return a += b; }
  friend BasicPolynomial operator-(BasicPolynomial a, const BasicPolynomial& b) { return a -= b; }

  friend BasicPolynomial operator*(const BasicPolynomial& a, const BasicPolynomial& b) {
    a.check_same_vars(b);
    BasicPolynomial r(a.vars_);
    const std::size_t n = a.nvars();
    ExponentVector e(n);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
        r.accumulate(e, Coeff(ca * cb));
      }
    }
    return r;
  }

  BasicPolynomial& operator*=(const BasicPolynomial& b) { return *this = *this * b; }

  BasicPolynomial scaled(const Coeff& s) const {
    BasicPolynomial r(vars_);
    if (s == 0) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, Coeff(c * s));
    return r;
  }

  /// Multiplies by the monomial x^shift (exponent-wise addition).
  BasicPolynomial shifted(const ExponentVector& shift) const {
    if (shift.size() != vars_.size()) throw Error("shift length does not match variable count");
    BasicPolynomial r(vars_);
    for (const auto& [e, c] : terms_) {
      ExponentVector s(e);
      for (std::size_t i = 0; i < s.size(); ++i) s[i] += shift[i];
      r.terms_.emplace_hint(r.terms_.end(), std::move(s), c);
    }
    return r;
  }

  friend bool operator==(const BasicPolynomial& a, const BasicPolynomial& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  void check_same_vars(const BasicPolynomial& b) const {
    if (vars_ != b.vars_) throw VariableMismatch("polynomials are over different variable lists");
  }

  static Exponent sum(const ExponentVector& e) {
    Exponent s = 0;
    for (Exponent x : e) s += x;
    return s;
  }

 private:
  std::vector<std::string> vars_;
  TermMap terms_;
};

using Polynomial = BasicPolynomial<Integer>;
using RationalPolynomial = BasicPolynomial<Rational>;

Polynomial add(const Polynomial& a, const Polynomial& b);
Polynomial mul(const Polynomial& a, const Polynomial& b);

/// a^k by repeated squaring; pow(a, 0) == 1.
Polynomial pow(const Polynomial& a, unsigned k);

struct ComplexValue {
  std::complex<double> value;
  bool overflow = false;  // some coefficient or partial sum left the double range
};

ComplexValue eval_complex(const Polynomial& a, const std::vector<std::complex<double>>& point);

/// Sets variable `index` to zero and removes it from the variable list.
Polynomial substitute_zero(const Polynomial& a, std::size_t index);

/// Divides every exponent of variable `index` by `divisor`, optionally
/// renaming the variable. Throws IndivisibleExponent if any exponent is not a
/// multiple of `divisor`.
Polynomial exponent_divide(const Polynomial& a, std::size_t index, Exponent divisor,
                           std::optional<std::string> rename = std::nullopt);

/// Swaps variables i and j (values only; the variable list is unchanged).
Polynomial swap_variables(const Polynomial& a, std::size_t i, std::size_t j);

bool is_symmetric(const Polynomial& a);

/// Common total degree of all terms, or nullopt. The zero polynomial has none.
std::optional<Exponent> is_homogeneous(const Polynomial& a);

/// Lifts integer coefficients to rationals.
RationalPolynomial to_rational(const Polynomial& a);

/// Clears a rational polynomial to an integer one; throws
/// NonIntegralCoefficient if some coefficient has a nontrivial denominator.
Polynomial to_integer(const RationalPolynomial& a);

/// Copy of `a` re-expressed over a (super)set of variables. Every variable
/// of `a` must appear in `target`; missing ones get exponent zero.
Polynomial embed(const Polynomial& a, const std::vector<std::string>& target);

}  // namespace nvalue
