#pragma once

// Symmetric polynomials in (x, y, z) rewritten in e1 = x+y+z,
// e2 = xy+yz+zx, e3 = xyz. A partition (k1, k2, k3) with k1 >= k2 >= k3 >= 0
// stands for the monomial e1^{k1-k2} e2^{k2-k3} e3^{k3}, whose lex-leading
// term in (x, y, z) is x^{k1} y^{k2} z^{k3}.

#include <compare>
#include <map>
#include <vector>

#include <json.hpp>

#include "nvalue/polynomial.hpp"

namespace nvalue {

struct Partition {
  unsigned k1 = 0;
  unsigned k2 = 0;
  unsigned k3 = 0;

  unsigned weight() const { return k1 + k2 + k3; }
  bool is_sorted() const { return k1 >= k2 && k2 >= k3; }
  auto operator<=>(const Partition&) const = default;
};

/// All partitions of n into at most three parts, descending.
std::vector<Partition> partitions3(unsigned n);

class EBasisPolynomial {
 public:
  using TermMap = std::map<Partition, Integer, std::greater<>>;

  explicit EBasisPolynomial(unsigned degree) : degree_(degree) {}

  unsigned degree() const { return degree_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  /// Adds c to A_k. Throws InvalidPartition if k is not a sorted partition of
  /// the degree.
  void accumulate(const Partition& k, const Integer& c);

  friend bool operator==(const EBasisPolynomial&, const EBasisPolynomial&) = default;

 private:
  unsigned degree_;
  TermMap terms_;
};

/// Leading-term elimination. f must be a nonzero homogeneous symmetric
/// polynomial in three variables.
EBasisPolynomial decompose(const Polynomial& f);

/// Expands back to a polynomial in (x, y, z).
Polynomial recompose(const EBasisPolynomial& g);

/// A_{k1,k2,k3}; zero when absent.
Integer coefficient(const EBasisPolynomial& g, unsigned k1, unsigned k2, unsigned k3);

/// e1^a e2^b e3^c over (x, y, z).
Polynomial elementary_monomial(unsigned a, unsigned b, unsigned c);

struct PropositionCheck {
  Partition k;
  Integer expected;
  Integer actual;
  bool ok = false;
};

struct PropositionReport {
  unsigned n = 0;
  std::vector<PropositionCheck> checks;
  bool all_ok() const;
};

/// Checks the coefficients at e1^i e2^j of p_n: for odd n every A_{k1,k2,0}
/// with k2 > 0 vanishes; for n = 2k, A_{2k-i,i,0} = (-4)^i C(k, i).
PropositionReport verify_proposition(unsigned n);
PropositionReport verify_proposition(const EBasisPolynomial& decomposed);

/// {"n": n, "terms": [{"k": [k1,k2,k3], "A": "<decimal>"}...]}, partitions descending.
nlohmann::json to_json(const EBasisPolynomial& g);
EBasisPolynomial ebasis_from_json(const nlohmann::json& j);

/// Renders "e1^3 - 27 e3"; with `factored` the magnitudes become prime
/// power products such as "2^3·3^4·19".
std::string to_text(const EBasisPolynomial& g, bool factored = false);

namespace detail {

/// Generic elimination over m variables: returns, keyed by leading exponent
/// a (a_1 >= ... >= a_m), the coefficient of prod_i e_i^{a_i - a_{i+1}}.
std::map<ExponentVector, Integer, LexDescending> eliminate_elementary(const Polynomial& f);

}  // namespace detail

}  // namespace nvalue
