#pragma once

// Exact arithmetic in Z[u,v,z][t] / Phi_n(t), the carrier for a primitive
// n-th root of unity.

#include <memory>
#include <vector>

#include "nvalue/polynomial.hpp"

namespace nvalue {

/// Phi_n(t), coefficients in ascending degree. Monic, degree phi(n).
struct CyclotomicPoly {
  unsigned order = 1;
  std::vector<Integer> coeffs;

  std::size_t degree() const { return coeffs.size() - 1; }
  friend bool operator==(const CyclotomicPoly&, const CyclotomicPoly&) = default;
};

/// Phi_n computed as (t^n - 1) / prod_{d | n, d < n} Phi_d by exact long
/// division. n >= 1.
CyclotomicPoly cyclotomic(unsigned n);

unsigned euler_phi(unsigned n);

/// Residue class sum_i coeffs[i] t^i modulo Phi_n with polynomial
/// coefficients; the t-degree is always below phi(n).
class CycloElement {
 public:
  /// Zero element of Z[vars][t]/Phi_n.
  CycloElement(std::shared_ptr<const CyclotomicPoly> modulus, std::vector<std::string> vars);

  /// c * t^power, reduced.
  static CycloElement term(std::shared_ptr<const CyclotomicPoly> modulus, const Polynomial& c, unsigned power);

  unsigned order() const { return modulus_->order; }
  const std::vector<Polynomial>& coeffs() const { return coeffs_; }

  /// True when every coefficient of t^1 .. t^{phi(n)-1} vanishes.
  bool is_constant() const;

  /// Coefficient of t^0. Throws NonConstantInT unless is_constant().
  const Polynomial& constant_part() const;

  CycloElement& operator+=(const CycloElement& b);
  friend CycloElement operator+(CycloElement a, const CycloElement& b) { return a += b; }
  friend CycloElement operator*(const CycloElement& a, const CycloElement& b);

 private:
  CycloElement(std::shared_ptr<const CyclotomicPoly> modulus, std::vector<Polynomial> coeffs);
  static std::vector<Polynomial> reduce(const CyclotomicPoly& m, std::vector<Polynomial> wide);

  std::shared_ptr<const CyclotomicPoly> modulus_;
  std::vector<Polynomial> coeffs_;
};

}  // namespace nvalue
