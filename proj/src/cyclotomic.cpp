#include "nvalue/cyclotomic.hpp"

#include <cassert>
#include <cstdlib>
#include <stdexcept>

namespace nvalue {

namespace {

using Dense = std::vector<Integer>;

Dense dense_mul(const Dense& a, const Dense& b) {
  Dense r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// Quotient of num by a monic divisor; the remainder must vanish.
Dense dense_exact_div(Dense num, const Dense& den) {
  const std::size_t dd = den.size() - 1;
  if (num.size() < den.size()) std::abort();
  Dense q(num.size() - dd, 0);
  for (std::size_t k = num.size(); k-- > dd;) {
    const Integer c = num[k];
    q[k - dd] = c;
    if (c == 0) continue;
    for (std::size_t i = 0; i <= dd; ++i) num[k - dd + i] -= c * den[i];
  }
  for (std::size_t i = 0; i < dd; ++i) {
    // inexact division means the divisor table is wrong
    if (num[i] != 0) std::abort();
  }
  return q;
}

}  // namespace

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

CyclotomicPoly cyclotomic(unsigned n) {
  if (n == 0) throw Error("cyclotomic polynomial order must be positive");
  Dense num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  Dense den{1};
  for (unsigned d = 1; d < n; ++d) {
    if (n % d == 0) den = dense_mul(den, cyclotomic(d).coeffs);
  }
  CyclotomicPoly phi{n, dense_exact_div(std::move(num), den)};
  assert(phi.degree() == euler_phi(n));
  return phi;
}

CycloElement::CycloElement(std::shared_ptr<const CyclotomicPoly> modulus, std::vector<std::string> vars)
    : modulus_(std::move(modulus)) {
  coeffs_.assign(modulus_->degree(), Polynomial(std::move(vars)));
}

CycloElement::CycloElement(std::shared_ptr<const CyclotomicPoly> modulus, std::vector<Polynomial> coeffs)
    : modulus_(std::move(modulus)), coeffs_(std::move(coeffs)) {}

CycloElement CycloElement::term(std::shared_ptr<const CyclotomicPoly> modulus, const Polynomial& c,
                                unsigned power) {
  std::vector<Polynomial> wide(std::max<std::size_t>(power + 1, modulus->degree()), Polynomial(c.vars()));
  wide[power] = c;
  auto reduced = reduce(*modulus, std::move(wide));
  return CycloElement(std::move(modulus), std::move(reduced));
}

std::vector<Polynomial> CycloElement::reduce(const CyclotomicPoly& m, std::vector<Polynomial> wide) {
  const std::size_t d = m.degree();
  // t^k = t^{k-d} * (t^d - Phi_n(t)), top down; Phi_n is monic.
  for (std::size_t k = wide.size(); k-- > d;) {
    if (wide[k].is_zero()) continue;
    const Polynomial top = std::move(wide[k]);
    wide[k] = Polynomial(top.vars());
    for (std::size_t i = 0; i < d; ++i) {
      if (m.coeffs[i] != 0) wide[k - d + i] -= top.scaled(m.coeffs[i]);
    }
  }
  wide.resize(d, Polynomial(wide.empty() ? std::vector<std::string>{} : wide.front().vars()));
  return wide;
}

bool CycloElement::is_constant() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) return false;
  }
  return true;
}

const Polynomial& CycloElement::constant_part() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) {
      throw NonConstantInT("residual t^" + std::to_string(i) + " component in cyclotomic product of order " +
                           std::to_string(order()));
    }
  }
  return coeffs_.front();
}

CycloElement& CycloElement::operator+=(const CycloElement& b) {
  if (*modulus_ != *b.modulus_) throw Error("cyclotomic elements of different order");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
  return *this;
}

CycloElement operator*(const CycloElement& a, const CycloElement& b) {
  if (*a.modulus_ != *b.modulus_) throw Error("cyclotomic elements of different order");
  const std::size_t d = a.coeffs_.size();
  std::vector<Polynomial> wide(2 * d - 1, Polynomial(a.coeffs_.front().vars()));
  for (std::size_t i = 0; i < d; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      wide[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return CycloElement(a.modulus_, CycloElement::reduce(*a.modulus_, std::move(wide)));
}

}  // namespace nvalue
