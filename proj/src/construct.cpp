#include "nvalue/construct.hpp"

#include <memory>

#include "nvalue/cyclotomic.hpp"

namespace nvalue {

namespace {

void require_order(unsigned n) {
  if (n == 0) throw Error("order n must be at least 1");
}

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// Coefficient of x^a y^b gets (-1)^{n(a+b)}, undoing u^n = (-1)^n x, v^n = (-1)^n y.
Polynomial fold_inverse_sign(const Polynomial& p, unsigned n) {
  if (n % 2 == 0) return p;
  Polynomial r(p.vars());
  for (const auto& [e, c] : p.terms()) r.accumulate(e, ((e[0] + e[1]) % 2 == 0) ? Integer(c) : Integer(-c));
  return r;
}

}  // namespace

Polynomial build_pn_cyclo(unsigned n) {
  require_order(n);
  static const std::vector<std::string> uvz{"u", "v", "z"};
  auto modulus = std::make_shared<const CyclotomicPoly>(cyclotomic(n));

  const Polynomial z = Polynomial::variable(uvz, 2);
  CycloElement product = CycloElement::term(modulus, Polynomial::one(uvz), 0);
  for (unsigned k = 1; k <= n; ++k) {
    // z - sum_j C(n,j) u^{n-j} v^j eps^{kj}; eps^n = 1 modulo Phi_n
    CycloElement factor = CycloElement::term(modulus, z, 0);
    for (unsigned j = 0; j <= n; ++j) {
      Polynomial mono = Polynomial::monomial(uvz, {n - j, j, 0}, -binomial(n, j));
      factor += CycloElement::term(modulus, mono, static_cast<unsigned>((static_cast<unsigned long>(k) * j) % n));
    }
    product = product * factor;
  }

  const Polynomial& in_uvz = product.constant_part();
  Polynomial in_xyz = exponent_divide(exponent_divide(in_uvz, 0, n, "x"), 1, n, "y");
  return fold_inverse_sign(in_xyz, n);
}

Polynomial power_sum(unsigned n, unsigned m) {
  require_order(n);
  if (m == 0) throw Error("power sum index must be at least 1");
  Polynomial p(xy_vars());
  const bool negate = (static_cast<unsigned long>(n) * m) % 2 == 1;
  for (unsigned i = 0; i <= m; ++i) {
    Integer c = binomial(n * m, n * i) * n;
    p.accumulate({m - i, i}, negate ? Integer(-c) : c);
  }
  return p;
}

Polynomial build_pn_newton_identities(unsigned n) {
  require_order(n);
  std::vector<RationalPolynomial> sums{RationalPolynomial(xy_vars())};
  for (unsigned m = 1; m <= n; ++m) sums.push_back(to_rational(power_sum(n, m)));

  // k e_k = sum_{i=1..k} (-1)^{i-1} e_{k-i} P_i
  std::vector<RationalPolynomial> e{RationalPolynomial::one(xy_vars())};
  for (unsigned k = 1; k <= n; ++k) {
    RationalPolynomial acc(xy_vars());
    for (unsigned i = 1; i <= k; ++i) {
      RationalPolynomial t = e[k - i] * sums[i];
      if (i % 2 == 0) acc -= t;
      else acc += t;
    }
    e.push_back(acc.scaled(Rational(1, k)));
  }

  RationalPolynomial p(xyz_vars());
  for (unsigned k = 0; k <= n; ++k) {
    const Rational sign = (k % 2 == 0) ? 1 : -1;
    for (const auto& [ex, c] : e[k].terms()) p.accumulate({ex[0], ex[1], n - k}, Rational(sign * c));
  }
  return to_integer(p);
}

Polynomial build_pn(unsigned n) { return build_pn_newton_identities(n); }

Polynomial restrict_y0(unsigned n) { return substitute_zero(build_pn(n), 1); }

}  // namespace nvalue
