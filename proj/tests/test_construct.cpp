#include <doctest.h>

#include <memory>

#include "nvalue/construct.hpp"
#include "nvalue/cyclotomic.hpp"

using namespace nvalue;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

std::vector<Integer> dense_product(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  std::vector<Integer> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

Polynomial xyz(std::vector<std::pair<ExponentVector, Integer>> terms) { return Polynomial(xyz_vars(), terms); }

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1).coeffs == ints({-1, 1}));
  CHECK(cyclotomic(2).coeffs == ints({1, 1}));
  CHECK(cyclotomic(4).coeffs == ints({1, 0, 1}));
  CHECK(cyclotomic(12).coeffs == ints({1, 0, -1, 0, 1}));
  CHECK(cyclotomic(9).coeffs == ints({1, 0, 0, 1, 0, 0, 1}));
  CHECK_THROWS_AS(cyclotomic(0), Error);
}

TEST_CASE("property: prod_{d | n} Phi_d = t^n - 1 and deg Phi_n = phi(n)") {
  for (unsigned n = 1; n <= 40; ++n) {
    std::vector<Integer> prod{1};
    for (unsigned d = 1; d <= n; ++d) {
      if (n % d == 0) prod = dense_product(prod, cyclotomic(d).coeffs);
    }
    std::vector<Integer> expected(n + 1, 0);
    expected[0] = -1;
    expected[n] = 1;
    REQUIRE(prod == expected);
    const auto phi = cyclotomic(n);
    REQUIRE(phi.degree() == euler_phi(n));
    REQUIRE(phi.coeffs.back() == 1);
  }
}

TEST_CASE("cyclo elements reduce modulo Phi_n") {
  const std::vector<std::string> vars{"z"};
  auto mod = std::make_shared<const CyclotomicPoly>(cyclotomic(5));
  const auto one = Polynomial::one(vars);
  const auto z = Polynomial::variable(vars, 0);

  // eps + eps^2 + ... + eps^5 = 0
  CycloElement sum(mod, vars);
  for (unsigned k = 1; k <= 5; ++k) sum += CycloElement::term(mod, one, k);
  CHECK(sum.is_constant());
  CHECK(sum.constant_part().is_zero());

  // eps + eps^4 is not rational
  const auto partial = CycloElement::term(mod, one, 1) + CycloElement::term(mod, one, 4);
  CHECK_FALSE(partial.is_constant());
  CHECK_THROWS_AS(partial.constant_part(), NonConstantInT);

  // prod_k (z - eps^k) = z^5 - 1
  auto prod = CycloElement::term(mod, one, 0);
  for (unsigned k = 1; k <= 5; ++k) prod = prod * (CycloElement::term(mod, z, 0) + CycloElement::term(mod, -one, k));
  CHECK(prod.constant_part() == pow(z, 5) - one);
  CHECK(prod.coeffs().size() == 4);
}

TEST_CASE("build_pn_cyclo matches the displayed small cases") {
  CHECK(build_pn_cyclo(1) == xyz({{{1, 0, 0}, 1}, {{0, 1, 0}, 1}, {{0, 0, 1}, 1}}));
  CHECK(build_pn_cyclo(2) ==
        xyz({{{2, 0, 0}, 1}, {{0, 2, 0}, 1}, {{0, 0, 2}, 1}, {{1, 1, 0}, -2}, {{0, 1, 1}, -2}, {{1, 0, 1}, -2}}));
  const auto s = build_pn_cyclo(1);
  CHECK(build_pn_cyclo(3) == pow(s, 3) - xyz({{{1, 1, 1}, 27}}));
  CHECK_THROWS_AS(build_pn_cyclo(0), Error);
}

TEST_CASE("power sums") {
  const std::vector<std::string>& v = xy_vars();
  CHECK(power_sum(1, 1) == Polynomial(v, {{{1, 0}, -1}, {{0, 1}, -1}}));
  CHECK(power_sum(2, 1) == Polynomial(v, {{{1, 0}, 2}, {{0, 1}, 2}}));
  CHECK(power_sum(2, 2) == Polynomial(v, {{{2, 0}, 2}, {{1, 1}, 12}, {{0, 2}, 2}}));
  CHECK_THROWS_AS(power_sum(2, 0), Error);
}

TEST_CASE("power sums agree with expanding the roots in Z[t]/Phi_n") {
  // sum_k (u + eps^k v)^{nm} evaluated as a cyclotomic element, then u^n -> (-1)^n x
  for (unsigned n = 1; n <= 6; ++n) {
    auto mod = std::make_shared<const CyclotomicPoly>(cyclotomic(n));
    const std::vector<std::string> uv{"u", "v"};
    for (unsigned m = 1; m <= 4; ++m) {
      CycloElement total(mod, uv);
      for (unsigned k = 1; k <= n; ++k) {
        auto root = CycloElement::term(mod, Polynomial::variable(uv, 0), 0) +
                    CycloElement::term(mod, Polynomial::variable(uv, 1), k % n);
        auto pw = CycloElement::term(mod, Polynomial::one(uv), 0);
        for (unsigned i = 0; i < n * m; ++i) pw = pw * root;
        total += pw;
      }
      Polynomial got = exponent_divide(exponent_divide(total.constant_part(), 0, n, "x"), 1, n, "y");
      Polynomial signed_got(xy_vars());
      for (const auto& [e, c] : got.terms()) {
        const bool flip = n % 2 == 1 && (e[0] + e[1]) % 2 == 1;
        signed_got.accumulate(e, flip ? Integer(-c) : c);
      }
      REQUIRE(signed_got == power_sum(n, m));
    }
  }
}

TEST_CASE("build_pn_newton_identities") {
  const auto x = Polynomial::variable(xyz_vars(), 0), y = Polynomial::variable(xyz_vars(), 1),
             z = Polynomial::variable(xyz_vars(), 2);
  CHECK(build_pn_newton_identities(2) == z * z - (x + y).scaled(2) * z + pow(x - y, 2));
  CHECK(build_pn_newton_identities(1) == x + y + z);
  CHECK_THROWS_AS(build_pn_newton_identities(0), Error);
}

TEST_CASE("the two constructions agree for n <= 12") {
  for (unsigned n = 1; n <= 12; ++n) {
    CAPTURE(n);
    REQUIRE(build_pn_cyclo(n) == build_pn_newton_identities(n));
  }
}

TEST_CASE("p_n is symmetric, homogeneous of degree n and monic in z") {
  for (unsigned n = 1; n <= 12; ++n) {
    CAPTURE(n);
    const auto p = build_pn(n);
    REQUIRE(p.vars() == xyz_vars());
    REQUIRE(is_symmetric(p));
    REQUIRE(is_homogeneous(p) == n);
    REQUIRE(p.coefficient({0, 0, n}) == 1);
  }
}

TEST_CASE("restriction to y = 0") {
  const std::vector<std::string> xz{"x", "z"};
  const auto x = Polynomial::variable(xz, 0), z = Polynomial::variable(xz, 1);
  CHECK(restrict_y0(3) == pow(z + x, 3));
  CHECK(restrict_y0(2) == pow(z - x, 2));
  for (unsigned n = 1; n <= 12; ++n) {
    CAPTURE(n);
    REQUIRE(restrict_y0(n) == pow(n % 2 == 0 ? z - x : z + x, n));
  }

  // p-bar_8 in e1-bar = x + z, e2-bar = x z
  const auto e1 = x + z, e2 = x * z;
  const auto expected = pow(e1, 8) - (pow(e1, 6) * e2).scaled(16) + (pow(e1, 4) * pow(e2, 2)).scaled(96) -
                        (pow(e1, 2) * pow(e2, 3)).scaled(256) + pow(e2, 4).scaled(256);
  CHECK(restrict_y0(8) == expected);
}
