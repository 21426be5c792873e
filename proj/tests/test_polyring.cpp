#include <doctest.h>

#include <random>

#include "nvalue/construct.hpp"
#include "nvalue/polynomial.hpp"
#include "nvalue/polynomial_io.hpp"
#include "support/oracles.hpp"

using namespace nvalue;

namespace {

const std::vector<std::string> XY{"x", "y"};
const std::vector<std::string> XYZ{"x", "y", "z"};

Polynomial P(const std::vector<std::string>& vars, std::vector<std::pair<ExponentVector, Integer>> terms) {
  return Polynomial(vars, terms);
}

Polynomial var(const std::vector<std::string>& vars, std::size_t i) { return Polynomial::variable(vars, i); }

// Exact integer evaluation, independent of eval_complex.
Integer eval_exact(const Polynomial& p, const std::vector<Integer>& at) {
  Integer total = 0;
  for (const auto& [e, c] : p.terms()) {
    Integer t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      Integer pw;
      mpz_pow_ui(pw.get_mpz_t(), at[i].get_mpz_t(), e[i]);
      t *= pw;
    }
    total += t;
  }
  return total;
}

}  // namespace

TEST_CASE("add cancels and keeps canonical form") {
  const auto x = var(XY, 0), y = var(XY, 1);
  CHECK(add(x + y, -x) == y);
  const auto f = P(XY, {{{2, 0}, 1}, {{1, 1}, -2}});
  CHECK(add(f, Polynomial(XY)) == f);
  CHECK(add(f, P(XY, {{{1, 1}, 2}})) == P(XY, {{{2, 0}, 1}}));
  CHECK((x - x).is_zero());
}

TEST_CASE("mul examples") {
  const auto x = var(XY, 0), y = var(XY, 1);
  CHECK(mul(x + y, x - y) == P(XY, {{{2, 0}, 1}, {{0, 2}, -1}}));
  const auto f = P(XY, {{{3, 1}, 7}, {{0, 2}, -5}});
  CHECK(mul(f, Polynomial::one(XY)) == f);

  const auto s = var(XYZ, 0) + var(XYZ, 1) + var(XYZ, 2);
  const auto expected =
      P(XYZ, {{{2, 0, 0}, 1}, {{0, 2, 0}, 1}, {{0, 0, 2}, 1}, {{1, 1, 0}, 2}, {{0, 1, 1}, 2}, {{1, 0, 1}, 2}});
  CHECK(oracle::naive_product(s, s) == oracle::as_map(expected));
  CHECK(mul(s, s) == expected);
}

TEST_CASE("pow") {
  const auto x = var(XY, 0), y = var(XY, 1);
  CHECK(pow(x + y, 2) == P(XY, {{{2, 0}, 1}, {{1, 1}, 2}, {{0, 2}, 1}}));
  const auto f = P(XY, {{{1, 4}, -3}, {{0, 0}, 11}});
  CHECK(pow(f, 1) == f);
  CHECK(pow(f, 0) == Polynomial::one(XY));
  CHECK(pow(Polynomial(XY), 0) == Polynomial::one(XY));
  CHECK(pow(f, 5) == f * f * f * f * f);
}

TEST_CASE("variable list mismatch is rejected") {
  const auto a = var(XY, 0);
  const auto b = var(XYZ, 0);
  CHECK_THROWS_AS(add(a, b), VariableMismatch);
  CHECK_THROWS_AS(mul(a, b), VariableMismatch);
  CHECK_THROWS_AS(Polynomial::monomial(XY, {1, 2, 3}, 1), Error);
}

TEST_CASE("eval_complex") {
  const auto s = var(XYZ, 0) + var(XYZ, 1) + var(XYZ, 2);
  CHECK(eval_complex(s, {1.0, 1.0, 1.0}).value == std::complex<double>(3.0, 0.0));
  CHECK(eval_complex(Polynomial(XYZ), {0.3, 2.0, -1.0}).value == std::complex<double>(0.0, 0.0));
  CHECK_THROWS_AS(eval_complex(s, {1.0, 2.0}), VariableMismatch);

  // p_2 on the line (s, s, 0) and (0, s, s) against exact integer substitution
  const auto p2 = build_pn(2);
  for (long v : {-7L, -1L, 2L, 13L}) {
    const double d = static_cast<double>(v);
    CHECK(eval_complex(p2, {d, d, 0.0}).value.real() == doctest::Approx(eval_exact(p2, {v, v, 0}).get_d()));
    CHECK(eval_complex(p2, {0.0, d, d}).value.real() == doctest::Approx(eval_exact(p2, {0, v, v}).get_d()));
    CHECK(eval_complex(p2, {d, 2 * d, 0.0}).value.real() == doctest::Approx(eval_exact(p2, {v, 2 * v, 0}).get_d()));
  }
}

TEST_CASE("eval_complex flags overflow") {
  Integer huge;
  mpz_ui_pow_ui(huge.get_mpz_t(), 10, 400);
  const auto p = P(XY, {{{1, 0}, huge}});
  const auto r = eval_complex(p, {1.0, 1.0});
  CHECK(r.overflow);
  CHECK_FALSE(eval_complex(var(XY, 0), {1.0, 1.0}).overflow);
}

TEST_CASE("substitute_zero") {
  const auto s = var(XYZ, 0) + var(XYZ, 1) + var(XYZ, 2);
  const std::vector<std::string> XZ{"x", "z"};
  CHECK(substitute_zero(s, 1) == var(XZ, 0) + var(XZ, 1));
  CHECK(substitute_zero(P(XYZ, {{{1, 1, 1}, 1}}), 1).is_zero());
  CHECK(substitute_zero(s, 1).vars() == XZ);

  const auto z_minus_x = var(XZ, 1) - var(XZ, 0);
  CHECK(substitute_zero(build_pn(4), 1) == pow(z_minus_x, 4));
}

TEST_CASE("exponent_divide") {
  const std::vector<std::string> UV{"u", "v"};
  CHECK(exponent_divide(P(UV, {{{2, 2}, 1}}), 0, 2, "x") == P({"x", "v"}, {{{1, 2}, 1}}));
  CHECK(exponent_divide(P(UV, {{{3, 0}, 1}, {{6, 0}, 1}}), 0, 3, "x") ==
        P({"x", "v"}, {{{1, 0}, 1}, {{2, 0}, 1}}));
  CHECK_THROWS_AS(exponent_divide(P(UV, {{{1, 0}, 1}, {{0, 0}, 1}}), 0, 2), IndivisibleExponent);
}

TEST_CASE("is_symmetric") {
  const auto x = var(XYZ, 0), y = var(XYZ, 1), z = var(XYZ, 2);
  CHECK(is_symmetric(x + y + z));
  CHECK_FALSE(is_symmetric(var(XY, 0) - var(XY, 1)));
  CHECK_FALSE(is_symmetric(x * x * y + y * y * z + z * z * x));  // cyclic only

  // all six permutations of (x, y, z) fix p_6
  const auto p6 = build_pn(6);
  std::vector<std::size_t> perm{0, 1, 2};
  int seen = 0;
  do {
    Polynomial moved(XYZ);
    for (const auto& [e, c] : p6.terms()) moved.accumulate({e[perm[0]], e[perm[1]], e[perm[2]]}, c);
    CHECK(moved == p6);
    ++seen;
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(seen == 6);
  CHECK(is_symmetric(p6));
}

TEST_CASE("is_homogeneous") {
  CHECK(is_homogeneous(P(XY, {{{2, 0}, 1}, {{1, 1}, 1}})) == 2u);
  CHECK_FALSE(is_homogeneous(P(XY, {{{1, 0}, 1}, {{2, 0}, 1}})).has_value());
  CHECK_FALSE(is_homogeneous(Polynomial(XY)).has_value());
  CHECK(is_homogeneous(build_pn(5)) == 5u);
}

TEST_CASE("rational clearing") {
  RationalPolynomial r(XY);
  r.accumulate({1, 0}, Rational(6, 3));
  CHECK(to_integer(r) == P(XY, {{{1, 0}, 2}}));
  r.accumulate({0, 1}, Rational(1, 2));
  CHECK_THROWS_AS(to_integer(r), NonIntegralCoefficient);
}

TEST_CASE("JSON format") {
  const auto p = P(XY, {{{0, 2}, Integer("-123456789012345678901234567890")}, {{2, 0}, 1}, {{1, 1}, -2}});
  const auto j = to_json(p);
  CHECK(j.dump() ==
        R"({"terms":[{"c":"1","e":[2,0]},{"c":"-2","e":[1,1]},{"c":"-123456789012345678901234567890","e":[0,2]}],"vars":["x","y"]})");
  CHECK(polynomial_from_json(j) == p);
  CHECK_THROWS_AS(polynomial_from_json(nlohmann::json::parse(R"({"vars":["x"],"terms":[{"e":[1,2],"c":"3"}]})")),
                  ParseError);
  CHECK_THROWS_AS(polynomial_from_json(nlohmann::json::parse(R"({"vars":["x"],"terms":[{"e":[1],"c":"3.5"}]})")),
                  ParseError);
  CHECK_THROWS_AS(polynomial_from_json(nlohmann::json::parse(R"({"terms":[]})")), ParseError);
}

TEST_CASE("text rendering") {
  CHECK(to_text(build_pn(1)) == "x + y + z");
  CHECK(to_text(build_pn(2)) == "x^2 - 2 x y - 2 x z + y^2 - 2 y z + z^2");
  CHECK(to_text(Polynomial(XY)) == "0");
  CHECK(to_text(P(XY, {{{0, 0}, -4}})) == "-4");
}

TEST_CASE("property: ring axioms on random sparse polynomials") {
  std::mt19937_64 rng(20240517);
  const auto one = Polynomial::one(XYZ), zero = Polynomial(XYZ);
  for (int i = 0; i < 1000; ++i) {
    const auto a = oracle::random_polynomial(rng, XYZ);
    const auto b = oracle::random_polynomial(rng, XYZ);
    const auto c = oracle::random_polynomial(rng, XYZ);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE(a + b == b + a);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * b == b * a);
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a + zero == a);
    REQUIRE(a * one == a);
    REQUIRE((a - a).is_zero());
    REQUIRE(oracle::as_map(a * b) == oracle::naive_product(a, b));
    const auto ab = a * b;
    for (const auto& [e, coeff] : ab.terms()) REQUIRE(coeff != 0);
  }
}

TEST_CASE("property: renormalizing a canonical polynomial is the identity") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const auto a = oracle::random_polynomial(rng, XYZ, 12);
    std::vector<std::pair<ExponentVector, Integer>> terms(a.terms().begin(), a.terms().end());
    std::shuffle(terms.begin(), terms.end(), rng);
    REQUIRE(Polynomial(XYZ, terms) == a);
    REQUIRE(polynomial_from_json(to_json(a)) == a);
  }
}

TEST_CASE("property: evaluation is multiplicative") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int i = 0; i < 300; ++i) {
    const auto a = oracle::random_polynomial(rng, XYZ);
    const auto b = oracle::random_polynomial(rng, XYZ);
    std::vector<std::complex<double>> pt;
    for (int k = 0; k < 3; ++k) pt.push_back(std::polar(std::abs(unit(rng)), 3.14159 * unit(rng)));
    double scale = 1.0;
    for (const auto& [e, c] : a.terms()) scale += std::abs(c.get_d());
    double sb = 1.0;
    for (const auto& [e, c] : b.terms()) sb += std::abs(c.get_d());
    scale *= sb;
    const auto lhs = eval_complex(a * b, pt).value;
    const auto rhs = eval_complex(a, pt).value * eval_complex(b, pt).value;
    REQUIRE(std::abs(lhs - rhs) <= 1e-9 * scale);
  }
}
