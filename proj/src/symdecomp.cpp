#include "nvalue/symdecomp.hpp"

#include <sstream>

#include "nvalue/construct.hpp"
#include "nvalue/factor.hpp"

namespace nvalue {

std::vector<Partition> partitions3(unsigned n) {
  std::vector<Partition> out;
  for (unsigned k1 = n + 1; k1-- > 0;) {
    for (unsigned k2 = std::min(k1, n - k1) + 1; k2-- > 0;) {
      const unsigned k3 = n - k1 - k2;
      if (k3 <= k2) out.push_back({k1, k2, k3});
    }
  }
  return out;
}

void EBasisPolynomial::accumulate(const Partition& k, const Integer& c) {
  if (!k.is_sorted() || k.weight() != degree_) {
    throw InvalidPartition("(" + std::to_string(k.k1) + "," + std::to_string(k.k2) + "," + std::to_string(k.k3) +
                           ") is not a sorted partition of " + std::to_string(degree_));
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

namespace detail {

namespace {

class ElementaryPowers {
 public:
  explicit ElementaryPowers(const std::vector<std::string>& vars) : vars_(vars) {
    const std::size_t m = vars.size();
    elementary_.push_back(Polynomial::one(vars));
    for (std::size_t i = 1; i <= m; ++i) {
      Polynomial e(vars);
      // every 0/1 exponent vector with i ones
      std::vector<Exponent> pick(m, 0);
      std::fill(pick.end() - static_cast<std::ptrdiff_t>(i), pick.end(), 1);
      do e.accumulate(pick, 1);
      while (std::next_permutation(pick.begin(), pick.end()));
      elementary_.push_back(std::move(e));
    }
    powers_.resize(m + 1);
  }

  const Polynomial& power(std::size_t i, unsigned p) {
    auto& table = powers_[i];
    if (table.empty()) table.push_back(Polynomial::one(vars_));
    while (table.size() <= p) table.push_back(table.back() * elementary_[i]);
    return table[p];
  }

  Polynomial product(const ExponentVector& a) {
    Polynomial r = Polynomial::one(vars_);
    for (std::size_t i = 0; i < a.size(); ++i) {
      const unsigned next = i + 1 < a.size() ? a[i + 1] : 0;
      if (a[i] > next) r = r * power(i + 1, a[i] - next);
    }
    return r;
  }

 private:
  std::vector<std::string> vars_;
  std::vector<Polynomial> elementary_;
  std::vector<std::vector<Polynomial>> powers_;
};

}  // namespace

std::map<ExponentVector, Integer, LexDescending> eliminate_elementary(const Polynomial& f) {
  std::map<ExponentVector, Integer, LexDescending> out;
  ElementaryPowers e(f.vars());
  Polynomial rest = f;
  while (!rest.is_zero()) {
    const ExponentVector a = rest.leading().first;
    const Integer c = rest.leading().second;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
      if (a[i] < a[i + 1]) throw NotSymmetric("leading exponent is not weakly decreasing");
    }
    out[a] += c;
    rest -= e.product(a).scaled(c);
    // the subtraction must cancel the leading term exactly
    if (!rest.is_zero() && !LexDescending{}(a, rest.leading().first)) {
      throw NotSymmetric("elimination did not reduce the leading term");
    }
  }
  return out;
}

}  // namespace detail

EBasisPolynomial decompose(const Polynomial& f) {
  if (f.nvars() != 3) throw Error("decompose expects a polynomial in exactly three variables");
  const auto degree = is_homogeneous(f);
  if (!degree) throw NotHomogeneous("polynomial is not homogeneous");
  if (!is_symmetric(f)) throw NotSymmetric("polynomial is not symmetric in its variables");

  EBasisPolynomial g(*degree);
  for (const auto& [a, c] : detail::eliminate_elementary(f)) g.accumulate({a[0], a[1], a[2]}, c);
  return g;
}

Polynomial elementary_monomial(unsigned a, unsigned b, unsigned c) {
  const auto& v = xyz_vars();
  const Polynomial e1 = Polynomial(v, {{{1, 0, 0}, 1}, {{0, 1, 0}, 1}, {{0, 0, 1}, 1}});
  const Polynomial e2 = Polynomial(v, {{{1, 1, 0}, 1}, {{0, 1, 1}, 1}, {{1, 0, 1}, 1}});
  return pow(e1, a) * pow(e2, b) * Polynomial::monomial(v, {c, c, c}, 1);
}

Polynomial recompose(const EBasisPolynomial& g) {
  Polynomial r(xyz_vars());
  for (const auto& [k, c] : g.terms()) r += elementary_monomial(k.k1 - k.k2, k.k2 - k.k3, k.k3).scaled(c);
  return r;
}

Integer coefficient(const EBasisPolynomial& g, unsigned k1, unsigned k2, unsigned k3) {
  const Partition k{k1, k2, k3};
  if (!k.is_sorted() || k.weight() != g.degree()) {
    throw InvalidPartition("(" + std::to_string(k1) + "," + std::to_string(k2) + "," + std::to_string(k3) +
                           ") is not a sorted partition of " + std::to_string(g.degree()));
  }
  auto it = g.terms().find(k);
  return it == g.terms().end() ? Integer(0) : it->second;
}

bool PropositionReport::all_ok() const {
  for (const auto& c : checks) {
    if (!c.ok) return false;
  }
  return true;
}

PropositionReport verify_proposition(const EBasisPolynomial& g) {
  PropositionReport report;
  const unsigned n = report.n = g.degree();
  auto check = [&](Partition k, Integer expected) {
    Integer actual = coefficient(g, k.k1, k.k2, k.k3);
    const bool ok = actual == expected;
    report.checks.push_back({k, std::move(expected), std::move(actual), ok});
  };
  if (n % 2 == 1) {
    for (unsigned k2 = 1; 2 * k2 <= n; ++k2) check({n - k2, k2, 0}, 0);
  } else {
    const unsigned half = n / 2;
    Integer power = 1;
    for (unsigned i = 1; i <= half; ++i) {
      power *= -4;
      Integer binom;
      mpz_bin_uiui(binom.get_mpz_t(), half, i);
      check({n - i, i, 0}, power * binom);
    }
  }
  return report;
}

PropositionReport verify_proposition(unsigned n) { return verify_proposition(decompose(build_pn(n))); }

nlohmann::json to_json(const EBasisPolynomial& g) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [k, c] : g.terms()) {
    terms.push_back({{"k", {k.k1, k.k2, k.k3}}, {"A", c.get_str()}});
  }
  return {{"n", g.degree()}, {"terms", std::move(terms)}};
}

EBasisPolynomial ebasis_from_json(const nlohmann::json& j) {
  try {
    EBasisPolynomial g(j.at("n").get<unsigned>());
    for (const auto& t : j.at("terms")) {
      const auto k = t.at("k").get<std::vector<unsigned>>();
      if (k.size() != 3) throw ParseError("partition must have three parts");
      Integer c;
      if (c.set_str(t.at("A").get<std::string>(), 10) != 0) throw ParseError("coefficient is not a decimal integer");
      g.accumulate({k[0], k[1], k[2]}, c);
    }
    return g;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("malformed e-basis JSON: ") + ex.what());
  }
}

std::string to_text(const EBasisPolynomial& g, bool factored) {
  if (g.terms().empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : g.terms()) {
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;

    std::ostringstream mono;
    const unsigned exps[3] = {k.k1 - k.k2, k.k2 - k.k3, k.k3};
    bool any = false;
    for (int i = 0; i < 3; ++i) {
      if (exps[i] == 0) continue;
      if (any) mono << ' ';
      mono << 'e' << (i + 1);
      if (exps[i] > 1) mono << '^' << exps[i];
      any = true;
    }
    const Integer mag = abs(c);
    const std::string mag_text = factored ? to_string(factorize(mag), false) : mag.get_str();
    if (!any) {
      out << mag_text;
    } else if (mag == 1) {
      out << mono.str();
    } else {
      out << mag_text << ' ' << mono.str();
    }
  }
  return out.str();
}

}  // namespace nvalue
