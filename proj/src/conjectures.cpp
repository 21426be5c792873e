#include "nvalue/conjectures.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "nvalue/construct.hpp"

namespace nvalue {

namespace {

EBasisPolynomial decomposed_pn(unsigned n) { return decompose(build_pn(n)); }

std::string partition_text(const Partition& k) {
  return "(" + std::to_string(k.k1) + "," + std::to_string(k.k2) + "," + std::to_string(k.k3) + ")";
}

}  // namespace

ScanReport scan_prime_power(const EBasisPolynomial& g) {
  const unsigned n = g.degree();
  const auto base = prime_power_base(n);
  if (!base) throw NotPrimePower(std::to_string(n) + " is not a prime power");
  const unsigned p = *base;

  ScanReport r{n, ScanKind::PrimePower, {}, Overall::Pass};
  for (const auto& k : partitions3(n)) {
    ScanCheck c;
    c.k = k;
    c.coefficient = coefficient(g, k.k1, k.k2, k.k3);
    if (k == Partition{n, 0, 0}) {
      c.verdict = Verdict::Info;
      c.detail = "leading coefficient, excluded";
    } else if (mpz_divisible_ui_p(c.coefficient.get_mpz_t(), p)) {
      c.verdict = Verdict::Pass;
      c.detail = "divisible by " + std::to_string(p);
    } else {
      c.verdict = Verdict::Fail;
      c.detail = "NOT divisible by " + std::to_string(p) + ": potential counterexample";
      r.overall = Overall::Fail;
    }
    r.checks.push_back(std::move(c));
  }
  return r;
}

ScanReport scan_prime_power(unsigned n) {
  if (!prime_power_base(n)) throw NotPrimePower(std::to_string(n) + " is not a prime power");
  return scan_prime_power(decomposed_pn(n));
}

ScanReport scan_even_nonzero(const EBasisPolynomial& g) {
  const unsigned n = g.degree();
  if (n % 2 != 0) throw NotEven(std::to_string(n) + " is odd");
  ScanReport r{n, ScanKind::EvenNonzero, {}, Overall::Pass};
  for (const auto& k : partitions3(n)) {
    ScanCheck c;
    c.k = k;
    c.coefficient = coefficient(g, k.k1, k.k2, k.k3);
    if (c.coefficient != 0) {
      c.verdict = Verdict::Pass;
      c.detail = "nonzero";
    } else {
      c.verdict = Verdict::Fail;
      c.detail = "coefficient vanishes: potential counterexample";
      r.overall = Overall::Fail;
    }
    r.checks.push_back(std::move(c));
  }
  return r;
}

ScanReport scan_even_nonzero(unsigned n) {
  if (n % 2 != 0) throw NotEven(std::to_string(n) + " is odd");
  return scan_even_nonzero(decomposed_pn(n));
}

ScanReport factor_report(const EBasisPolynomial& g) {
  const unsigned n = g.degree();
  const auto n_primes = prime_divisors(n);
  ScanReport r{n, ScanKind::Factors, {}, Overall::Exploratory};
  for (const auto& k : partitions3(n)) {
    ScanCheck c;
    c.k = k;
    c.coefficient = coefficient(g, k.k1, k.k2, k.k3);
    c.verdict = Verdict::Info;
    c.factors = factorize(c.coefficient);
    if (c.coefficient == 0) {
      c.detail = "0";
    } else {
      c.detail = to_string(c.factors);
      std::vector<std::string> shared;
      for (const auto& pp : c.factors.factors) {
        if (std::find(n_primes.begin(), n_primes.end(), pp.prime) != n_primes.end()) {
          shared.push_back(pp.prime.get_str() + (pp.exponent > 1 ? "^" + std::to_string(pp.exponent) : ""));
        }
      }
      if (!shared.empty()) {
        c.detail += " [n-primes: ";
        for (std::size_t i = 0; i < shared.size(); ++i) c.detail += (i ? "·" : "") + shared[i];
        c.detail += "]";
      }
    }
    r.checks.push_back(std::move(c));
  }
  return r;
}

ScanReport factor_report(unsigned n) {
  if (n == 0) throw Error("order n must be at least 1");
  return factor_report(decomposed_pn(n));
}

std::vector<unsigned> eligible_orders(ScanKind kind, unsigned max_n) {
  std::vector<unsigned> out;
  for (unsigned n = kind == ScanKind::Factors ? 1 : 2; n <= max_n; ++n) {
    if (kind == ScanKind::PrimePower && !prime_power_base(n)) continue;
    if (kind == ScanKind::EvenNonzero && n % 2 != 0) continue;
    out.push_back(n);
  }
  return out;
}

std::vector<ScanReport> run_scans(ScanKind kind, const std::vector<unsigned>& orders, unsigned threads) {
  std::vector<ScanReport> reports(orders.size());
  std::vector<std::exception_ptr> errors(orders.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < orders.size();) {
      try {
        switch (kind) {
          case ScanKind::PrimePower: reports[i] = scan_prime_power(orders[i]); break;
          case ScanKind::EvenNonzero: reports[i] = scan_even_nonzero(orders[i]); break;
          case ScanKind::Factors: reports[i] = factor_report(orders[i]); break;
        }
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t count = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(orders.size(), 1));
  std::vector<std::jthread> pool;
  for (std::size_t t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return reports;
}

std::string to_string(ScanKind kind) {
  switch (kind) {
    case ScanKind::PrimePower: return "prime-power";
    case ScanKind::EvenNonzero: return "even-nonzero";
    case ScanKind::Factors: return "factors";
  }
  return "";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Info: return "info";
  }
  return "";
}

std::string to_string(Overall o) {
  switch (o) {
    case Overall::Pass: return "pass";
    case Overall::Fail: return "fail";
    case Overall::Exploratory: return "exploratory";
  }
  return "";
}

ScanKind parse_scan_kind(const std::string& s) {
  if (s == "prime-power") return ScanKind::PrimePower;
  if (s == "even-nonzero") return ScanKind::EvenNonzero;
  if (s == "factors") return ScanKind::Factors;
  throw ParseError("unknown scan kind: " + s);
}

nlohmann::json to_json(const ScanReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"k", {c.k.k1, c.k.k2, c.k.k3}},
                      {"A", c.coefficient.get_str()},
                      {"verdict", to_string(c.verdict)},
                      {"detail", c.detail}});
  }
  return {{"n", r.n}, {"kind", to_string(r.kind)}, {"checks", std::move(checks)}, {"overall", to_string(r.overall)}};
}

std::string to_text(const ScanReport& r) {
  std::ostringstream out;
  out << "n = " << r.n << "  " << to_string(r.kind) << "  overall: " << to_string(r.overall) << '\n';
  for (const auto& c : r.checks) {
    out << "  " << partition_text(c.k) << "  " << to_string(c.verdict) << "  A = " << c.coefficient.get_str()
        << "  " << c.detail << '\n';
  }
  return out.str();
}

}  // namespace nvalue
