#pragma once

// Coefficient scans over the e-basis expansion of p_n: divisibility by p for
// prime powers n = p^m, non-vanishing for even n, and factorization tables.

#include <string>
#include <vector>

#include <json.hpp>

#include "nvalue/factor.hpp"
#include "nvalue/symdecomp.hpp"

namespace nvalue {

enum class ScanKind { PrimePower, EvenNonzero, Factors };
enum class Verdict { Pass, Fail, Info };
enum class Overall { Pass, Fail, Exploratory };

struct ScanCheck {
  Partition k;
  Integer coefficient;
  Verdict verdict = Verdict::Info;
  std::string detail;
  Factorization factors;  // filled by factor scans only
};

/// One entry per partition of n into at most three parts, descending.
struct ScanReport {
  unsigned n = 0;
  ScanKind kind = ScanKind::Factors;
  std::vector<ScanCheck> checks;
  Overall overall = Overall::Exploratory;
};

/// Every A except A_{n,0,0} divisible by p, where n = p^m.
ScanReport scan_prime_power(unsigned n);
ScanReport scan_prime_power(const EBasisPolynomial& g);

/// Every A_{k1,k2,k3} nonzero, n even.
ScanReport scan_even_nonzero(unsigned n);
ScanReport scan_even_nonzero(const EBasisPolynomial& g);

/// Factorization of every nonzero |A|; primes dividing n are marked.
ScanReport factor_report(unsigned n);
ScanReport factor_report(const EBasisPolynomial& g);

/// n values a scan of `kind` visits in [2, max_n] (factors: [1, max_n]).
std::vector<unsigned> eligible_orders(ScanKind kind, unsigned max_n);

/// Runs the scan for each n on up to `threads` workers; reports come back in
/// the order of `orders`.
std::vector<ScanReport> run_scans(ScanKind kind, const std::vector<unsigned>& orders, unsigned threads);

std::string to_string(ScanKind kind);
std::string to_string(Verdict v);
std::string to_string(Overall o);
ScanKind parse_scan_kind(const std::string& s);

/// {"n","kind","checks":[{"k","A","verdict","detail"}],"overall"}
nlohmann::json to_json(const ScanReport& r);

std::string to_text(const ScanReport& r);

}  // namespace nvalue
