#include "nvalue/mvgroup.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "nvalue/construct.hpp"
#include "nvalue/matching.hpp"

namespace nvalue {

namespace {

Complex unit_root(unsigned r, unsigned n) {
  if (r % n == 0) return {1.0, 0.0};
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r % n) / static_cast<double>(n));
}

Complex ipow(Complex b, unsigned e) {
  Complex r(1.0, 0.0);
  while (e > 0) {
    if (e & 1u) r *= b;
    e >>= 1;
    if (e > 0) b *= b;
  }
  return r;
}

bool finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

}  // namespace

Complex principal_root(Complex x, unsigned n) {
  if (x == Complex(0.0, 0.0) || n == 1) return x;
  return std::polar(std::pow(std::abs(x), 1.0 / n), std::arg(x) / n);
}

Multiset mul_n_branch(Complex x, Complex y, unsigned n, unsigned bx, unsigned by) {
  if (n == 0) throw Error("n must be at least 1");
  // 0 is the unit; keep it exact.
  if (x == Complex(0.0, 0.0)) return Multiset(n, y);
  if (y == Complex(0.0, 0.0)) return Multiset(n, x);
  const Complex a = principal_root(x, n) * unit_root(bx, n);
  const Complex b = principal_root(y, n) * unit_root(by, n);
  Multiset out;
  out.reserve(n);
  for (unsigned r = 1; r <= n; ++r) out.push_back(ipow(a + unit_root(r, n) * b, n));
  return out;
}

Multiset mul_n(Complex x, Complex y, unsigned n) { return mul_n_branch(x, y, n, 0, 0); }

Complex inv(Complex x, unsigned n) { return n % 2 == 0 ? x : -x; }

bool close_scaled(Complex a, Complex b, double tol) {
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= tol * scale;
}

bool eq_multiset(const Multiset& a, const Multiset& b, double tol) {
  if (a.size() != b.size()) return false;
  if (!std::all_of(a.begin(), a.end(), finite) || !std::all_of(b.begin(), b.end(), finite)) return false;
  const std::size_t n = a.size();
  std::vector<std::vector<double>> cost(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      cost[i][j] = std::abs(a[i] - b[j]) / std::max({1.0, std::abs(a[i]), std::abs(b[j])});
    }
  }
  const auto match = min_cost_assignment(cost);
  for (std::size_t i = 0; i < n; ++i) {
    if (!close_scaled(a[i], b[match[i]], tol)) return false;
  }
  return true;
}

bool contains(const Multiset& a, Complex v, double tol) {
  return std::any_of(a.begin(), a.end(), [&](Complex e) { return close_scaled(e, v, tol); });
}

bool check_associativity(Complex x, Complex y, Complex z, unsigned n, double tol) {
  Multiset left, right;
  left.reserve(std::size_t{n} * n);
  right.reserve(std::size_t{n} * n);
  for (Complex w : mul_n(y, z, n)) {
    for (Complex v : mul_n(x, w, n)) left.push_back(v);
  }
  for (Complex w : mul_n(x, y, n)) {
    for (Complex v : mul_n(w, z, n)) right.push_back(v);
  }
  return eq_multiset(left, right, tol);
}

bool check_unit(Complex x, unsigned n) {
  const Multiset expected(n, x);
  return mul_n(Complex(0.0, 0.0), x, n) == expected && mul_n(x, Complex(0.0, 0.0), n) == expected;
}

bool check_inverse(Complex x, unsigned n, double tol) {
  const Complex zero(0.0, 0.0);
  return contains(mul_n(inv(x, n), x, n), zero, tol) && contains(mul_n(x, inv(x, n), n), zero, tol);
}

std::vector<Complex> polynomial_roots(std::span<const Complex> coeffs) {
  std::size_t deg = coeffs.size();
  while (deg > 0 && coeffs[deg - 1] == Complex(0.0, 0.0)) --deg;
  if (deg == 0) throw RootFindingFailure("the zero polynomial has no finite root set");
  --deg;
  if (!std::all_of(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(deg + 1), finite)) {
    throw RootFindingFailure("non-finite coefficient");
  }
  if (deg == 0) return {};

  // Monic, then rescale z = s * w so the coefficients are of unit size.
  std::vector<Complex> monic(deg + 1);
  for (std::size_t j = 0; j <= deg; ++j) monic[j] = coeffs[j] / coeffs[deg];
  double s = 0.0;
  for (std::size_t k = 1; k <= deg; ++k) s = std::max(s, std::pow(std::abs(monic[deg - k]), 1.0 / k));
  if (!std::isfinite(s)) throw RootFindingFailure("coefficient magnitudes overflow the root bound");
  if (s == 0.0) return std::vector<Complex>(deg, Complex(0.0, 0.0));

  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(deg), static_cast<Eigen::Index>(deg));
  for (std::size_t i = 1; i < deg; ++i) companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
  for (std::size_t j = 0; j < deg; ++j) {
    companion(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(deg - 1)) =
        -monic[j] / std::pow(s, static_cast<double>(deg - j));
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) throw RootFindingFailure("eigenvalue iteration did not converge");

  std::vector<Complex> roots(deg);
  for (std::size_t i = 0; i < deg; ++i) roots[i] = solver.eigenvalues()(static_cast<Eigen::Index>(i)) * s;

  // A root of multiplicity m splits into m roots about (eps)^{1/m} * s apart,
  // while their mean stays accurate to working precision.
  constexpr double backward = 1e4 * std::numeric_limits<double>::epsilon();
  std::vector<bool> merged(deg, false);
  for (std::size_t m = deg; m >= 2; --m) {
    const double radius = s * std::pow(backward, 1.0 / static_cast<double>(m));
    for (std::size_t i = 0; i < deg; ++i) {
      if (merged[i]) continue;
      std::vector<std::size_t> near;
      for (std::size_t j = 0; j < deg; ++j) {
        if (!merged[j]) near.push_back(j);
      }
      if (near.size() < m) break;
      std::partial_sort(near.begin(), near.begin() + static_cast<std::ptrdiff_t>(m), near.end(),
                        [&](std::size_t a, std::size_t b) {
                          return std::abs(roots[a] - roots[i]) < std::abs(roots[b] - roots[i]);
                        });
      near.resize(m);
      Complex mean(0.0, 0.0);
      for (std::size_t j : near) mean += roots[j];
      mean /= static_cast<double>(m);
      const bool tight = std::all_of(near.begin(), near.end(),
                                     [&](std::size_t j) { return std::abs(roots[j] - mean) <= radius; });
      if (!tight) continue;
      for (std::size_t j : near) {
        roots[j] = mean;
        merged[j] = true;
      }
    }
  }
  return roots;
}

std::vector<Complex> z_coefficients(const Polynomial& p, Complex x, Complex y) {
  if (p.vars() != xyz_vars()) throw VariableMismatch("expected a polynomial over (x, y, z)");
  std::size_t deg = 0;
  for (const auto& [e, c] : p.terms()) deg = std::max<std::size_t>(deg, e[2]);
  std::vector<Complex> out(deg + 1, Complex(0.0, 0.0));
  for (const auto& [e, c] : p.terms()) {
    out[e[2]] += c.get_d() * ipow(x, e[0]) * ipow(y, e[1]);
  }
  return out;
}

bool roots_match_pn(const Polynomial& pn, Complex x, Complex y, double tol) {
  const auto coeffs = z_coefficients(pn, x, y);
  const auto n = static_cast<unsigned>(coeffs.size() - 1);
  const auto roots = polynomial_roots(coeffs);
  return eq_multiset(roots, mul_n(inv(x, n), inv(y, n), n), tol);
}

bool roots_match_pn(Complex x, Complex y, unsigned n, double tol) { return roots_match_pn(build_pn(n), x, y, tol); }

SamplePoints::SamplePoints(std::uint64_t seed) : rng_(seed) {}

double SamplePoints::uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

Complex SamplePoints::next() {
  const bool large = (++count_ % 10) == 0;
  const double angle = 2.0 * std::numbers::pi * uniform();
  const double radius = large ? 1000.0 : std::sqrt(uniform());
  return std::polar(radius, angle);
}

AxiomReport run_axioms(unsigned n, unsigned samples, double tol, std::uint64_t seed) {
  AxiomReport report;
  report.n = n;
  report.samples = samples;
  const Polynomial pn = build_pn(n);
  SamplePoints points(seed);
  for (unsigned i = 0; i < samples; ++i) {
    const Complex x = points.next(), y = points.next(), z = points.next();
    report.unit_pass += check_unit(x, n);
    report.inverse_pass += check_inverse(x, n, tol);
    report.associativity_pass += check_associativity(x, y, z, n, tol);
    try {
      report.roots_pass += roots_match_pn(pn, x, y, tol);
    } catch (const RootFindingFailure&) {
      ++report.root_failures;
    }
  }
  return report;
}

}  // namespace nvalue
