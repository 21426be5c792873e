#pragma once

// The n-valued group on C:
//
//   x * y = [ (x^{1/n} + eps^r y^{1/n})^n : 1 <= r <= n ],   eps = e^{2 pi i / n},
//
// with unit 0 and inverse inv(x) = (-1)^n x. Multisets are compared up to a
// scale-aware tolerance through a minimum-cost perfect matching.

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "nvalue/polynomial.hpp"

namespace nvalue {

using Complex = std::complex<double>;

/// Unordered collection of complex values; multiplicity by repetition.
using Multiset = std::vector<Complex>;

/// Principal branch, argument in (-pi/n, pi/n]. Exactly 0 at 0.
Complex principal_root(Complex x, unsigned n);

Multiset mul_n(Complex x, Complex y, unsigned n);

/// mul_n with the n-th roots of x and y taken on branches eps^bx, eps^by
/// instead of the principal one. The multiset does not depend on the branch.
Multiset mul_n_branch(Complex x, Complex y, unsigned n, unsigned bx, unsigned by);

Complex inv(Complex x, unsigned n);

/// |a - b| <= tol * max(1, |a|, |b|).
bool close_scaled(Complex a, Complex b, double tol);

/// Same size, and the minimum-cost perfect matching (cost |a_i - b_j|) pairs
/// every element within close_scaled(tol).
bool eq_multiset(const Multiset& a, const Multiset& b, double tol);

bool contains(const Multiset& a, Complex v, double tol);

/// Compares the n^2-multisets [x * (y*z)_i] and [(x*y)_i * z].
bool check_associativity(Complex x, Complex y, Complex z, unsigned n, double tol);

/// 0 * x = x * 0 = [x, ..., x], compared exactly.
bool check_unit(Complex x, unsigned n);

/// 0 lies in inv(x) * x and in x * inv(x) within tol.
bool check_inverse(Complex x, unsigned n, double tol);

/// Roots of sum_j coeffs[j] z^j via companion-matrix eigenvalues. Tight root
/// clusters (numerically split multiple roots) are replaced by their mean.
/// Throws RootFindingFailure on non-finite input or solver failure.
std::vector<Complex> polynomial_roots(std::span<const Complex> coeffs);

/// Coefficients of z^0..z^deg of p(x, y, z) at fixed (x, y).
std::vector<Complex> z_coefficients(const Polynomial& p, Complex x, Complex y);

/// z-roots of pn(z; x, y) against inv(x) * inv(y); pn must be over (x, y, z).
bool roots_match_pn(const Polynomial& pn, Complex x, Complex y, double tol);
bool roots_match_pn(Complex x, Complex y, unsigned n, double tol);

struct AxiomReport {
  unsigned n = 0;
  unsigned samples = 0;
  unsigned unit_pass = 0;
  unsigned inverse_pass = 0;
  unsigned associativity_pass = 0;
  unsigned roots_pass = 0;
  unsigned root_failures = 0;  // RootFindingFailure, counted as not passed

  bool all_passed() const {
    return unit_pass == samples && inverse_pass == samples && associativity_pass == samples &&
           roots_pass == samples;
  }
};

/// Seeded sample point: uniform in the unit disk, except every tenth draw
/// which has modulus 1000.
class SamplePoints {
 public:
  explicit SamplePoints(std::uint64_t seed);
  Complex next();

 private:
  std::mt19937_64 rng_;
  unsigned count_ = 0;
  double uniform();
};

/// Runs unit, inverse, associativity and roots checks over `samples` seeded
/// random points.
AxiomReport run_axioms(unsigned n, unsigned samples, double tol, std::uint64_t seed);

}  // namespace nvalue
