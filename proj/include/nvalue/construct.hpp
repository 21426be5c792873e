#pragma once

// The multiplication polynomials p_n(z; x, y) of the n-valued group on C,
//
//   p_n = prod_{k=1..n} (z - (inv(x) * inv(y))_k),   inv(x) = (-1)^n x,
//
// built exactly over (x, y, z) by two independent routes.

#include "nvalue/polynomial.hpp"

namespace nvalue {

/// Variable lists used by the construction.
inline const std::vector<std::string>& xyz_vars() {
  static const std::vector<std::string> v{"x", "y", "z"};
  return v;
}
inline const std::vector<std::string>& xy_vars() {
  static const std::vector<std::string> v{"x", "y"};
  return v;
}

/// Product of z - (u + eps^k v)^n over k in Z[u,v,z][t]/Phi_n(t), with
/// u^n = (-1)^n x and v^n = (-1)^n y substituted afterwards.
Polynomial build_pn_cyclo(unsigned n);

/// m-th power sum of the n roots (u + eps^k v)^n:
///   (-1)^{nm} n sum_{i=0..m} C(nm, ni) x^{m-i} y^i.
Polynomial power_sum(unsigned n, unsigned m);

/// p_n = sum_k (-1)^k e_k z^{n-k}, with e_k recovered from power sums by
/// Newton's identities over the rationals.
Polynomial build_pn_newton_identities(unsigned n);

/// Default builder (Newton's identities; the cheaper route).
Polynomial build_pn(unsigned n);

/// p_n(z; x, 0) over (x, z).
Polynomial restrict_y0(unsigned n);

}  // namespace nvalue
