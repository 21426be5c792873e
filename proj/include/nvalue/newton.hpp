#pragma once

// Newton polytopes of polynomial supports, computed with exact integer
// orientation tests.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "nvalue/polynomial.hpp"

namespace nvalue {

struct Point2 {
  std::int64_t x = 0;
  std::int64_t y = 0;
  auto operator<=>(const Point2&) const = default;
};

/// Twice the signed area of (o, a, b); positive for a counterclockwise turn.
std::int64_t cross(const Point2& o, const Point2& a, const Point2& b);

/// Andrew's monotone chain. Extreme points only, counterclockwise, starting
/// at the lexicographically smallest point. A single distinct point yields
/// itself; collinear input yields its two endpoints.
std::vector<Point2> convex_hull_2d(std::span<const Point2> points);

struct NewtonPolytope {
  std::size_t dim = 0;
  std::optional<Exponent> degree;
  std::vector<ExponentVector> vertices;  // counterclockwise in the (x, y) projection
};

/// Size-k standard simplex of dimension n: vertices k e_0, ..., k e_n in R^{n+1}.
struct SimplexSpec {
  unsigned k = 1;
  unsigned n = 0;
};

std::vector<ExponentVector> support(const Polynomial& f);

/// Supported: one or two variables, or a homogeneous polynomial in three
/// variables (hull of the (x, y) projection, lifted back onto sum = degree).
NewtonPolytope newton_polytope(const Polynomial& f);

bool is_k_simplex(const NewtonPolytope& p, const SimplexSpec& spec);

enum class Hypothesis { Symmetric, Homogeneous, PurePower };

class HypothesisNotMet : public Error {
 public:
  HypothesisNotMet(Hypothesis which, const std::string& what) : Error(what), which_(which) {}
  Hypothesis which() const { return which_; }

 private:
  Hypothesis which_;
};

struct TheoremReport {
  unsigned k = 0;
  NewtonPolytope polytope;
  bool is_simplex = false;
};

/// For f symmetric, homogeneous of degree k with a nonzero x_1^k coefficient,
/// checks that the Newton polytope is the k-simplex on all variables.
/// Throws HypothesisNotMet naming the first failed hypothesis.
TheoremReport verify_theorem(const Polynomial& f);

/// {"degree": n, "vertices": [[i,j,k]...]}; degree is null when absent.
nlohmann::json to_json(const NewtonPolytope& p);

/// SVG of the (x, y) projection: unit grid, support points, hull outline.
std::string render_svg(const Polynomial& f);

}  // namespace nvalue
