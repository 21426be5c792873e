#include "nvalue/newton.hpp"

#include <algorithm>
#include <sstream>

namespace nvalue {

std::int64_t cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

std::vector<Point2> convex_hull_2d(std::span<const Point2> points) {
  std::vector<Point2> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;

  std::vector<Point2> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

std::vector<ExponentVector> support(const Polynomial& f) {
  std::vector<ExponentVector> s;
  s.reserve(f.size());
  for (const auto& [e, c] : f.terms()) s.push_back(e);
  return s;
}

namespace {

std::vector<Point2> project_xy(const Polynomial& f) {
  std::vector<Point2> pts;
  pts.reserve(f.size());
  for (const auto& [e, c] : f.terms()) pts.push_back({e[0], e.size() > 1 ? e[1] : 0});
  return pts;
}

}  // namespace

NewtonPolytope newton_polytope(const Polynomial& f) {
  if (f.is_zero()) throw ZeroPolynomial("the zero polynomial has no Newton polytope");
  NewtonPolytope p;
  p.dim = f.nvars();
  p.degree = is_homogeneous(f);

  switch (f.nvars()) {
    case 0:
      p.vertices.push_back({});
      return p;
    case 1: {
      auto [lo, hi] = std::minmax_element(f.terms().begin(), f.terms().end(),
                                          [](const auto& a, const auto& b) { return a.first[0] < b.first[0]; });
      p.vertices.push_back(lo->first);
      if (hi->first != lo->first) p.vertices.push_back(hi->first);
      return p;
    }
    case 2:
      for (const auto& v : convex_hull_2d(project_xy(f))) {
        p.vertices.push_back({static_cast<Exponent>(v.x), static_cast<Exponent>(v.y)});
      }
      return p;
    case 3:
      if (!p.degree) {
        throw NotHomogeneous("Newton polytopes of three-variable polynomials require homogeneous input");
      }
      for (const auto& v : convex_hull_2d(project_xy(f))) {
        const auto i = static_cast<Exponent>(v.x), j = static_cast<Exponent>(v.y);
        p.vertices.push_back({i, j, *p.degree - i - j});
      }
      return p;
    default:
      throw UnsupportedDimension("Newton polytopes are computed for at most three variables");
  }
}

bool is_k_simplex(const NewtonPolytope& p, const SimplexSpec& spec) {
  const std::size_t ambient = std::size_t{spec.n} + 1;
  if (p.dim != ambient || p.vertices.size() != ambient) return false;
  std::vector<ExponentVector> expected;
  for (std::size_t i = 0; i < ambient; ++i) {
    ExponentVector v(ambient, 0);
    v[i] = spec.k;
    expected.push_back(std::move(v));
  }
  std::vector<ExponentVector> got = p.vertices;
  std::sort(got.begin(), got.end());
  std::sort(expected.begin(), expected.end());
  return got == expected;
}

TheoremReport verify_theorem(const Polynomial& f) {
  const auto degree = is_homogeneous(f);
  if (!degree) throw HypothesisNotMet(Hypothesis::Homogeneous, "polynomial is not homogeneous");
  if (!is_symmetric(f)) throw HypothesisNotMet(Hypothesis::Symmetric, "polynomial is not symmetric");
  ExponentVector pure(f.nvars(), 0);
  if (!pure.empty()) pure[0] = *degree;
  if (f.nvars() == 0 || f.coefficient(pure) == 0) {
    throw HypothesisNotMet(Hypothesis::PurePower, "no monomial a x_1^k with a != 0");
  }
  TheoremReport r;
  r.k = *degree;
  r.polytope = newton_polytope(f);
  r.is_simplex = is_k_simplex(r.polytope, {*degree, static_cast<unsigned>(f.nvars() - 1)});
  return r;
}

nlohmann::json to_json(const NewtonPolytope& p) {
  nlohmann::json j;
  j["degree"] = p.degree ? nlohmann::json(*p.degree) : nlohmann::json(nullptr);
  j["vertices"] = p.vertices;
  return j;
}

std::string render_svg(const Polynomial& f) {
  if (f.is_zero()) throw ZeroPolynomial("nothing to draw for the zero polynomial");
  if (f.nvars() < 2 || f.nvars() > 3) throw UnsupportedDimension("SVG output needs two or three variables");
  const auto pts = project_xy(f);
  const auto hull = convex_hull_2d(pts);

  constexpr int cell = 40;
  constexpr int margin = 30;
  std::int64_t extent = 1;
  for (const auto& p : pts) extent = std::max({extent, p.x, p.y});
  const std::int64_t size = 2 * margin + extent * cell;
  auto sx = [&](std::int64_t x) { return margin + x * cell; };
  auto sy = [&](std::int64_t y) { return size - margin - y * cell; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
      << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n";
  out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "  <g stroke=\"#dddddd\" stroke-width=\"1\">\n";
  for (std::int64_t i = 0; i <= extent; ++i) {
    out << "    <line x1=\"" << sx(i) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(i) << "\" y2=\"" << sy(extent)
        << "\"/>\n";
    out << "    <line x1=\"" << sx(0) << "\" y1=\"" << sy(i) << "\" x2=\"" << sx(extent) << "\" y2=\"" << sy(i)
        << "\"/>\n";
  }
  out << "  </g>\n";

  out << "  <path d=\"";
  for (std::size_t i = 0; i < hull.size(); ++i) {
    out << (i == 0 ? "M " : " L ") << sx(hull[i].x) << ' ' << sy(hull[i].y);
  }
  out << " Z\" fill=\"#cfe2f3\" fill-opacity=\"0.6\" stroke=\"#1f4e79\" stroke-width=\"2\"/>\n";

  auto sorted = pts;
  std::sort(sorted.begin(), sorted.end());
  out << "  <g fill=\"#1f4e79\">\n";
  for (const auto& p : sorted) {
    out << "    <circle cx=\"" << sx(p.x) << "\" cy=\"" << sy(p.y) << "\" r=\"5\"/>\n";
  }
  out << "  </g>\n</svg>\n";
  return out.str();
}

}  // namespace nvalue
