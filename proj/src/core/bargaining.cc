#include "gt/bargaining.h"

#include <algorithm>
#include <optional>

#include "gt/error.h"

namespace gt {

namespace {

Rational cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a.u1 - o.u1) * (b.u2 - o.u2) - (a.u2 - o.u2) * (b.u1 - o.u1);
}

bool lex_less(const Point2& a, const Point2& b) {
  return a.u1 < b.u1 || (a.u1 == b.u1 && a.u2 < b.u2);
}

Rational product(const Point2& u, const Point2& d) { return (u.u1 - d.u1) * (u.u2 - d.u2); }

}  // namespace

std::vector<Point2> convex_hull(std::vector<Point2> points) {
  std::sort(points.begin(), points.end(), lex_less);
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() < 3) return points;
  // Andrew's monotone chain.
  std::vector<Point2> hull(2 * points.size());
  std::size_t k = 0;
  for (const auto& p : points) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = points.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], points[i]) <= 0) --k;
    hull[k++] = points[i];
  }
  hull.resize(k - 1);
  return hull;
}

std::vector<Point2> pareto_frontier(const std::vector<Point2>& points) {
  const auto hull = convex_hull(points);
  std::vector<Point2> out;
  for (const auto& p : hull) {
    const bool dominated = std::any_of(hull.begin(), hull.end(), [&](const Point2& q) {
      return q.u1 >= p.u1 && q.u2 >= p.u2 && (q.u1 > p.u1 || q.u2 > p.u2);
    });
    if (!dominated) out.push_back(p);
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

BargainingSolution nash_bargaining(const BargainingProblem& problem, std::size_t grid) {
  GT_REQUIRE(!problem.points.empty(), ErrorKind::kInvalidArgument, "empty utility set");
  GT_REQUIRE(grid >= 1, ErrorKind::kInvalidArgument, "grid must be positive");
  const Point2& d = problem.disagreement;
  const auto hull = convex_hull(problem.points);

  std::optional<BargainingSolution> best;
  auto consider = [&](const Point2& u) {
    if (u.u1 < d.u1 || u.u2 < d.u2) return;
    const Rational value = product(u, d);
    if (!best || value > best->nash_product) best = BargainingSolution{u, value, value};
  };

  // Each edge a -> b as u(t) = a + t (b - a), t in [0, 1].
  std::vector<std::pair<Point2, Point2>> edges;
  if (hull.size() == 1) {
    edges.emplace_back(hull[0], hull[0]);
  } else {
    for (std::size_t i = 0; i < hull.size(); ++i) {
      edges.emplace_back(hull[i], hull[(i + 1) % hull.size()]);
    }
  }
  for (const auto& [a, b] : edges) {
    const Rational d1 = b.u1 - a.u1;
    const Rational d2 = b.u2 - a.u2;
    const Rational e1 = a.u1 - d.u1;
    const Rational e2 = a.u2 - d.u2;
    // Feasible t: e1 + t d1 >= 0 and e2 + t d2 >= 0.
    Rational lo = 0, hi = 1;
    bool empty = false;
    auto clip = [&](const Rational& e, const Rational& slope) {
      if (slope == 0) {
        if (e < 0) empty = true;
      } else if (slope > 0) {
        lo = std::max(lo, Rational(-e / slope));
      } else {
        hi = std::min(hi, Rational(-e / slope));
      }
    };
    clip(e1, d1);
    clip(e2, d2);
    if (empty || lo > hi) continue;
    auto at = [&](const Rational& t) { return Point2{a.u1 + t * d1, a.u2 + t * d2}; };
    consider(at(lo));
    consider(at(hi));
    // (e1 + t d1)(e2 + t d2) is concave when d1 d2 < 0.
    if (d1 * d2 < 0) {
      const Rational t = -(e1 * d2 + e2 * d1) / (2 * d1 * d2);
      if (t > lo && t < hi) consider(at(t));
    }
  }
  GT_REQUIRE(best.has_value(), ErrorKind::kInfeasibleBargain,
             "no feasible utility point dominates the disagreement point");

  Rational grid_best = -1;
  for (const auto& [a, b] : edges) {
    for (std::size_t k = 0; k <= grid; ++k) {
      const Rational t(k, grid);
      const Point2 u{a.u1 + t * (b.u1 - a.u1), a.u2 + t * (b.u2 - a.u2)};
      if (u.u1 < d.u1 || u.u2 < d.u2) continue;
      grid_best = std::max(grid_best, product(u, d));
    }
  }
  best->grid_product = grid_best < 0 ? best->nash_product : grid_best;
  return *best;
}

}  // namespace gt
