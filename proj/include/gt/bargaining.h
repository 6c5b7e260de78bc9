#ifndef GT_BARGAINING_H_
#define GT_BARGAINING_H_

#include <cstddef>
#include <vector>

#include "gt/rational.h"

namespace gt {

struct Point2 {
  Rational u1;
  Rational u2;

  bool operator==(const Point2&) const = default;
};

// The utility set is the convex hull of `points`.
struct BargainingProblem {
  std::vector<Point2> points;
  Point2 disagreement;
};

struct BargainingSolution {
  Point2 point;
  Rational nash_product;
  // Best product seen on the verification grid; never above nash_product.
  Rational grid_product;
};

// Counter-clockwise hull, collinear points dropped.
std::vector<Point2> convex_hull(std::vector<Point2> points);

// Hull vertices not weakly dominated by another hull point, ordered by u1.
std::vector<Point2> pareto_frontier(const std::vector<Point2>& points);

// Maximizes (u1 - d1)(u2 - d2) over hull ∩ {u >= d}: every hull edge is
// maximized in closed form. `grid` samples per edge are evaluated as a check.
// Throws kInfeasibleBargain if no hull point dominates the disagreement point.
BargainingSolution nash_bargaining(const BargainingProblem& problem, std::size_t grid);

}  // namespace gt

#endif  // GT_BARGAINING_H_
