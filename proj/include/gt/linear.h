#ifndef GT_LINEAR_H_
#define GT_LINEAR_H_

#include <vector>

#include "gt/rational.h"

namespace gt {

struct LinearSolution {
  enum class Kind { kUnique, kNone, kContinuum };
  Kind kind;
  // The solution for kUnique; one particular solution for kContinuum.
  std::vector<Rational> x;
};

// Exact Gauss-Jordan elimination of `a` x = `b` (a is rows x cols).
LinearSolution solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b);

}  // namespace gt

#endif  // GT_LINEAR_H_
