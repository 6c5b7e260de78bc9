#include "gt/evolution.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>

#include "gt/error.h"
#include "gt/linear.h"

namespace gt::evo {

namespace {

template <typename T>
std::vector<T> mat_vec(const std::vector<std::vector<T>>& a, const std::vector<T>& p) {
  std::vector<T> out(a.size(), T(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (p[j] != 0) out[i] += a[i][j] * p[j];
    }
  }
  return out;
}

template <typename T>
T dot(const std::vector<T>& a, const std::vector<T>& b) {
  T total(0);
  for (std::size_t i = 0; i < a.size(); ++i) total += a[i] * b[i];
  return total;
}

void require_size(const EvolutionGame& game, std::size_t n) {
  GT_REQUIRE(n == game.size(), ErrorKind::kInvalidArgument,
             "state has " + std::to_string(n) + " entries for a " + std::to_string(game.size()) +
                 "-strategy game");
}

std::vector<double> add_scaled(const std::vector<double>& p, const std::vector<double>& k,
                               double scale) {
  std::vector<double> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = p[i] + scale * k[i];
  return out;
}

double max_norm_distance(const SimplexState& a, const SimplexState& b) {
  double d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

// Compositions of `total` into `parts` non-negative integers, lexicographic.
template <typename Visit>
bool for_each_composition(std::size_t total, std::size_t parts, Visit visit) {
  std::vector<std::size_t> c(parts, 0);
  c[parts - 1] = total;
  while (true) {
    if (!visit(c)) return false;
    // Next composition: move one unit from the last part leftwards.
    std::size_t i = parts - 1;
    while (i > 0 && c[i] == 0) --i;
    if (i == 0) return true;
    const std::size_t tail = c[i];
    c[i] = 0;
    ++c[i - 1];
    c[parts - 1] = tail - 1;
  }
}

std::size_t binomial_capped(std::size_t n, std::size_t k, std::size_t cap) {
  double value = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    value = value * static_cast<double>(n - k + i) / static_cast<double>(i);
    if (value > static_cast<double>(cap)) return cap + 1;
  }
  return static_cast<std::size_t>(std::llround(value));
}

}  // namespace

EvolutionGame::EvolutionGame(std::vector<std::vector<Rational>> matrix)
    : exact_(std::move(matrix)) {
  const std::size_t n = exact_.size();
  GT_REQUIRE(n >= 2, ErrorKind::kInvalidArgument, "an evolution game needs at least 2 strategies");
  matrix_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    GT_REQUIRE(exact_[i].size() == n, ErrorKind::kInvalidArgument, "payoff matrix must be square");
    matrix_[i] = to_doubles(exact_[i]);
  }
}

EvolutionGame EvolutionGame::from_doubles(const std::vector<std::vector<double>>& matrix) {
  std::vector<std::vector<Rational>> exact;
  for (const auto& row : matrix) {
    std::vector<Rational> r;
    for (double v : row) r.push_back(from_double(v));
    exact.push_back(std::move(r));
  }
  return EvolutionGame(std::move(exact));
}

bool EvolutionGame::is_symmetric() const {
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (exact_[i][j] != exact_[j][i]) return false;
    }
  }
  return true;
}

EvolutionGame EvolutionGame::with_column_shift(std::size_t column, const Rational& shift) const {
  GT_REQUIRE(column < size(), ErrorKind::kInvalidArgument, "no such column");
  auto shifted = exact_;
  for (auto& row : shifted) row[column] += shift;
  return EvolutionGame(std::move(shifted));
}

void validate_state(const EvolutionGame& game, const SimplexState& p) {
  require_size(game, p.size());
  double total = 0;
  for (double v : p) {
    GT_REQUIRE(std::isfinite(v) && v >= 0, ErrorKind::kInvalidState,
               "state entries must be finite and non-negative");
    total += v;
  }
  GT_REQUIRE(std::abs(total - 1) <= kSimplexTolerance, ErrorKind::kInvalidState,
             "state sums to " + std::to_string(total));
}

std::vector<double> fitness(const EvolutionGame& game, const SimplexState& p) {
  require_size(game, p.size());
  return mat_vec(game.matrix(), p);
}

std::vector<Rational> fitness(const EvolutionGame& game, const ExactState& p) {
  require_size(game, p.size());
  return mat_vec(game.exact_matrix(), p);
}

double mean_fitness(const EvolutionGame& game, const SimplexState& p) {
  return dot(p, fitness(game, p));
}

Rational mean_fitness(const EvolutionGame& game, const ExactState& p) {
  return dot(p, fitness(game, p));
}

std::vector<double> excess(const EvolutionGame& game, const SimplexState& p) {
  auto u = fitness(game, p);
  const double mean = dot(p, u);
  for (auto& v : u) v -= mean;
  return u;
}

std::vector<Rational> excess(const EvolutionGame& game, const ExactState& p) {
  auto u = fitness(game, p);
  const Rational mean = dot(p, u);
  for (auto& v : u) v -= mean;
  return u;
}

std::vector<double> replicator_rhs(const EvolutionGame& game, const SimplexState& p) {
  validate_state(game, p);
  auto h = excess(game, p);
  for (std::size_t i = 0; i < h.size(); ++i) h[i] *= p[i];
  return h;
}

std::vector<Rational> replicator_rhs(const EvolutionGame& game, const ExactState& p) {
  require_size(game, p.size());
  Rational total = 0;
  for (const auto& v : p) {
    GT_REQUIRE(v >= 0, ErrorKind::kInvalidState, "negative state entry");
    total += v;
  }
  GT_REQUIRE(total == 1, ErrorKind::kInvalidState, "state sums to " + gt::to_string(total));
  auto h = excess(game, p);
  for (std::size_t i = 0; i < h.size(); ++i) h[i] *= p[i];
  return h;
}

double rest_residual(const EvolutionGame& game, const SimplexState& p) {
  double residual = 0;
  for (double v : replicator_rhs(game, p)) residual = std::max(residual, std::abs(v));
  return residual;
}

SimplexState rk4_step(const EvolutionGame& game, const SimplexState& p, double h) {
  // Stage states can leave the simplex slightly, so the field is evaluated
  // without validation.
  auto field = [&](const SimplexState& x) {
    auto u = fitness(game, x);
    const double mean = dot(x, u);
    for (std::size_t i = 0; i < u.size(); ++i) u[i] = x[i] * (u[i] - mean);
    return u;
  };
  const auto k1 = field(p);
  const auto k2 = field(add_scaled(p, k1, h / 2));
  const auto k3 = field(add_scaled(p, k2, h / 2));
  const auto k4 = field(add_scaled(p, k3, h));
  SimplexState next(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    next[i] = p[i] + h / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
  }
  return next;
}

Trajectory integrate(const EvolutionGame& game, const SimplexState& p0, double t_end, double h) {
  GT_REQUIRE(h > 0 && std::isfinite(h), ErrorKind::kInvalidArgument, "step size must be positive");
  GT_REQUIRE(t_end > 0 && std::isfinite(t_end), ErrorKind::kInvalidArgument,
             "end time must be positive");
  validate_state(game, p0);
  const auto steps = static_cast<std::size_t>(std::ceil(t_end / h - 1e-9));
  Trajectory traj;
  traj.h = h;
  traj.times.reserve(steps + 1);
  traj.states.reserve(steps + 1);
  traj.times.push_back(0);
  traj.states.push_back(p0);
  SimplexState p = p0;
  for (std::size_t k = 1; k <= steps; ++k) {
    const double t_prev = traj.times.back();
    const double t = k == steps ? t_end : static_cast<double>(k) * h;
    p = rk4_step(game, p, t - t_prev);
    double total = 0;
    for (auto& v : p) {
      if (!std::isfinite(v) || v < -1e-9) {
        throw Error(ErrorKind::kIntegrationDiverged,
                    "state entry " + std::to_string(v) + " at t=" + std::to_string(t));
      }
      if (v < kSimplexTolerance) v = 0;
      total += v;
    }
    for (auto& v : p) v /= total;
    traj.times.push_back(t);
    traj.states.push_back(p);
  }
  return traj;
}

namespace {

// Unique solution of (Ap)_i = v (i in support), p zero off support,
// sum p = 1. Returns the solution kind and fills `point` for kUnique.
LinearSolution::Kind solve_support(const EvolutionGame& game,
                                   const std::vector<std::size_t>& support, ExactState& point) {
  const auto& a = game.exact_matrix();
  const std::size_t k = support.size();
  std::vector<std::vector<Rational>> m;
  std::vector<Rational> b;
  for (std::size_t i : support) {
    std::vector<Rational> row(k + 1);
    for (std::size_t c = 0; c < k; ++c) row[c] = a[i][support[c]];
    row[k] = -1;
    m.push_back(std::move(row));
    b.push_back(0);
  }
  std::vector<Rational> ones(k + 1, Rational(1));
  ones[k] = 0;
  m.push_back(std::move(ones));
  b.push_back(1);
  const auto solution = solve_exact(std::move(m), std::move(b));
  if (solution.kind == LinearSolution::Kind::kUnique) {
    point.assign(game.size(), Rational(0));
    for (std::size_t c = 0; c < k; ++c) point[support[c]] = solution.x[c];
  }
  return solution.kind;
}

}  // namespace

InteriorRestPoints interior_rest_points(const EvolutionGame& game) {
  std::vector<std::size_t> all(game.size());
  std::iota(all.begin(), all.end(), 0);
  InteriorRestPoints out;
  ExactState point;
  const auto kind = solve_support(game, all, point);
  if (kind == LinearSolution::Kind::kContinuum) {
    out.continuum = true;
  } else if (kind == LinearSolution::Kind::kUnique &&
             std::all_of(point.begin(), point.end(), [](const Rational& v) { return v > 0; })) {
    out.points.push_back(std::move(point));
  }
  return out;
}

bool is_nash_state(const EvolutionGame& game, const SimplexState& p) {
  validate_state(game, p);
  const auto u = fitness(game, p);
  const double mean = dot(p, u);
  return *std::max_element(u.begin(), u.end()) <= mean + kNashTolerance;
}

bool is_nash_state(const EvolutionGame& game, const ExactState& p) {
  require_size(game, p.size());
  const auto u = fitness(game, p);
  const Rational mean = dot(p, u);
  return *std::max_element(u.begin(), u.end()) <= mean;
}

RestPointSurvey rest_points(const EvolutionGame& game) {
  const std::size_t n = game.size();
  GT_REQUIRE(n <= 16, ErrorKind::kSizeLimit, "rest point survey is limited to 16 strategies");
  RestPointSurvey survey;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) support.push_back(i);
    }
    ExactState point;
    const auto kind = solve_support(game, support, point);
    if (kind == LinearSolution::Kind::kContinuum) {
      survey.continuum_supports.push_back(support);
      continue;
    }
    if (kind != LinearSolution::Kind::kUnique) continue;
    if (!std::all_of(support.begin(), support.end(), [&](std::size_t i) { return point[i] > 0; })) {
      continue;
    }
    RestPointReport report;
    report.exact_point = point;
    report.point = to_doubles(point);
    report.location = support.size() == n ? RestPointReport::Location::kInterior
                                          : RestPointReport::Location::kBoundary;
    report.residual = rest_residual(game, report.point);
    report.is_nash = is_nash_state(game, point);
    const auto h = excess(game, point);
    for (std::size_t i = 0; i < n; ++i) {
      if (point[i] == 0) report.transversal_eigenvalues.emplace_back(i, to_double(h[i]));
    }
    survey.points.push_back(std::move(report));
  }
  return survey;
}

EssReport is_ess(const EvolutionGame& game, const SimplexState& p) {
  GT_REQUIRE(is_nash_state(game, p), ErrorKind::kInvalidArgument,
             "ESS check requires a Nash state");
  const std::size_t n = game.size();
  const auto& a = game.matrix();
  const auto u = fitness(game, p);
  const double best = *std::max_element(u.begin(), u.end());
  std::vector<std::size_t> face;
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i] >= best - kNashTolerance) face.push_back(i);
  }
  constexpr double kStrict = 1e-12;
  // Symmetric bilinear form of A.
  auto form = [&](const std::vector<double>& x, const std::vector<double>& y) {
    double total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) total += x[i] * (a[i][j] + a[j][i]) / 2 * y[j];
    }
    return total;
  };
  auto direction = [&](std::size_t from, std::size_t to) {
    std::vector<double> d(n, 0.0);
    d[to] += 1;
    d[from] -= 1;
    return d;
  };

  EssReport report;
  if (face.size() == 1) {
    report.stable = true;
    return report;
  }
  if (face.size() == 2) {
    report.stable = form(direction(face[0], face[1]), direction(face[0], face[1])) < -kStrict;
    return report;
  }
  if (face.size() == 3) {
    std::size_t zeros = 0;
    std::size_t vertex = face[0];
    for (std::size_t i : face) {
      if (p[i] <= kSimplexTolerance) {
        ++zeros;
      } else {
        vertex = i;
      }
    }
    std::vector<std::size_t> others;
    for (std::size_t i : face) {
      if (i != vertex) others.push_back(i);
    }
    const auto du = direction(vertex, others[0]);
    const auto dw = direction(vertex, others[1]);
    const double qa = form(du, du), qb = form(du, dw), qc = form(dw, dw);
    if (zeros == 2) {
      // p is a vertex of the face; feasible directions form the cone spanned
      // by the two edges leaving it.
      report.stable = qa < -kStrict && qc < -kStrict && (qb < 0 || qb * qb < qa * qc - kStrict);
    } else {
      // Feasible directions cover a half-plane or more: negative definite.
      report.stable = qa < -kStrict && qa * qc - qb * qb > kStrict;
    }
    return report;
  }

  // Larger faces: deterministic grid on the face.
  constexpr std::size_t kMaxPoints = 2'000'000;
  std::size_t resolution = 64;
  while (resolution > 1 &&
         binomial_capped(resolution + face.size() - 1, face.size() - 1, kMaxPoints) > kMaxPoints) {
    resolution /= 2;
  }
  report.certified = false;
  report.resolution = resolution;
  report.stable = true;
  std::vector<double> q(n, 0.0);
  for_each_composition(resolution, face.size(), [&](const std::vector<std::size_t>& c) {
    for (std::size_t k = 0; k < face.size(); ++k) {
      q[face[k]] = static_cast<double>(c[k]) / static_cast<double>(resolution);
    }
    if (max_norm_distance(q, p) < 1e-9) return true;
    const auto aq = mat_vec(a, q);
    if (dot(p, aq) - dot(q, aq) <= kStrict) {
      report.stable = false;
      return false;
    }
    return true;
  });
  return report;
}

std::vector<double> time_average(const Trajectory& trajectory) {
  GT_REQUIRE(trajectory.size() >= 1, ErrorKind::kInsufficientData, "empty trajectory");
  const auto& s = trajectory.states;
  if (s.size() == 1) return s.front();
  std::vector<double> integral(s.front().size(), 0.0);
  for (std::size_t k = 1; k < s.size(); ++k) {
    const double dt = trajectory.times[k] - trajectory.times[k - 1];
    for (std::size_t i = 0; i < integral.size(); ++i) {
      integral[i] += dt * (s[k][i] + s[k - 1][i]) / 2;
    }
  }
  const double span = trajectory.times.back() - trajectory.times.front();
  for (auto& v : integral) v /= span;
  return integral;
}

double fisher_rate_check(const EvolutionGame& game, const SimplexState& p) {
  GT_REQUIRE(game.is_symmetric(), ErrorKind::kUnsupportedMatrix,
             "the mean-fitness rate identity needs a symmetric matrix");
  const auto pdot = replicator_rhs(game, p);
  const auto& a = game.matrix();
  const std::size_t n = game.size();
  // d/dt (pAp) = pdot (A + A^T) p.
  double lhs = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) lhs += pdot[i] * (a[i][j] + a[j][i]) * p[j];
  }
  const auto h = excess(game, p);
  double rhs = 0;
  for (std::size_t i = 0; i < n; ++i) rhs += 2 * p[i] * h[i] * h[i];
  return std::abs(lhs - rhs);
}

std::vector<std::pair<std::size_t, double>> transversal_eigenvalues(const EvolutionGame& game,
                                                                    const SimplexState& p) {
  GT_REQUIRE(rest_residual(game, p) <= 1e-9, ErrorKind::kInvalidArgument, "not a rest point");
  const auto h = excess(game, p);
  std::vector<std::pair<std::size_t, double>> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) out.emplace_back(i, h[i]);
  }
  GT_REQUIRE(!out.empty(), ErrorKind::kInvalidArgument,
             "interior point has no transversal directions");
  return out;
}

double power_product(const SimplexState& p, const std::vector<double>& alpha) {
  double v = 1;
  for (std::size_t i = 0; i < p.size(); ++i) v *= std::pow(p[i], alpha.at(i));
  return v;
}

double power_product_rate(const EvolutionGame& game, const SimplexState& p,
                          const std::vector<double>& alpha) {
  GT_REQUIRE(alpha.size() == p.size(), ErrorKind::kInvalidArgument, "exponent count mismatch");
  const auto h = excess(game, p);
  double rate = 0;
  for (std::size_t i = 0; i < p.size(); ++i) rate += alpha[i] * h[i];
  return power_product(p, alpha) * rate;
}

std::string to_string(RecurrenceReport::Kind kind) {
  switch (kind) {
    case RecurrenceReport::Kind::kNone: return "none";
    case RecurrenceReport::Kind::kConvergent: return "convergent";
    case RecurrenceReport::Kind::kRecurrent: return "recurrent";
  }
  return "none";
}

RecurrenceReport detect_recurrence(const Trajectory& trajectory, double tol) {
  const std::size_t count = trajectory.size();
  GT_REQUIRE(count >= 10, ErrorKind::kInsufficientData,
             "recurrence detection needs at least 10 samples");
  GT_REQUIRE(tol > 0, ErrorKind::kInvalidArgument, "tolerance must be positive");
  const auto& s = trajectory.states;
  RecurrenceReport report;

  const std::size_t window = std::max<std::size_t>(10, count / 10);
  const std::size_t n = s.front().size();
  for (std::size_t i = 0; i < n; ++i) {
    double lo = s[count - window][i], hi = lo;
    for (std::size_t k = count - window; k < count; ++k) {
      lo = std::min(lo, s[k][i]);
      hi = std::max(hi, s[k][i]);
    }
    report.terminal_diameter = std::max(report.terminal_diameter, hi - lo);
  }
  if (report.terminal_diameter < tol) {
    report.kind = RecurrenceReport::Kind::kConvergent;
    return report;
  }

  // Each visit to the ball after leaving it contributes its closest approach.
  const SimplexState& origin = s.front();
  bool outside = false;
  bool in_visit = false;
  double visit_best = 0;
  double visit_time = 0;
  for (std::size_t k = 1; k < count; ++k) {
    const double d = max_norm_distance(s[k], origin);
    if (d >= tol) {
      if (in_visit) report.return_times.push_back(visit_time);
      in_visit = false;
      outside = true;
      continue;
    }
    if (!outside) continue;
    if (!in_visit || d < visit_best) {
      visit_best = d;
      visit_time = trajectory.times[k];
    }
    in_visit = true;
  }
  if (in_visit) report.return_times.push_back(visit_time);

  if (report.return_times.size() < 2) return report;
  std::vector<double> gaps;
  double previous = trajectory.times.front();
  for (double t : report.return_times) {
    gaps.push_back(t - previous);
    previous = t;
  }
  const double mean =
      std::accumulate(gaps.begin(), gaps.end(), 0.0) / static_cast<double>(gaps.size());
  const bool stable = std::all_of(gaps.begin(), gaps.end(),
                                  [&](double g) { return std::abs(g - mean) <= 0.1 * mean; });
  if (stable) {
    report.kind = RecurrenceReport::Kind::kRecurrent;
    report.period = mean;
  }
  return report;
}

double min_boundary_distance(const Trajectory& trajectory) {
  double lowest = 1;
  for (const auto& p : trajectory.states) {
    lowest = std::min(lowest, *std::min_element(p.begin(), p.end()));
  }
  return lowest;
}

void write_csv(const Trajectory& trajectory, std::ostream& out, std::size_t stride) {
  GT_REQUIRE(stride >= 1, ErrorKind::kInvalidArgument, "stride must be positive");
  if (trajectory.size() == 0) return;
  out << "t";
  for (std::size_t i = 0; i < trajectory.states.front().size(); ++i) out << ",p" << i + 1;
  out << '\n';
  char buffer[32];
  auto emit = [&](std::size_t k) {
    std::snprintf(buffer, sizeof buffer, "%.17g", trajectory.times[k]);
    out << buffer;
    for (double v : trajectory.states[k]) {
      std::snprintf(buffer, sizeof buffer, "%.17g", v);
      out << ',' << buffer;
    }
    out << '\n';
  };
  for (std::size_t k = 0; k < trajectory.size(); k += stride) emit(k);
  if ((trajectory.size() - 1) % stride != 0) emit(trajectory.size() - 1);
}

}  // namespace gt::evo
