#include <cmath>
#include <random>
#include <sstream>

#include "doctest.h"
#include "gt/error.h"
#include "gt/evolution.h"
#include "gt/scenarios.h"

using gt::Rational;
namespace evo = gt::evo;

namespace {

evo::EvolutionGame rps() { return evo::EvolutionGame(gt::scenarios::rock_paper_scissors_matrix()); }
evo::EvolutionGame dominance() { return evo::EvolutionGame({{2, 2}, {1, 1}}); }
// Hawk-Dove with V = 2, C = 4: ((V-C)/2, V / 0, V/2).
evo::EvolutionGame hawk_dove() { return evo::EvolutionGame({{-1, 2}, {0, 1}}); }

gt::ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const gt::Error& e) {
    return e.kind();
  }
  FAIL("expected gt::Error");
  return gt::ErrorKind::kInvalidArgument;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

evo::SimplexState random_state(std::mt19937_64& rng, std::size_t n) {
  std::exponential_distribution<double> draw(1.0);
  evo::SimplexState p(n);
  double total = 0;
  for (auto& v : p) total += (v = draw(rng));
  for (auto& v : p) v /= total;
  return p;
}

std::vector<std::vector<Rational>> random_matrix(std::mt19937_64& rng, std::size_t n,
                                                 bool symmetric) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (symmetric && j < i) {
        a[i][j] = a[j][i];
      } else {
        a[i][j] = Rational(num(rng), den(rng));
      }
    }
  }
  return a;
}

}  // namespace

TEST_CASE("fitness, mean fitness and excess") {
  const evo::ExactState centroid(3, Rational(1, 3));
  CHECK(evo::fitness(rps(), centroid) == std::vector<Rational>{0, 0, 0});
  CHECK(evo::mean_fitness(rps(), centroid) == 0);
  CHECK(evo::excess(rps(), centroid) == std::vector<Rational>{0, 0, 0});

  // u_i(e_1) = a_i1.
  CHECK(evo::fitness(rps(), evo::ExactState{1, 0, 0}) == std::vector<Rational>{0, 1, -1});
  CHECK(evo::mean_fitness(rps(), evo::ExactState{0, 1, 0}) == 0);
  // h_j(e_i) = a_ji - a_ii.
  const evo::EvolutionGame g({{2, 5, 1}, {3, 4, 0}, {7, 1, 1}});
  CHECK(evo::excess(g, evo::ExactState{0, 1, 0}) == std::vector<Rational>{1, 0, -3});
  CHECK(evo::mean_fitness(g, evo::ExactState{0, 0, 1}) == 1);

  const evo::EvolutionGame identity({{1, 0}, {0, 1}});
  const evo::ExactState half{Rational(1, 2), Rational(1, 2)};
  CHECK(evo::fitness(identity, half) == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
  CHECK(evo::mean_fitness(identity, half) == Rational(1, 2));
  CHECK(evo::excess(identity, half) == std::vector<Rational>{0, 0});

  CHECK(kind_of([] { evo::fitness(rps(), evo::SimplexState{0.5, 0.5}); }) ==
        gt::ErrorKind::kInvalidArgument);
}

TEST_CASE("replicator field") {
  const evo::ExactState centroid(3, Rational(1, 3));
  CHECK(evo::replicator_rhs(rps(), centroid) == std::vector<Rational>{0, 0, 0});
  CHECK(evo::replicator_rhs(rps(), evo::ExactState{0, 0, 1}) == std::vector<Rational>{0, 0, 0});
  const evo::EvolutionGame g({{0, 3}, {1, 0}});
  CHECK(evo::replicator_rhs(g, evo::ExactState{Rational(1, 2), Rational(1, 2)}) ==
        std::vector<Rational>{Rational(1, 4), Rational(-1, 4)});
  CHECK(kind_of([&] { evo::replicator_rhs(g, evo::SimplexState{0.7, 0.7}); }) ==
        gt::ErrorKind::kInvalidState);
  CHECK(kind_of([&] { evo::replicator_rhs(g, evo::ExactState{2, -1}); }) ==
        gt::ErrorKind::kInvalidState);
}

TEST_CASE("replicator field is tangent to the simplex") {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> weight(0, 9);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const evo::EvolutionGame g(random_matrix(rng, n, false));
    evo::ExactState p(n);
    Rational total = 0;
    for (auto& v : p) total += (v = weight(rng) + 1);
    for (auto& v : p) v /= total;
    Rational sum = 0;
    for (const auto& v : evo::replicator_rhs(g, p)) sum += v;
    CHECK(sum == 0);

    const auto pf = random_state(rng, n);
    double fsum = 0;
    for (double v : evo::replicator_rhs(g, pf)) fsum += v;
    CHECK(std::abs(fsum) <= 1e-14);
  }
}

TEST_CASE("column shifts leave the flow unchanged") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const evo::EvolutionGame g(random_matrix(rng, n, false));
    const auto shifted = g.with_column_shift(trial % n, Rational(trial - 20, 3));
    const auto p = random_state(rng, n);
    CHECK(max_abs_diff(evo::replicator_rhs(g, p), evo::replicator_rhs(shifted, p)) <= 1e-12);
  }
}

TEST_CASE("integration") {
  const auto vertex = evo::integrate(rps(), {0, 1, 0}, 5);
  for (const auto& p : vertex.states) CHECK(p == evo::SimplexState{0, 1, 0});

  const double third = 1.0 / 3;
  const auto center = evo::integrate(rps(), {third, third, 1 - 2 * third}, 5);
  for (const auto& p : center.states) CHECK(max_abs_diff(p, center.states.front()) <= 1e-10);

  const auto dom = evo::integrate(dominance(), {0.5, 0.5}, 30, 1e-2);
  for (std::size_t k = 1; k < dom.size(); ++k) CHECK(dom.states[k][0] >= dom.states[k - 1][0]);
  CHECK(dom.states.back()[0] > 1 - 1e-9);
  // One-dimensional logistic form: p(t) = 1 / (1 + e^{-t}) from p(0) = 1/2.
  CHECK(std::abs(dom.states[200][0] - 1 / (1 + std::exp(-2.0))) < 1e-9);

  CHECK(dom.times.back() == 30);
  CHECK(kind_of([] { evo::integrate(rps(), {1, 0, 0}, 1, 0); }) == gt::ErrorKind::kInvalidArgument);
  CHECK(kind_of([] { evo::integrate(rps(), {1, 0, 0}, -1); }) == gt::ErrorKind::kInvalidArgument);
  CHECK(kind_of([] { evo::integrate(rps(), {0.9, 0, 0}, 1); }) == gt::ErrorKind::kInvalidState);
}

TEST_CASE("huge steps are reported as divergence") {
  const evo::EvolutionGame stiff({{0, 100}, {-100, 0}});
  CHECK(kind_of([&] { evo::integrate(stiff, {0.001, 0.999}, 1, 0.5); }) ==
        gt::ErrorKind::kIntegrationDiverged);
}

TEST_CASE("simplex and faces are forward invariant") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 3 + trial % 2;
    const evo::EvolutionGame g(random_matrix(rng, n, false));
    auto p0 = random_state(rng, n);
    p0[0] = 0;
    double total = 0;
    for (double v : p0) total += v;
    for (auto& v : p0) v /= total;
    const auto traj = evo::integrate(g, p0, 10, 1e-2);
    for (const auto& p : traj.states) {
      double sum = 0;
      for (double v : p) {
        CHECK(v >= 0);
        sum += v;
      }
      CHECK(std::abs(sum - 1) <= 1e-12);
      CHECK(p[0] == 0);
    }
  }
}

TEST_CASE("mean fitness never decreases for symmetric matrices") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const evo::EvolutionGame g(random_matrix(rng, 3 + trial % 2, true));
    const auto traj = evo::integrate(g, random_state(rng, g.size()), 10, 1e-2);
    for (std::size_t k = 1; k < traj.size(); ++k) {
      CHECK(evo::mean_fitness(g, traj.states[k]) >=
            evo::mean_fitness(g, traj.states[k - 1]) - 1e-12);
    }
  }
}

TEST_CASE("runge-kutta step has fifth-order local error") {
  const evo::EvolutionGame g({{0, 2, -1}, {1, 0, 3}, {-2, 1, 0}});
  const evo::SimplexState p{0.2, 0.5, 0.3};
  // Reference flow from many tiny steps.
  auto flow = [&](double h) {
    evo::SimplexState x = p;
    for (int k = 0; k < 2000; ++k) x = evo::rk4_step(g, x, h / 2000);
    return x;
  };
  const double e1 = max_abs_diff(evo::rk4_step(g, p, 0.1), flow(0.1));
  const double e2 = max_abs_diff(evo::rk4_step(g, p, 0.05), flow(0.05));
  const double order = std::log2(e1 / e2);
  CHECK(order > 4.5);
  CHECK(order < 5.5);

  // Central differences of the one-step map recover the field.
  const double h = 1e-4;
  const auto fwd = evo::rk4_step(g, p, h);
  const auto bwd = evo::rk4_step(g, p, -h);
  const auto rhs = evo::replicator_rhs(g, p);
  for (std::size_t i = 0; i < p.size(); ++i) {
    CHECK(std::abs((fwd[i] - bwd[i]) / (2 * h) - rhs[i]) < 1e-8);
  }
}

TEST_CASE("power product derivative identity") {
  const evo::EvolutionGame g({{0, 2, -1}, {1, 0, 3}, {-2, 1, 0}});
  const std::vector<double> alpha{0.5, 1.5, 2};
  const double h = 1e-3;
  const auto traj = evo::integrate(g, {0.3, 0.3, 0.4}, 2, h);
  for (std::size_t k = 1; k + 1 < traj.size(); k += 97) {
    const double fd = (evo::power_product(traj.states[k + 1], alpha) -
                       evo::power_product(traj.states[k - 1], alpha)) /
                      (2 * h);
    CHECK(std::abs(fd - evo::power_product_rate(g, traj.states[k], alpha)) <= 1e-6);
  }
}

TEST_CASE("interior rest points") {
  const auto r = evo::interior_rest_points(rps());
  REQUIRE(r.points.size() == 1);
  CHECK(r.points[0] == evo::ExactState(3, Rational(1, 3)));
  CHECK_FALSE(r.continuum);
  CHECK(evo::interior_rest_points(dominance()).points.empty());
  const evo::EvolutionGame zeros({{0, 0}, {0, 0}});
  CHECK(evo::interior_rest_points(zeros).continuum);
  CHECK(evo::interior_rest_points(hawk_dove()).points ==
        std::vector<evo::ExactState>{{Rational(1, 2), Rational(1, 2)}});
}

TEST_CASE("nash states") {
  const double third = 1.0 / 3;
  CHECK(evo::is_nash_state(rps(), evo::SimplexState{third, third, 1 - 2 * third}));
  CHECK_FALSE(evo::is_nash_state(dominance(), evo::SimplexState{0, 1}));
  CHECK(evo::is_nash_state(dominance(), evo::SimplexState{1, 0}));
  CHECK(evo::is_nash_state(rps(), evo::ExactState(3, Rational(1, 3))));
}

TEST_CASE("evolutionary stability") {
  CHECK(evo::is_ess(hawk_dove(), {0.5, 0.5}).stable);
  const double third = 1.0 / 3;
  const auto center = evo::is_ess(rps(), {third, third, 1 - 2 * third});
  CHECK_FALSE(center.stable);
  CHECK(center.certified);
  CHECK(evo::is_ess(dominance(), {1, 0}).stable);
  CHECK(kind_of([] { evo::is_ess(dominance(), {0, 1}); }) == gt::ErrorKind::kInvalidArgument);

  // Coordination game: both vertices are strict, the mixed point is not ESS.
  const evo::EvolutionGame coordination({{2, 0}, {0, 1}});
  CHECK(evo::is_ess(coordination, {1, 0}).stable);
  CHECK_FALSE(evo::is_ess(coordination, {1.0 / 3, 2.0 / 3}).stable);

  // Four strategies with a negative definite form: the centroid is sampled.
  const evo::EvolutionGame four(
      {{-1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}});
  const auto sampled = evo::is_ess(four, {0.25, 0.25, 0.25, 0.25});
  CHECK(sampled.stable);
  CHECK_FALSE(sampled.certified);
  CHECK(sampled.resolution == 64);
  const evo::EvolutionGame cyclic4(
      {{0, 1, 0, -1}, {-1, 0, 1, 0}, {0, -1, 0, 1}, {1, 0, -1, 0}});
  CHECK_FALSE(evo::is_ess(cyclic4, {0.25, 0.25, 0.25, 0.25}).stable);
}

TEST_CASE("exact face test agrees with a dense grid on random 3x3 games") {
  std::mt19937_64 rng(99);
  int compared = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const evo::EvolutionGame g(random_matrix(rng, 3, false));
    for (const auto& rest : evo::rest_points(g).points) {
      if (!rest.is_nash) continue;
      const auto& p = rest.point;
      const auto report = evo::is_ess(g, p);
      // Oracle: every best reply on a 1/240 grid of the simplex.
      const auto u = evo::fitness(g, p);
      const double best = *std::max_element(u.begin(), u.end());
      bool grid_stable = true;
      constexpr int m = 240;
      for (int i = 0; i <= m && grid_stable; ++i) {
        for (int j = 0; i + j <= m && grid_stable; ++j) {
          const evo::SimplexState q{double(i) / m, double(j) / m, double(m - i - j) / m};
          bool best_reply = true;
          for (std::size_t k = 0; k < 3; ++k) {
            if (q[k] > 0 && u[k] < best - 1e-10) best_reply = false;
          }
          if (!best_reply || max_abs_diff(q, p) < 1e-9) continue;
          const auto aq = evo::fitness(g, q);
          double paq = 0, qaq = 0;
          for (std::size_t k = 0; k < 3; ++k) {
            paq += p[k] * aq[k];
            qaq += q[k] * aq[k];
          }
          if (paq - qaq <= 1e-12) grid_stable = false;
        }
      }
      CHECK(report.stable == grid_stable);
      ++compared;
    }
  }
  CHECK(compared > 100);
}

TEST_CASE("time averages") {
  const auto constant = evo::integrate(rps(), {0, 0, 1}, 1, 0.1);
  CHECK(max_abs_diff(evo::time_average(constant), {0, 0, 1}) < 1e-15);
  evo::Trajectory two{{0, 2}, {{1, 0}, {0, 1}}, 2};
  CHECK(evo::time_average(two) == std::vector<double>{0.5, 0.5});
  const auto orbit = evo::integrate(rps(), {0.5, 0.25, 0.25}, 200);
  const auto avg = evo::time_average(orbit);
  for (double v : avg) CHECK(std::abs(v - 1.0 / 3) < 1e-2);
}

TEST_CASE("fisher rate identity") {
  const evo::EvolutionGame identity({{1, 0}, {0, 1}});
  CHECK(evo::fisher_rate_check(identity, {0.25, 0.75}) <= 1e-10);
  CHECK(evo::fisher_rate_check(identity, {0.5, 0.5}) == 0);
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const evo::EvolutionGame g(random_matrix(rng, 3, true));
    CHECK(evo::fisher_rate_check(g, {1.0 / 3, 1.0 / 3, 1.0 / 3}) <= 1e-10);
    CHECK(evo::fisher_rate_check(g, random_state(rng, 3)) <= 1e-10);
  }
  CHECK(kind_of([] { evo::fisher_rate_check(rps(), {0.2, 0.3, 0.5}); }) ==
        gt::ErrorKind::kUnsupportedMatrix);
}

TEST_CASE("transversal eigenvalues") {
  const auto dominated = evo::transversal_eigenvalues(dominance(), {0, 1});
  REQUIRE(dominated.size() == 1);
  CHECK(dominated[0].first == 0);
  CHECK(dominated[0].second == 1);
  CHECK_FALSE(evo::is_nash_state(dominance(), evo::SimplexState{0, 1}));

  const auto dominant = evo::transversal_eigenvalues(dominance(), {1, 0});
  CHECK(dominant[0].second == -1);

  const auto vertex = evo::transversal_eigenvalues(rps(), {1, 0, 0});
  REQUIRE(vertex.size() == 2);
  CHECK(vertex[0].second == 1);
  CHECK(vertex[1].second == -1);

  CHECK(kind_of([] { evo::transversal_eigenvalues(rps(), {0.2, 0.3, 0.5}); }) ==
        gt::ErrorKind::kInvalidArgument);
  CHECK(kind_of([] { evo::transversal_eigenvalues(hawk_dove(), {0.5, 0.5}); }) ==
        gt::ErrorKind::kInvalidArgument);
}

TEST_CASE("boundary rest points are nash exactly when transversal eigenvalues are non-positive") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const evo::EvolutionGame g(random_matrix(rng, 2 + trial % 3, false));
    for (const auto& rest : evo::rest_points(g).points) {
      CHECK(rest.residual <= 1e-9);
      if (rest.location == evo::RestPointReport::Location::kInterior) {
        CHECK(rest.is_nash);
        continue;
      }
      bool non_positive = true;
      for (const auto& [i, value] : evo::transversal_eigenvalues(g, rest.point)) {
        non_positive = non_positive && value <= 1e-10;
      }
      CHECK(non_positive == evo::is_nash_state(g, rest.point));
    }
  }
}

TEST_CASE("recurrence detection") {
  const auto dom = evo::integrate(dominance(), {0.5, 0.5}, 40, 1e-2);
  CHECK(evo::detect_recurrence(dom).kind == evo::RecurrenceReport::Kind::kConvergent);

  const auto orbit = evo::integrate(rps(), {0.5, 0.25, 0.25}, 60);
  const auto report = evo::detect_recurrence(orbit);
  CHECK(report.kind == evo::RecurrenceReport::Kind::kRecurrent);
  CHECK(report.period > 0);

  const auto still = evo::integrate(rps(), {0, 1, 0}, 1, 0.05);
  CHECK(evo::detect_recurrence(still).kind == evo::RecurrenceReport::Kind::kConvergent);

  const auto shortest = evo::integrate(rps(), {0, 1, 0}, 1, 0.2);
  CHECK(kind_of([&] { evo::detect_recurrence(shortest); }) == gt::ErrorKind::kInsufficientData);
}

TEST_CASE("trajectory csv") {
  const auto traj = evo::integrate(dominance(), {0.5, 0.5}, 1, 0.25);
  std::ostringstream out;
  evo::write_csv(traj, out, 3);
  const std::string csv = out.str();
  CHECK(csv.rfind("t,p1,p2\n0,0.5,0.5\n", 0) == 0);
  // Rows 0, 3 and the final row 4.
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
  std::istringstream rows(csv);
  std::string line;
  std::getline(rows, line);
  std::getline(rows, line);
  std::getline(rows, line);
  const double value = std::stod(line.substr(line.find(',') + 1));
  CHECK(value == traj.states[3][0]);
}
