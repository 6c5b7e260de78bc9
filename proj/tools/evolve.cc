#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "cli.h"
#include "gt/error.h"
#include "gt/evolution.h"

namespace gt::cli {
namespace {

constexpr double kStartTolerance = 1e-9;

// Row player's matrix of a symmetric two-player strategic game.
std::vector<std::vector<Rational>> symmetric_matrix(const StrategicGame& g) {
  GT_REQUIRE(g.num_players() == 2 && g.num_strategies(0) == g.num_strategies(1),
             ErrorKind::kUnsupportedMatrix,
             "replicator dynamics needs a symmetric two-player game");
  const std::size_t n = g.num_strategies(0);
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a[i][j] = payoff(g, {i, j})[0];
      GT_REQUIRE(payoff(g, {j, i})[1] == a[i][j], ErrorKind::kUnsupportedMatrix,
                 "replicator dynamics needs a symmetric two-player game");
    }
  }
  return a;
}

evo::SimplexState start_state(const RunConfig& cfg, const io::GameFile& file, std::size_t n) {
  std::vector<Rational> exact;
  if (!cfg.p0.empty()) {
    exact = parse_rational_list(cfg.p0);
  } else if (file.initial_state) {
    exact = *file.initial_state;
  } else {
    exact.assign(n, Rational(1, static_cast<long>(n)));
  }
  GT_REQUIRE(exact.size() == n, ErrorKind::kInvalidState,
             "initial state needs " + std::to_string(n) + " entries");
  Rational total = 0;
  for (const auto& r : exact) {
    GT_REQUIRE(r >= -Rational(1, 1000000000), ErrorKind::kInvalidState,
               "initial state has a negative entry");
    total += r;
  }
  GT_REQUIRE(std::abs(to_double(total - 1)) <= kStartTolerance, ErrorKind::kInvalidState,
             "initial state sums to " + gt::to_string(total));
  evo::SimplexState p;
  for (const auto& r : exact) p.push_back(std::max(0.0, to_double(r / total)));
  return p;
}

Json doubles(const std::vector<double>& v) {
  Json out = Json::array();
  for (double x : v) out.push_back(x);
  return out;
}

}  // namespace

void run_evolve(const RunConfig& cfg, std::ostream& out) {
  const io::GameFile file = load_game(cfg);
  std::vector<std::vector<Rational>> matrix;
  std::vector<std::string> names;
  if (file.kind == io::GameKind::kEvolution) {
    matrix = file.matrix;
    names = file.strategy_names;
  } else {
    StrategicGame g = file.as_strategic();
    matrix = symmetric_matrix(g);
    names = g.strategy_names(0);
  }
  GT_REQUIRE(cfg.h > 0 && std::isfinite(cfg.h), ErrorKind::kInvalidArgument,
             "--h must be positive");
  GT_REQUIRE(cfg.t_end > 0 && std::isfinite(cfg.t_end), ErrorKind::kInvalidArgument,
             "--t-end must be positive");
  GT_REQUIRE(cfg.stride >= 1, ErrorKind::kInvalidArgument, "--stride must be at least 1");
  const evo::EvolutionGame game(matrix);
  const std::size_t n = game.size();
  const evo::SimplexState p0 = start_state(cfg, file, n);

  const evo::Trajectory traj = evo::integrate(game, p0, cfg.t_end, cfg.h);
  double drift = 0;
  for (const auto& s : traj.states) {
    double total = 0;
    for (double x : s) total += x;
    drift = std::max(drift, std::abs(total - 1));
  }
  const std::vector<double> average = evo::time_average(traj);

  Json report;
  report["game"] = {{"name", file.name}, {"strategies", names}, {"matrix", to_json(matrix)}};
  if (file.illustrative) report["game"]["illustrative"] = true;
  report["integration"] = {{"method", "rk4"},           {"h", cfg.h},
                           {"t_end", cfg.t_end},        {"samples", traj.size()},
                           {"simplex_drift", drift},    {"csv_stride", cfg.stride}};
  report["initial_state"] = doubles(p0);
  report["final_state"] = doubles(traj.states.back());
  report["time_average"] = doubles(average);
  report["min_coordinate"] = evo::min_boundary_distance(traj);

  if (traj.size() >= 10) {
    evo::RecurrenceReport rec = evo::detect_recurrence(traj);
    report["recurrence"] = {{"kind", evo::to_string(rec.kind)},
                            {"terminal_diameter", rec.terminal_diameter},
                            {"returns", rec.return_times.size()},
                            {"period", rec.period}};
  }

  evo::RestPointSurvey survey = evo::rest_points(game);
  Json points = Json::array();
  for (const auto& rp : survey.points) {
    Json j;
    j["point"] = to_json(rp.exact_point);
    const bool inside = rp.location == evo::RestPointReport::Location::kInterior;
    j["location"] = inside ? "interior" : "boundary";
    j["residual"] = rp.residual;
    j["nash"] = rp.is_nash;
    Json eig = Json::array();
    for (const auto& [i, v] : rp.transversal_eigenvalues) {
      eig.push_back({{"strategy", names[i]}, {"value", v}});
    }
    j["transversal_eigenvalues"] = eig;
    if (rp.is_nash) {
      evo::EssReport ess = evo::is_ess(game, rp.point);
      j["ess"] = {{"stable", ess.stable},
                  {"certified", ess.certified},
                  {"resolution", ess.resolution}};
    }
    if (rp.location == evo::RestPointReport::Location::kInterior) {
      double gap = 0;
      for (std::size_t i = 0; i < n; ++i) gap = std::max(gap, std::abs(average[i] - rp.point[i]));
      j["time_average_distance"] = gap;
    }
    points.push_back(j);
  }
  report["rest_points"] = points;
  Json continua = Json::array();
  for (const auto& s : survey.continuum_supports) continua.push_back(s);
  report["continuum_supports"] = continua;

  if (cfg.out.empty()) {
    out << report.dump(2) << "\n";
    return;
  }
  std::ostringstream csv;
  evo::write_csv(traj, csv, cfg.stride);
  write_file(cfg.out / "trajectory.csv", csv.str());
  out << "game: " << file.name << " (" << n << " strategies), " << traj.size() - 1
      << " RK4 steps to t = " << format_double(cfg.t_end) << "\n";
  out << "final state:";
  for (double x : traj.states.back()) out << " " << format_double(x);
  out << "\nrest points: " << survey.points.size();
  if (report.contains("recurrence")) {
    out << ", trajectory " << report["recurrence"]["kind"].get<std::string>();
  }
  out << "\nwrote " << (cfg.out / "trajectory.csv").string() << "\n";
  emit_report(cfg, "evolution.json", report, out);
}

}  // namespace gt::cli
