#include <ostream>
#include <sstream>

#include "cli.h"
#include "gt/congestion.h"
#include "gt/error.h"
#include "gt/nash.h"
#include "gt/welfare.h"

namespace gt::cli {
namespace {

constexpr std::size_t kDynamicsProfileLimit = 512;

std::vector<std::string> labels(const StrategicGame& g, const std::vector<PureProfile>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(g.profile_label(p));
  return out;
}

std::string tuple(const std::vector<Rational>& v) {
  std::vector<std::string> parts;
  for (const auto& r : v) parts.push_back(gt::to_string(r));
  return "(" + join(parts, ", ") + ")";
}

Json equilibrium_json(const StrategicGame& g, const Equilibrium& e, const Rational& epsilon) {
  Json j;
  Json strategies = Json::object();
  for (std::size_t i = 0; i < g.num_players(); ++i) {
    strategies[g.player_names()[i]] = to_json(e.profile[i]);
  }
  j["strategies"] = strategies;
  j["payoffs"] = to_json(e.payoffs);
  j["epsilon_nash"] = is_epsilon_nash(g, e.profile, epsilon);
  Json outcome = Json::object();
  JointDistribution d = product_distribution(g, e.profile);
  for (std::size_t k = 0; k < d.size(); ++k) {
    outcome[g.profile_label(g.profile_at(k))] = to_json(d[k]);
  }
  j["outcome_distribution"] = outcome;
  return j;
}

Json mixed_section(const RunConfig& cfg, const StrategicGame& g, const Rational& epsilon,
                   std::ostream& summary) {
  Json j;
  if (g.num_players() != 2) {
    j["skipped"] = "not-two-player";
    return j;
  }
  std::size_t largest = std::max(g.num_strategies(0), g.num_strategies(1));
  if (largest > kSupportEnumerationMaxStrategies && !cfg.require_mixed) {
    j["skipped"] = "size-limit";
    j["max_strategies"] = kSupportEnumerationMaxStrategies;
    summary << "mixed equilibria: skipped (more than " << kSupportEnumerationMaxStrategies
            << " strategies; --require-mixed turns this into an error)\n";
    return j;
  }
  std::vector<Equilibrium> eqs;
  if (g.is_two_by_two()) {
    j["method"] = "2x2-closed-form";
    eqs = mixed_ne_2x2(g);
    SupportEnumerationResult se = support_enumeration(g, 2);
    j["support_enumeration_agrees"] = se.equilibria == eqs;
  } else {
    j["method"] = "support-enumeration";
    SupportEnumerationResult se = support_enumeration(g, largest);
    eqs = se.equilibria;
    Json degenerate = Json::array();
    for (const auto& s : se.degenerate_supports) {
      Json pair;
      pair["row"] = s.row;
      pair["col"] = s.col;
      degenerate.push_back(pair);
    }
    j["degenerate_supports"] = degenerate;
  }
  Json list = Json::array();
  summary << "equilibria (" << j["method"].get<std::string>() << "):\n";
  for (const auto& e : eqs) {
    list.push_back(equilibrium_json(g, e, epsilon));
    summary << "  ";
    for (std::size_t i = 0; i < 2; ++i) {
      summary << g.player_names()[i] << " " << tuple(e.profile[i]) << "  ";
    }
    summary << "payoffs " << tuple(e.payoffs) << "\n";
  }
  j["equilibria"] = list;
  return j;
}

Json dynamics_section(const StrategicGame& g) {
  Json list = Json::array();
  for (const auto& start : all_profiles(g)) {
    DynamicsResult r = best_response_dynamics(g, start, g.num_profiles() + 1);
    Json j;
    j["start"] = g.profile_label(start);
    if (r.outcome == DynamicsResult::Outcome::kConverged) {
      j["outcome"] = "converged";
      j["final"] = g.profile_label(r.final_profile);
      j["steps"] = r.steps();
    } else {
      j["outcome"] = "cycle";
      j["cycle"] = labels(g, r.cycle);
    }
    list.push_back(j);
  }
  return list;
}

}  // namespace

void run_analyze(const RunConfig& cfg, std::ostream& out) {
  const io::GameFile file = load_game(cfg);
  const StrategicGame g = file.as_strategic();
  const Rational epsilon = parse_rational(cfg.epsilon);
  GT_REQUIRE(epsilon >= 0, ErrorKind::kInvalidArgument, "--epsilon must be non-negative");
  std::ostringstream summary;

  Json report;
  Json game;
  game["name"] = file.name;
  game["kind"] = io::to_string(file.kind);
  game["players"] = g.player_names();
  game["strategies"] = g.all_strategy_names();
  game["profiles"] = g.num_profiles();
  if (file.illustrative) game["illustrative"] = true;
  report["game"] = game;
  report["epsilon"] = to_json(epsilon);
  summary << "game: " << file.name << " (" << io::to_string(file.kind) << ", "
          << g.num_players() << " players, " << g.num_profiles() << " profiles)\n";

  const auto pure = pure_nash(g);
  Json pure_list = Json::array();
  for (const auto& s : pure) {
    Json j;
    j["profile"] = g.profile_label(s);
    j["strategies"] = s;
    j["payoffs"] = to_json(payoff(g, s));
    pure_list.push_back(j);
  }
  report["pure_nash"] = pure_list;
  summary << "pure Nash equilibria: " << (pure.empty() ? "none" : join(labels(g, pure), " "))
          << "\n";

  EliminationResult elim = iterated_elimination(g);
  Json trace = Json::array();
  for (const auto& step : elim.trace) {
    Json j;
    j["round"] = step.round;
    j["player"] = g.player_names()[step.player];
    j["strategy"] = g.strategy_names(step.player)[step.strategy];
    j["dominated_by"] = g.strategy_names(step.player)[step.dominated_by];
    trace.push_back(j);
  }
  report["elimination"] = {{"trace", trace}, {"remaining", elim.reduced.all_strategy_names()}};
  summary << "strict-dominance eliminations: " << elim.trace.size() << "\n";

  report["mixed"] = mixed_section(cfg, g, epsilon, summary);

  const auto pareto = pareto_optimal_profiles(g);
  report["pareto_optimal"] = labels(g, pareto);
  summary << "Pareto optimal: " << join(labels(g, pareto), " ") << "\n";
  SocialOptimum opt = social_optimum(g);
  report["social_optimum"] = {{"profiles", labels(g, opt.profiles)},
                              {"welfare", to_json(opt.welfare)}};

  try {
    PriceOfAnarchy poa = price_of_anarchy(g);
    report["price_of_anarchy"] = {{"ratio", to_json(poa.ratio)},
                                  {"optimal_welfare", to_json(poa.optimal_welfare)},
                                  {"worst_equilibrium_welfare",
                                   to_json(poa.worst_equilibrium_welfare)},
                                  {"scope", poa.equilibrium_scope}};
    summary << "price of anarchy: " << gt::to_string(poa.ratio) << "\n";
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kNoEquilibrium && e.kind() != ErrorKind::kUndefinedRatio) throw;
    report["price_of_anarchy"] = {{"undefined", std::string(error_kind_name(e.kind()))},
                                  {"reason", e.message()}};
    summary << "price of anarchy: undefined (" << e.what() << ")\n";
  }

  if (file.correlated) {
    CorrelatedCheck ce = is_correlated_equilibrium(g, *file.correlated);
    Json j;
    j["holds"] = ce.holds;
    j["worst_margin"] = to_json(ce.worst_margin);
    if (!ce.holds) {
      j["player"] = g.player_names()[ce.player];
      j["recommended"] = g.strategy_names(ce.player)[ce.recommended];
      j["deviation"] = g.strategy_names(ce.player)[ce.deviation];
    }
    report["correlated_equilibrium"] = j;
    summary << "correlated equilibrium check: " << (ce.holds ? "holds" : "fails") << "\n";
  }

  if (file.kind == io::GameKind::kCongestion) {
    bool holds = check_potential(g, potential_table(*file.congestion));
    report["potential"] = {{"kind", "rosenthal"}, {"holds", holds}};
    summary << "Rosenthal potential: " << (holds ? "exact" : "fails") << "\n";
  }
  if (g.num_profiles() <= kDynamicsProfileLimit) {
    report["best_response_dynamics"] = dynamics_section(g);
  }

  if (cfg.out.empty()) {
    out << report.dump(2) << "\n";
    return;
  }
  out << summary.str();
  emit_report(cfg, "analysis.json", report, out);
}

}  // namespace gt::cli
