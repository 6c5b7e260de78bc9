#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "cli.h"
#include "gt/error.h"
#include "gt/nash.h"
#include "gt/padic_quantum.h"
#include "gt/quantum.h"

namespace gt::cli {
namespace {

constexpr std::size_t kComplexGrid = 100;
constexpr std::size_t kPAdicGrid = 10;

// Payoffs of the interior mixed equilibrium of the classical game, if any.
std::optional<PayoffVector> classical_mixed_payoffs(const StrategicGame& g) {
  for (const auto& e : mixed_ne_2x2(g)) {
    bool interior = e.profile[0][0] != 0 && e.profile[0][0] != 1 && e.profile[1][0] != 0 &&
                    e.profile[1][0] != 1;
    if (interior) return e.payoffs;
  }
  return std::nullopt;
}

Json classical_json(const std::optional<PayoffVector>& mixed) {
  if (!mixed) return nullptr;
  return to_json(*mixed);
}

void run_complex(const RunConfig& cfg, const StrategicGame& g, const Rational& alpha2,
                 std::ostream& out) {
  const std::size_t grid = cfg.grid.value_or(kComplexGrid);
  const quantum::QuantumizedGame qg(g, std::sqrt(to_double(alpha2)),
                                    std::sqrt(to_double(1 - alpha2)));
  const auto eqs = quantum::mw_nash_search(qg, grid);
  const auto classical = classical_mixed_payoffs(g);

  Json report;
  report["mode"] = "complex";
  report["alpha_squared"] = to_json(alpha2);
  report["alpha"] = qg.alpha().real();
  report["beta"] = qg.beta().real();
  report["grid"] = grid;
  report["classical_mixed_payoffs"] = classical_json(classical);
  Json list = Json::array();
  double best = -INFINITY;
  for (const auto& e : eqs) {
    Json j;
    j["p"] = e.p;
    j["q"] = e.q;
    j["payoffs"] = {e.payoffs[0], e.payoffs[1]};
    if (classical) {
      j["pareto_superior_to_classical_mixed"] =
          e.payoffs[0] > to_double((*classical)[0]) + quantum::kImprovementTolerance &&
          e.payoffs[1] > to_double((*classical)[1]) + quantum::kImprovementTolerance;
    }
    best = std::max(best, e.payoffs[0] + e.payoffs[1]);
    list.push_back(j);
  }
  report["equilibria"] = list;
  Json top = Json::array();
  for (const auto& e : eqs) {
    if (e.payoffs[0] + e.payoffs[1] >= best - quantum::kImprovementTolerance) {
      top.push_back({{"p", e.p}, {"q", e.q}, {"payoffs", {e.payoffs[0], e.payoffs[1]}}});
    }
  }
  report["welfare_maximizing_equilibria"] = top;

  if (cfg.out.empty()) {
    out << report.dump(2) << "\n";
    return;
  }
  std::ostringstream csv;
  csv << "p,q,payoff1,payoff2\n";
  for (const auto& s : quantum::payoff_surface(qg, grid)) {
    csv << format_double(s.p) << "," << format_double(s.q) << "," << format_double(s.payoffs[0])
        << "," << format_double(s.payoffs[1]) << "\n";
  }
  write_file(cfg.out / "surface.csv", csv.str());
  out << "complex quantumization, |alpha|^2 = " << gt::to_string(alpha2) << ", grid " << grid
      << ": " << eqs.size() << " grid equilibria\n";
  for (const auto& t : top) {
    out << "  best: p = " << t["p"].dump() << ", q = " << t["q"].dump() << ", payoffs ("
        << t["payoffs"][0].dump() << ", " << t["payoffs"][1].dump() << ")\n";
  }
  if (classical) {
    out << "  classical mixed equilibrium payoffs (" << gt::to_string((*classical)[0]) << ", "
        << gt::to_string((*classical)[1]) << ")\n";
  }
  out << "wrote " << (cfg.out / "surface.csv").string() << "\n";
  emit_report(cfg, "quantum.json", report, out);
}

Json norm_json(const padic::PAdicNumber& x) { return to_json(x.norm()); }

void run_padic_mode(const RunConfig& cfg, const StrategicGame& g, const Rational& alpha2,
                    std::ostream& out) {
  const std::size_t grid = cfg.grid.value_or(kPAdicGrid);
  GT_REQUIRE(grid >= 1, ErrorKind::kInvalidArgument, "--grid must be at least 1");
  const std::int64_t mu = cfg.mu.value_or(padic::find_nonresidue(cfg.p));
  const padic::QuadraticExtension field(cfg.p, mu, cfg.precision);
  const padic::PAdicNumber a2 = field.embed(alpha2);
  const padic::PAdicNumber b2 = field.embed(1 - alpha2);
  GT_REQUIRE(padic::is_square(a2) && padic::is_square(b2), ErrorKind::kInvalidState,
             "|alpha|^2 = " + gt::to_string(alpha2) + " and its complement must be squares in Q_" +
                 std::to_string(cfg.p));
  const padic::ExtElement alpha = field.lift(padic::sqrt(a2));
  const padic::ExtElement beta = field.lift(padic::sqrt(b2));
  const auto classical = classical_mixed_payoffs(g);

  Json report;
  report["mode"] = "p-adic";
  report["p"] = cfg.p;
  report["mu"] = mu;
  report["precision"] = cfg.precision;
  report["alpha_squared"] = to_json(alpha2);
  report["alpha"] = alpha.to_literal();
  report["beta"] = beta.to_literal();
  report["grid"] = grid;
  report["classical_mixed_payoffs"] = classical_json(classical);
  report["order_note"] =
      "Q_p has no field order; payoff values are listed by the non-canonical norm-then-digits "
      "preorder and no p-adic equilibrium is declared";

  Json points = Json::array();
  std::ostringstream csv;
  csv << "p,q,payoff1,payoff2,norm1,norm2\n";
  std::vector<padic::PAdicNumber> seen;
  for (std::size_t i = 0; i <= grid; ++i) {
    for (std::size_t j = 0; j <= grid; ++j) {
      const Rational pk(static_cast<long>(i), static_cast<long>(grid));
      const Rational qk(static_cast<long>(j), static_cast<long>(grid));
      const pq::PQuantumResult r = pq::padic_quantumize_2x2(g, alpha, beta, pk, qk);
      Json pt;
      pt["p"] = to_json(pk);
      pt["q"] = to_json(qk);
      Json values = Json::array();
      for (const auto& v : r.distribution.values) values.push_back(v.to_literal());
      pt["distribution"] = {{"exact", r.distribution.exact ? to_json(r.distribution.exact->weights)
                                                           : Json(nullptr)},
                            {"padic", values}};
      Json pays = Json::array();
      std::string cells[2];
      for (std::size_t k = 0; k < 2; ++k) {
        Json pj;
        pj["exact"] = r.exact_payoffs[k] ? to_json(*r.exact_payoffs[k]) : Json(nullptr);
        pj["padic"] = r.payoffs[k].to_literal();
        pj["norm"] = norm_json(r.payoffs[k]);
        if (classical && r.exact_payoffs[k]) {
          padic::PAdicValue gap = pq::payoff_gap(*r.exact_payoffs[k], (*classical)[k], cfg.p);
          pj["gap_to_classical_mixed"] = {
              {"value", to_json(gap.value)},
              {"norm", to_json(gap.norm)},
              {"valuation", gap.valuation == padic::kInfinity ? Json("inf") : Json(gap.valuation)}};
        }
        cells[k] = r.exact_payoffs[k] ? gt::to_string(*r.exact_payoffs[k])
                                      : r.payoffs[k].to_literal();
        pays.push_back(pj);
        if (std::none_of(seen.begin(), seen.end(),
                         [&](const padic::PAdicNumber& s) { return s.identical(r.payoffs[k]); })) {
          seen.push_back(r.payoffs[k]);
        }
      }
      pt["payoffs"] = pays;
      points.push_back(pt);
      csv << gt::to_string(pk) << "," << gt::to_string(qk) << "," << cells[0] << "," << cells[1]
          << "," << gt::to_string(r.payoffs[0].norm()) << "," << gt::to_string(r.payoffs[1].norm())
          << "\n";
    }
  }
  report["points"] = points;
  std::sort(seen.begin(), seen.end(), padic::norm_then_digits_less);
  Json order = Json::array();
  for (const auto& s : seen) {
    auto r = padic::recognize_rational(s);
    order.push_back({{"padic", s.to_literal()},
                     {"exact", r ? to_json(*r) : Json(nullptr)},
                     {"norm", norm_json(s)}});
  }
  report["payoff_values_by_norm"] = order;

  if (cfg.out.empty()) {
    out << report.dump(2) << "\n";
    return;
  }
  write_file(cfg.out / "padic_surface.csv", csv.str());
  const pq::PQuantumResult corner = pq::padic_quantumize_2x2(g, alpha, beta, 1, 1);
  out << "p-adic quantumization over Q_" << cfg.p << "(sqrt(" << mu << ")), precision "
      << cfg.precision << ", |alpha|^2 = " << gt::to_string(alpha2) << ", grid " << grid << "\n";
  for (std::size_t k = 0; k < 2; ++k) {
    out << "  player " << k + 1 << " payoff at p = q = 1: "
        << (corner.exact_payoffs[k] ? gt::to_string(*corner.exact_payoffs[k])
                                    : corner.payoffs[k].to_literal())
        << " (norm " << gt::to_string(corner.payoffs[k].norm()) << ")";
    if (classical && corner.exact_payoffs[k]) {
      padic::PAdicValue gap = pq::payoff_gap(*corner.exact_payoffs[k], (*classical)[k], cfg.p);
      out << ", gap to classical mixed " << gt::to_string(gap.value) << " has norm "
          << gt::to_string(gap.norm);
    }
    out << "\n";
  }
  out << "wrote " << (cfg.out / "padic_surface.csv").string() << "\n";
  emit_report(cfg, "padic_quantum.json", report, out);
}

}  // namespace

void run_quantumize(const RunConfig& cfg, std::ostream& out) {
  const io::GameFile file = load_game(cfg);
  const StrategicGame g = file.as_strategic();
  GT_REQUIRE(g.is_two_by_two(), ErrorKind::kUnsupportedShape, "quantumize needs a 2x2 game");
  const Rational alpha2 = parse_rational(cfg.alpha2);
  GT_REQUIRE(alpha2 >= 0 && alpha2 <= 1, ErrorKind::kInvalidState,
             "--alpha2 must lie in [0, 1]");
  if (cfg.padic) {
    run_padic_mode(cfg, g, alpha2, out);
  } else {
    run_complex(cfg, g, alpha2, out);
  }
}

}  // namespace gt::cli
