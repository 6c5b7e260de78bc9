#include <fstream>
#include <ostream>
#include <sstream>

#include "cli.h"
#include "gt/error.h"
#include "gt/padic.h"
#include "gt/padic_ext.h"

namespace gt::cli {
namespace {

using padic::PAdicNumber;

std::vector<std::string> split_ws(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

struct Expr {
  std::string op;
  std::vector<std::string> args;
  std::optional<std::uint32_t> p;
  std::optional<std::size_t> precision;
};

// "op arg... [@ p[^N]]".
Expr parse_expr(const std::string& text) {
  std::vector<std::string> tokens = split_ws(text);
  GT_REQUIRE(!tokens.empty(), ErrorKind::kParseError, "empty expression");
  Expr e;
  e.op = tokens[0];
  std::size_t k = 1;
  for (; k < tokens.size() && tokens[k] != "@"; ++k) e.args.push_back(tokens[k]);
  if (k < tokens.size()) {
    GT_REQUIRE(k + 2 == tokens.size(), ErrorKind::kParseError,
               "expected 'p' or 'p^N' after '@' in '" + text + "'");
    const std::string& spec = tokens[k + 1];
    std::size_t caret = spec.find('^');
    try {
      std::size_t used = 0;
      e.p = static_cast<std::uint32_t>(std::stoul(spec.substr(0, caret), &used));
      GT_REQUIRE(used == spec.substr(0, caret).size(), ErrorKind::kParseError, "");
      if (caret != std::string::npos) e.precision = std::stoul(spec.substr(caret + 1));
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::kParseError, "bad prime specification '" + spec + "'");
    }
  }
  return e;
}

class Evaluator {
 public:
  Evaluator(const RunConfig& cfg, const Expr& e)
      : e_(e), p_(e.p.value_or(cfg.p)), n_(e.precision.value_or(cfg.precision)), mu_(cfg.mu) {
    padic::require_prime(p_);
    GT_REQUIRE(n_ >= 1, ErrorKind::kInvalidArgument, "precision must be at least 1");
  }

  Json run() {
    Json j;
    j["op"] = e_.op;
    const std::string& op = e_.op;
    if (op == "expand") {
      need(1);
      describe(j, number(0));
    } else if (op == "norm") {
      need(1);
      j["result"] = to_json(number(0).norm());
    } else if (op == "val") {
      need(1);
      PAdicNumber x = number(0);
      j["result"] = x.is_zero() ? Json("inf") : Json(x.valuation());
    } else if (op == "dist") {
      need(2);
      j["result"] = to_json(padic::distance(number(0), number(1)));
    } else if (op == "add" || op == "sub" || op == "mul" || op == "div") {
      need(2);
      PAdicNumber x = number(0);
      PAdicNumber y = number(1);
      PAdicNumber r = op == "add" ? x + y : op == "sub" ? x - y : op == "mul" ? x * y : x / y;
      describe(j, r);
    } else if (op == "sqrt") {
      need(1);
      describe(j, padic::sqrt(number(0)));
    } else if (op == "issquare") {
      need(1);
      j["result"] = padic::is_square(number(0));
    } else if (op == "nonresidue") {
      need(0);
      j["result"] = padic::find_nonresidue(p_);
    } else if (op == "recognize") {
      need(1);
      auto r = padic::recognize_rational(number(0));
      j["result"] = r ? to_json(*r) : Json(nullptr);
    } else if (op == "distcheck") {
      need(1);
      padic::PAdicDistribution d{p_, parse_rational_list(e_.args[0])};
      Rational total = 0;
      for (const auto& w : d.weights) total += w;
      j["result"] = padic::distribution_check(d);
      j["sum"] = to_json(total);
    } else if (op == "payoff") {
      need(2);
      padic::PAdicValue v = padic::padic_expected_payoff(
          parse_rational_list(e_.args[0]),
          padic::PAdicDistribution{p_, parse_rational_list(e_.args[1])});
      j["result"] = to_json(v.value);
      j["norm"] = to_json(v.norm);
      j["valuation"] = v.valuation == padic::kInfinity ? Json("inf") : Json(v.valuation);
    } else if (op == "extnorm") {
      need(2);
      std::int64_t mu = mu_.value_or(padic::find_nonresidue(p_));
      padic::QuadraticExtension f(p_, mu, std::max<std::size_t>(n_, 3));
      padic::NormValue nv = f.element(number(0), number(1)).norm();
      j["mu"] = mu;
      j["result"] = nv.to_string();
      if (!nv.zero) j["exponent"] = {{"numerator", nv.half_exponent}, {"denominator", 2}};
    } else {
      throw Error(ErrorKind::kParseError, "unknown p-adic operation '" + op + "'");
    }
    j["p"] = p_;
    return j;
  }

 private:
  void need(std::size_t count) const {
    GT_REQUIRE(e_.args.size() == count, ErrorKind::kParseError,
               "'" + e_.op + "' takes " + std::to_string(count) + " operand(s)");
  }

  PAdicNumber number(std::size_t k) const {
    const std::string& arg = e_.args[k];
    if (arg.find('@') != std::string::npos) {
      PAdicNumber x = PAdicNumber::parse_literal(arg);
      GT_REQUIRE(x.prime() == p_, ErrorKind::kPrimeMismatch,
                 "literal '" + arg + "' is not in Q_" + std::to_string(p_));
      return x;
    }
    return PAdicNumber::from_rational(parse_rational(arg), p_, n_);
  }

  static void describe(Json& j, const PAdicNumber& x) {
    j["result"] = x.to_literal();
    j["valuation"] = x.is_zero() ? Json("inf") : Json(x.valuation());
    j["digits"] = x.digits();
    j["precision"] = x.precision();
    j["absolute_precision"] =
        x.absolute_precision() == padic::kInfinity ? Json("inf") : Json(x.absolute_precision());
    j["norm"] = to_json(x.norm());
  }

  const Expr& e_;
  std::uint32_t p_;
  std::size_t n_;
  std::optional<std::int64_t> mu_;
};

}  // namespace

void run_padic(const RunConfig& cfg, std::ostream& out) {
  std::vector<std::string> lines = cfg.expressions;
  if (!cfg.input.empty()) {
    std::ifstream in(cfg.input);
    GT_REQUIRE(in.good(), ErrorKind::kParseError, "cannot open '" + cfg.input.string() + "'");
    for (std::string line; std::getline(in, line);) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
    }
  }
  GT_REQUIRE(!lines.empty(), ErrorKind::kInvalidArgument, "no expressions (use --expr or --in)");
  Json results = Json::array();
  for (const auto& line : lines) {
    Expr e = parse_expr(line);
    Json j = Evaluator(cfg, e).run();
    Json entry;
    entry["expr"] = line;
    entry.update(j);
    results.push_back(entry);
    if (!cfg.out.empty()) out << line << " => " << entry["result"].dump() << "\n";
  }
  Json report;
  report["results"] = results;
  emit_report(cfg, "padic.json", report, out);
}

}  // namespace gt::cli
