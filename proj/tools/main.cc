#include <iostream>

#include "CLI11.hpp"
#include "cli.h"
#include "gt/error.h"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitSizeLimit = 4;

int exit_code(gt::ErrorKind kind) {
  switch (kind) {
    case gt::ErrorKind::kParseError: return kExitParse;
    case gt::ErrorKind::kSizeLimit: return kExitSizeLimit;
    default: return kExitValidation;
  }
}

}  // namespace

int main(int argc, char** argv) {
  gt::cli::RunConfig cfg;
  CLI::App app{"gt: exact game-theory toolkit"};
  app.require_subcommand(1);

  auto add_io = [&](CLI::App* sub) {
    sub->add_option("--in", cfg.input, "game file (gt-game/1 JSON)");
    sub->add_option("--scenario", cfg.scenario, "built-in scenario name");
    sub->add_option("--out", cfg.out,
                    "output directory; without it the JSON report goes to stdout");
  };

  auto* analyze = app.add_subcommand("analyze", "equilibria, dominance, welfare, price of anarchy");
  add_io(analyze);
  analyze->add_option("--epsilon", cfg.epsilon, "epsilon for the epsilon-Nash check (rational)");
  analyze->add_flag("--require-mixed", cfg.require_mixed,
                    "fail with a size-limit error instead of skipping support enumeration");

  auto* evolve = app.add_subcommand("evolve", "replicator dynamics");
  add_io(evolve);
  evolve->set_help_flag("--help", "Print this help message and exit");
  evolve->add_option("--h", cfg.h, "RK4 step")->capture_default_str();
  evolve->add_option("--t-end", cfg.t_end, "integration horizon")->capture_default_str();
  evolve->add_option("--p0", cfg.p0, "initial state, comma-separated rationals");
  evolve->add_option("--stride", cfg.stride, "write every n-th sample to the CSV")
      ->capture_default_str();

  auto* quantumize = app.add_subcommand("quantumize", "entangled quantization of a 2x2 game");
  add_io(quantumize);
  quantumize->add_option("--grid", cfg.grid, "grid size (default 100 complex, 10 p-adic)");
  quantumize->add_option("--alpha2", cfg.alpha2, "|alpha|^2 of the initial state (rational)")
      ->capture_default_str();
  quantumize->add_flag("--padic", cfg.padic, "work over Q_p(sqrt(mu)) instead of C");
  quantumize->add_option("--p", cfg.p, "prime")->capture_default_str();
  quantumize->add_option("--prec", cfg.precision, "p-adic digits")->capture_default_str();
  quantumize->add_option("--mu", cfg.mu, "non-square mu (default: canonical choice for p)");

  auto* padic = app.add_subcommand("padic", "p-adic expression evaluator");
  padic->add_option("--in", cfg.input, "file with one expression per line");
  padic->add_option("--out", cfg.out, "output directory");
  padic->add_option("--expr,-e", cfg.expressions, "expression, e.g. 'expand -1 @ 3^8'");
  padic->add_option("--p", cfg.p, "default prime")->capture_default_str();
  padic->add_option("--prec", cfg.precision, "default digits")->capture_default_str();
  padic->add_option("--mu", cfg.mu, "non-square for extnorm");

  auto* scenario = app.add_subcommand("scenario", "print or export a built-in scenario file");
  scenario->add_option("name", cfg.scenario, "scenario name, or 'list'");
  scenario->add_option("--out", cfg.out, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (analyze->parsed()) gt::cli::run_analyze(cfg, std::cout);
    if (evolve->parsed()) gt::cli::run_evolve(cfg, std::cout);
    if (quantumize->parsed()) gt::cli::run_quantumize(cfg, std::cout);
    if (padic->parsed()) gt::cli::run_padic(cfg, std::cout);
    if (scenario->parsed()) gt::cli::run_scenario(cfg, std::cout);
  } catch (const gt::Error& e) {
    std::cerr << "gt: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "gt: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
