#ifndef GT_TOOLS_CLI_H_
#define GT_TOOLS_CLI_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gt/game_file.h"
#include "json.hpp"

namespace gt::cli {

using Json = nlohmann::ordered_json;

struct RunConfig {
  std::string command;
  std::filesystem::path input;
  std::string scenario;
  std::filesystem::path out;  // empty: JSON goes to stdout
  double h = 1e-3;
  double t_end = 100;
  std::optional<std::size_t> grid;
  std::uint32_t p = 7;
  std::size_t precision = 32;
  std::optional<std::int64_t> mu;
  std::string epsilon = "0";
  bool padic = false;
  bool require_mixed = false;
  std::string p0;
  std::string alpha2 = "1/2";
  std::size_t stride = 10;
  std::vector<std::string> expressions;
};

// Each command writes its artifacts under cfg.out (or its JSON report to
// `out` when cfg.out is empty) and a short human summary to `out`.
void run_analyze(const RunConfig& cfg, std::ostream& out);
void run_evolve(const RunConfig& cfg, std::ostream& out);
void run_quantumize(const RunConfig& cfg, std::ostream& out);
void run_padic(const RunConfig& cfg, std::ostream& out);
void run_scenario(const RunConfig& cfg, std::ostream& out);

// --- shared helpers ---

// The game named by --scenario, or read from --in.
io::GameFile load_game(const RunConfig& cfg);

Json to_json(const Rational& r);
Json to_json(const std::vector<Rational>& v);
Json to_json(const std::vector<std::vector<Rational>>& m);
std::string format_double(double x);
std::string join(const std::vector<std::string>& parts, const std::string& sep);

// Comma-separated rationals.
std::vector<Rational> parse_rational_list(const std::string& text);

// Writes `report` to cfg.out/name (creating the directory) or, without
// --out, to `out`.
void emit_report(const RunConfig& cfg, const std::string& name, const Json& report,
                 std::ostream& out);
void write_file(const std::filesystem::path& path, const std::string& text);

}  // namespace gt::cli

#endif  // GT_TOOLS_CLI_H_
