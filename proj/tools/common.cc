#include <cstdio>
#include <fstream>
#include <ostream>

#include "cli.h"
#include "gt/error.h"
#include "gt/scenario_library.h"

namespace gt::cli {

io::GameFile load_game(const RunConfig& cfg) {
  GT_REQUIRE(cfg.scenario.empty() != cfg.input.empty(), ErrorKind::kInvalidArgument,
             "give exactly one of --in and --scenario");
  if (!cfg.scenario.empty()) return io::builtin_scenario(cfg.scenario);
  return io::read_game_file(cfg.input);
}

Json to_json(const Rational& r) { return gt::to_string(r); }

Json to_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(gt::to_string(r));
  return out;
}

Json to_json(const std::vector<std::vector<Rational>>& m) {
  Json out = Json::array();
  for (const auto& row : m) out.push_back(to_json(row));
  return out;
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? sep : "") + parts[k];
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string item = text.substr(start, comma == std::string::npos ? comma : comma - start);
    item.erase(0, item.find_first_not_of(' '));
    item.erase(item.find_last_not_of(' ') + 1);
    out.push_back(parse_rational(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  GT_REQUIRE(f.good(), ErrorKind::kInvalidArgument, "cannot write '" + path.string() + "'");
  f << text;
}

void emit_report(const RunConfig& cfg, const std::string& name, const Json& report,
                 std::ostream& out) {
  if (cfg.out.empty()) {
    out << report.dump(2) << "\n";
    return;
  }
  write_file(cfg.out / name, report.dump(2) + "\n");
  out << "wrote " << (cfg.out / name).string() << "\n";
}

void run_scenario(const RunConfig& cfg, std::ostream& out) {
  if (cfg.scenario.empty() || cfg.scenario == "list") {
    for (const auto& name : io::scenario_names()) out << name << "\n";
    return;
  }
  const std::string text = io::serialize_game_file(io::builtin_scenario(cfg.scenario));
  if (cfg.out.empty()) {
    out << text;
  } else {
    write_file(cfg.out / (cfg.scenario + ".json"), text);
    out << "wrote " << (cfg.out / (cfg.scenario + ".json")).string() << "\n";
  }
}

}  // namespace gt::cli
