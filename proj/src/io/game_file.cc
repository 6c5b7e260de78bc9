#include "gt/game_file.h"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "gt/error.h"
#include "gt/scenarios.h"
#include "json.hpp"

namespace gt::io {
namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::kParseError,
              "at " + (path.empty() ? std::string("/") : path) + ": " + what);
}

const Json& member(const Json& obj, const std::string& key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(path, "missing key \"" + key + "\"");
  return *it;
}

const Json& array_at(const Json& j, const std::string& path) {
  if (!j.is_array()) schema_error(path, "expected an array");
  return j;
}

std::string string_at(const Json& j, const std::string& path) {
  if (!j.is_string()) schema_error(path, "expected a string");
  return j.get<std::string>();
}

Rational rational_at(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_string()) schema_error(path, "expected a rational string such as \"2/5\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    schema_error(path, e.message());
  }
}

std::vector<std::string> strings_at(const Json& j, const std::string& path) {
  std::vector<std::string> out;
  const Json& arr = array_at(j, path);
  for (std::size_t k = 0; k < arr.size(); ++k) {
    out.push_back(string_at(arr[k], path + "/" + std::to_string(k)));
  }
  return out;
}

std::vector<Rational> rationals_at(const Json& j, const std::string& path) {
  std::vector<Rational> out;
  const Json& arr = array_at(j, path);
  for (std::size_t k = 0; k < arr.size(); ++k) {
    out.push_back(rational_at(arr[k], path + "/" + std::to_string(k)));
  }
  return out;
}

Json rationals_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(gt::to_string(r));
  return out;
}

// Walks a depth-`counts.size()` nested array in row-major order, calling
// leaf(json, path) for each innermost element.
template <class Leaf>
void walk_tensor(const Json& j, const std::vector<std::size_t>& counts, std::size_t depth,
                 const std::string& path, Leaf&& leaf) {
  if (depth == counts.size()) {
    leaf(j, path);
    return;
  }
  const Json& arr = array_at(j, path);
  if (arr.size() != counts[depth]) {
    schema_error(path, "expected " + std::to_string(counts[depth]) + " entries, found " +
                           std::to_string(arr.size()));
  }
  for (std::size_t k = 0; k < arr.size(); ++k) {
    walk_tensor(arr[k], counts, depth + 1, path + "/" + std::to_string(k), leaf);
  }
}

template <class Leaf>
Json build_tensor(const std::vector<std::size_t>& counts, std::size_t depth, std::size_t& index,
                  Leaf&& leaf) {
  if (depth == counts.size()) return leaf(index++);
  Json arr = Json::array();
  for (std::size_t k = 0; k < counts[depth]; ++k) {
    arr.push_back(build_tensor(counts, depth + 1, index, leaf));
  }
  return arr;
}

std::vector<std::size_t> strategy_counts(const std::vector<std::vector<std::string>>& names) {
  std::vector<std::size_t> counts;
  for (const auto& list : names) counts.push_back(list.size());
  return counts;
}

std::vector<std::vector<std::string>> congestion_names(const GameFile& f) {
  return f.congestion->strategy_names();
}

std::vector<std::size_t> profile_counts(const GameFile& f) {
  if (f.kind == GameKind::kCongestion) return strategy_counts(congestion_names(f));
  return strategy_counts(f.strategic->all_strategy_names());
}

JointDistribution read_joint(const Json& j, const std::vector<std::size_t>& counts,
                             const std::string& path) {
  JointDistribution d;
  walk_tensor(j, counts, 0, path, [&](const Json& leaf, const std::string& p) {
    d.push_back(rational_at(leaf, p));
  });
  return d;
}

void with_context(const std::function<void()>& build, const std::string& path) {
  try {
    build();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kParseError) throw;
    throw Error(e.kind(), "at " + path + ": " + e.message());
  }
}

GameFile parse_strategic(const Json& root, GameFile f) {
  auto names = std::vector<std::vector<std::string>>{};
  const Json& strategies = array_at(member(root, "strategies", ""), "/strategies");
  for (std::size_t i = 0; i < strategies.size(); ++i) {
    names.push_back(strings_at(strategies[i], "/strategies/" + std::to_string(i)));
  }
  std::vector<std::string> players;
  if (root.contains("players")) players = strings_at(root["players"], "/players");
  const std::size_t n = names.size();
  if (n == 0) schema_error("/strategies", "a game needs at least one player");
  if (!players.empty() && players.size() != n) {
    schema_error("/players", "expected " + std::to_string(n) + " names");
  }
  std::vector<PayoffVector> payoffs;
  walk_tensor(member(root, "payoffs", ""), strategy_counts(names), 0, "/payoffs",
              [&](const Json& leaf, const std::string& path) {
                auto v = rationals_at(leaf, path);
                if (v.size() != n) {
                  schema_error(path, "expected " + std::to_string(n) + " payoffs, found " +
                                         std::to_string(v.size()));
                }
                payoffs.push_back(std::move(v));
              });
  with_context([&] { f.strategic = StrategicGame(names, payoffs, players); }, "/payoffs");
  return f;
}

GameFile parse_evolution(const Json& root, GameFile f) {
  f.matrix.clear();
  const Json& m = array_at(member(root, "matrix", ""), "/matrix");
  for (std::size_t i = 0; i < m.size(); ++i) {
    f.matrix.push_back(rationals_at(m[i], "/matrix/" + std::to_string(i)));
    if (f.matrix.back().size() != m.size()) {
      schema_error("/matrix/" + std::to_string(i), "matrix must be square");
    }
  }
  if (f.matrix.size() < 2) schema_error("/matrix", "need at least two strategies");
  if (root.contains("strategies")) {
    f.strategy_names = strings_at(root["strategies"], "/strategies");
    if (f.strategy_names.size() != f.matrix.size()) {
      schema_error("/strategies", "expected " + std::to_string(f.matrix.size()) + " names");
    }
  } else {
    for (std::size_t i = 0; i < f.matrix.size(); ++i) {
      f.strategy_names.push_back("s" + std::to_string(i + 1));
    }
  }
  if (root.contains("initial_state")) {
    f.initial_state = rationals_at(root["initial_state"], "/initial_state");
    if (f.initial_state->size() != f.matrix.size()) {
      schema_error("/initial_state", "expected " + std::to_string(f.matrix.size()) + " entries");
    }
  }
  return f;
}

GameFile parse_congestion(const Json& root, GameFile f) {
  std::vector<Resource> resources;
  std::map<std::string, std::size_t> index;
  const Json& rs = array_at(member(root, "resources", ""), "/resources");
  for (std::size_t r = 0; r < rs.size(); ++r) {
    std::string path = "/resources/" + std::to_string(r);
    Resource res{string_at(member(rs[r], "name", path), path + "/name"),
                 rationals_at(member(rs[r], "costs", path), path + "/costs")};
    if (!index.emplace(res.name, r).second) schema_error(path, "duplicate resource name");
    resources.push_back(std::move(res));
  }
  std::vector<std::vector<std::vector<std::size_t>>> strategies;
  std::vector<std::vector<std::string>> names;
  const Json& ps = array_at(member(root, "strategies", ""), "/strategies");
  for (std::size_t i = 0; i < ps.size(); ++i) {
    std::string ppath = "/strategies/" + std::to_string(i);
    strategies.emplace_back();
    names.emplace_back();
    const Json& list = array_at(ps[i], ppath);
    for (std::size_t s = 0; s < list.size(); ++s) {
      std::string path = ppath + "/" + std::to_string(s);
      names.back().push_back(string_at(member(list[s], "name", path), path + "/name"));
      std::vector<std::size_t> used;
      std::vector<std::string> rnames =
          strings_at(member(list[s], "resources", path), path + "/resources");
      for (std::size_t r = 0; r < rnames.size(); ++r) {
        auto it = index.find(rnames[r]);
        if (it == index.end()) {
          schema_error(path + "/resources/" + std::to_string(r),
                       "unknown resource '" + rnames[r] + "'");
        }
        used.push_back(it->second);
      }
      strategies.back().push_back(std::move(used));
    }
  }
  if (root.contains("players")) f.player_names = strings_at(root["players"], "/players");
  if (!f.player_names.empty() && f.player_names.size() != strategies.size()) {
    schema_error("/players", "expected " + std::to_string(strategies.size()) + " names");
  }
  with_context([&] { f.congestion = CongestionGame(resources, strategies, names); },
               "/strategies");
  return f;
}

Json header(const GameFile& f) {
  Json j;
  j["format"] = kFormat;
  j["kind"] = to_string(f.kind);
  j["name"] = f.name;
  if (!f.description.empty()) j["description"] = f.description;
  if (f.illustrative) j["illustrative"] = true;
  return j;
}

}  // namespace

std::string to_string(GameKind kind) {
  switch (kind) {
    case GameKind::kStrategic: return "strategic";
    case GameKind::kEvolution: return "evolution";
    case GameKind::kCongestion: return "congestion";
  }
  return "unknown";
}

StrategicGame GameFile::as_strategic() const {
  switch (kind) {
    case GameKind::kStrategic: return *strategic;
    case GameKind::kEvolution: return scenarios::symmetric_game(matrix, strategy_names);
    case GameKind::kCongestion: {
      StrategicGame g = to_strategic_game(*congestion);
      return StrategicGame(g.all_strategy_names(), g.payoff_table(), player_names);
    }
  }
  throw Error(ErrorKind::kInvalidArgument, "unknown game kind");
}

GameFile parse_game_file(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    // e.byte is the 1-based offset just past the offending character.
    std::size_t offset = e.byte == 0 ? 0 : e.byte - 1;
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t k = 0; k < offset && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    if (auto pos = what.find("syntax error"); pos != std::string::npos) {
      what = what.substr(pos);
    } else if (auto col = what.find("column "); col != std::string::npos) {
      // "[json.exception...] parse error at line L, column C: <reason>"
      if (auto sep = what.find(": ", col); sep != std::string::npos) what = what.substr(sep + 2);
    }
    throw Error(ErrorKind::kParseError,
                "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                    what);
  }
  if (!root.is_object()) schema_error("", "expected a JSON object");
  std::string format = string_at(member(root, "format", ""), "/format");
  if (format != kFormat) schema_error("/format", "unsupported format '" + format + "'");

  GameFile f;
  std::string kind = root.contains("kind") ? string_at(root["kind"], "/kind") : "strategic";
  if (root.contains("name")) f.name = string_at(root["name"], "/name");
  if (root.contains("description")) f.description = string_at(root["description"], "/description");
  if (root.contains("illustrative")) {
    if (!root["illustrative"].is_boolean()) schema_error("/illustrative", "expected a boolean");
    f.illustrative = root["illustrative"].get<bool>();
  }
  if (kind == "strategic") {
    f.kind = GameKind::kStrategic;
    f = parse_strategic(root, std::move(f));
  } else if (kind == "evolution") {
    f.kind = GameKind::kEvolution;
    f = parse_evolution(root, std::move(f));
  } else if (kind == "congestion") {
    f.kind = GameKind::kCongestion;
    f = parse_congestion(root, std::move(f));
  } else {
    schema_error("/kind", "unknown kind '" + kind + "'");
  }
  if (root.contains("correlated")) {
    if (f.kind == GameKind::kEvolution) {
      schema_error("/correlated", "only strategic and congestion games take a joint distribution");
    }
    f.correlated = read_joint(root["correlated"], profile_counts(f), "/correlated");
  }
  return f;
}

GameFile read_game_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  GT_REQUIRE(in.good(), ErrorKind::kParseError, "cannot open '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_game_file(buffer.str());
}

std::string serialize_game_file(const GameFile& f) {
  Json j = header(f);
  switch (f.kind) {
    case GameKind::kStrategic: {
      const StrategicGame& g = *f.strategic;
      j["players"] = g.player_names();
      j["strategies"] = g.all_strategy_names();
      std::size_t index = 0;
      j["payoffs"] = build_tensor(strategy_counts(g.all_strategy_names()), 0, index,
                                  [&](std::size_t k) { return rationals_json(g.payoff_at(k)); });
      break;
    }
    case GameKind::kEvolution: {
      j["strategies"] = f.strategy_names;
      Json m = Json::array();
      for (const auto& row : f.matrix) m.push_back(rationals_json(row));
      j["matrix"] = m;
      if (f.initial_state) j["initial_state"] = rationals_json(*f.initial_state);
      break;
    }
    case GameKind::kCongestion: {
      const CongestionGame& c = *f.congestion;
      if (!f.player_names.empty()) j["players"] = f.player_names;
      Json rs = Json::array();
      for (const auto& r : c.resources()) {
        Json res;
        res["name"] = r.name;
        res["costs"] = rationals_json(r.costs);
        rs.push_back(res);
      }
      j["resources"] = rs;
      Json ps = Json::array();
      for (std::size_t i = 0; i < c.num_players(); ++i) {
        Json list = Json::array();
        for (std::size_t s = 0; s < c.strategies()[i].size(); ++s) {
          Json st;
          st["name"] = c.strategy_names()[i][s];
          Json used = Json::array();
          for (std::size_t r : c.strategies()[i][s]) used.push_back(c.resources()[r].name);
          st["resources"] = used;
          list.push_back(st);
        }
        ps.push_back(list);
      }
      j["strategies"] = ps;
      break;
    }
  }
  if (f.correlated) {
    std::size_t index = 0;
    j["correlated"] = build_tensor(profile_counts(f), 0, index, [&](std::size_t k) {
      return Json(gt::to_string((*f.correlated)[k]));
    });
  }
  return j.dump(2) + "\n";
}

GameFile make_strategic_file(std::string name, std::string description, StrategicGame game) {
  GameFile f;
  f.kind = GameKind::kStrategic;
  f.name = std::move(name);
  f.description = std::move(description);
  f.strategic = std::move(game);
  return f;
}

GameFile make_evolution_file(std::string name, std::string description,
                             std::vector<std::string> strategy_names,
                             std::vector<std::vector<Rational>> matrix,
                             std::optional<std::vector<Rational>> initial_state) {
  GameFile f;
  f.kind = GameKind::kEvolution;
  f.name = std::move(name);
  f.description = std::move(description);
  f.strategy_names = std::move(strategy_names);
  f.matrix = std::move(matrix);
  f.initial_state = std::move(initial_state);
  return f;
}

GameFile make_congestion_file(std::string name, std::string description, CongestionGame game) {
  GameFile f;
  f.kind = GameKind::kCongestion;
  f.name = std::move(name);
  f.description = std::move(description);
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    f.player_names.push_back("P" + std::to_string(i + 1));
  }
  f.congestion = std::move(game);
  return f;
}

}  // namespace gt::io
