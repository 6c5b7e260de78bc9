#ifndef GT_GAME_FILE_H_
#define GT_GAME_FILE_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gt/congestion.h"
#include "gt/game.h"

namespace gt::io {

inline constexpr std::string_view kFormat = "gt-game/1";

enum class GameKind { kStrategic, kEvolution, kCongestion };

// A game file: one of a strategic game, a symmetric evolution matrix or a
// congestion game, plus optional metadata.
struct GameFile {
  GameKind kind = GameKind::kStrategic;
  std::string name;
  std::string description;
  bool illustrative = false;

  std::optional<StrategicGame> strategic;

  std::vector<std::string> strategy_names;  // evolution
  std::vector<std::vector<Rational>> matrix;
  std::optional<std::vector<Rational>> initial_state;

  std::optional<CongestionGame> congestion;
  std::vector<std::string> player_names;  // congestion

  // Joint distribution to test as a correlated equilibrium (strategic and
  // congestion kinds), indexed by profile.
  std::optional<JointDistribution> correlated;

  // The strategic form analyzed by `gt analyze`.
  StrategicGame as_strategic() const;

  bool operator==(const GameFile&) const = default;
};

std::string to_string(GameKind kind);

// Throws kParseError: syntax errors carry "line L, column C", schema errors
// the JSON path of the offending value.
GameFile parse_game_file(std::string_view text);
GameFile read_game_file(const std::filesystem::path& path);

// Canonical text: fixed key order, two-space indent, trailing newline.
std::string serialize_game_file(const GameFile& file);

GameFile make_strategic_file(std::string name, std::string description, StrategicGame game);
GameFile make_evolution_file(std::string name, std::string description,
                             std::vector<std::string> strategy_names,
                             std::vector<std::vector<Rational>> matrix,
                             std::optional<std::vector<Rational>> initial_state = std::nullopt);
GameFile make_congestion_file(std::string name, std::string description, CongestionGame game);

}  // namespace gt::io

#endif  // GT_GAME_FILE_H_
