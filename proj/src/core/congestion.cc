#include "gt/congestion.h"

#include "gt/error.h"

namespace gt {

CongestionGame::CongestionGame(std::vector<Resource> resources,
                               std::vector<std::vector<std::vector<std::size_t>>> strategies,
                               std::vector<std::vector<std::string>> strategy_names)
    : resources_(std::move(resources)),
      strategies_(std::move(strategies)),
      names_(std::move(strategy_names)) {
  const std::size_t n = strategies_.size();
  GT_REQUIRE(n >= 1, ErrorKind::kInvalidArgument, "congestion game needs players");
  for (const auto& r : resources_) {
    GT_REQUIRE(r.costs.size() >= n, ErrorKind::kInvalidArgument,
               "resource '" + r.name + "' needs a cost for every count 1.." + std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    GT_REQUIRE(!strategies_[i].empty(), ErrorKind::kInvalidArgument, "player without strategies");
    for (const auto& strategy : strategies_[i]) {
      GT_REQUIRE(!strategy.empty(), ErrorKind::kInvalidArgument, "empty resource subset");
      for (std::size_t r : strategy) {
        GT_REQUIRE(r < resources_.size(), ErrorKind::kInvalidArgument, "unknown resource");
      }
    }
  }
  if (names_.empty()) {
    names_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& strategy : strategies_[i]) {
        std::string label;
        for (std::size_t r : strategy) label += (label.empty() ? "" : "+") + resources_[r].name;
        names_[i].push_back(label);
      }
    }
  }
  GT_REQUIRE(names_.size() == n, ErrorKind::kInvalidArgument, "strategy name lists mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    GT_REQUIRE(names_[i].size() == strategies_[i].size(), ErrorKind::kInvalidArgument,
               "strategy name lists mismatch");
  }
}

void CongestionGame::validate(const PureProfile& profile) const {
  GT_REQUIRE(profile.size() == strategies_.size(), ErrorKind::kInvalidProfile,
             "profile length does not match player count");
  for (std::size_t i = 0; i < profile.size(); ++i) {
    GT_REQUIRE(profile[i] < strategies_[i].size(), ErrorKind::kInvalidProfile,
               "strategy out of range");
  }
}

std::vector<std::size_t> CongestionGame::usage(const PureProfile& profile) const {
  validate(profile);
  std::vector<std::size_t> count(resources_.size(), 0);
  for (std::size_t i = 0; i < profile.size(); ++i) {
    for (std::size_t r : strategies_[i][profile[i]]) ++count[r];
  }
  return count;
}

Rational CongestionGame::cost(const PureProfile& profile, std::size_t player) const {
  const auto count = usage(profile);
  Rational total = 0;
  for (std::size_t r : strategies_.at(player)[profile[player]]) {
    total += resources_[r].costs[count[r] - 1];
  }
  return total;
}

Rational rosenthal_potential(const CongestionGame& game, const PureProfile& profile) {
  const auto count = game.usage(profile);
  Rational phi = 0;
  for (std::size_t r = 0; r < count.size(); ++r) {
    for (std::size_t k = 1; k <= count[r]; ++k) phi += game.resources()[r].costs[k - 1];
  }
  return phi;
}

StrategicGame to_strategic_game(const CongestionGame& game) {
  // Build an index shell first to reuse its profile ordering.
  std::vector<PayoffVector> zeros;
  std::size_t profiles = 1;
  for (const auto& s : game.strategies()) profiles *= s.size();
  zeros.assign(profiles, PayoffVector(game.num_players(), Rational(0)));
  const StrategicGame shell(game.strategy_names(), zeros);
  std::vector<PayoffVector> table(profiles);
  for (std::size_t k = 0; k < profiles; ++k) {
    const PureProfile s = shell.profile_at(k);
    for (std::size_t i = 0; i < game.num_players(); ++i) table[k].push_back(-game.cost(s, i));
  }
  return StrategicGame(game.strategy_names(), std::move(table));
}

std::vector<Rational> potential_table(const CongestionGame& game) {
  const StrategicGame strategic = to_strategic_game(game);
  std::vector<Rational> phi;
  phi.reserve(strategic.num_profiles());
  for (std::size_t k = 0; k < strategic.num_profiles(); ++k) {
    phi.push_back(-rosenthal_potential(game, strategic.profile_at(k)));
  }
  return phi;
}

}  // namespace gt
