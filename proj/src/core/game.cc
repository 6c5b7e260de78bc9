#include "gt/game.h"

#include <numeric>

#include "gt/error.h"

namespace gt {

StrategicGame::StrategicGame(std::vector<std::vector<std::string>> strategy_names,
                             std::vector<PayoffVector> payoffs,
                             std::vector<std::string> player_names)
    : player_names_(std::move(player_names)),
      strategy_names_(std::move(strategy_names)),
      payoffs_(std::move(payoffs)) {
  const std::size_t n = strategy_names_.size();
  GT_REQUIRE(n >= 1, ErrorKind::kInvalidArgument, "a game needs at least one player");
  if (player_names_.empty()) {
    for (std::size_t i = 0; i < n; ++i) player_names_.push_back("P" + std::to_string(i + 1));
  }
  GT_REQUIRE(player_names_.size() == n, ErrorKind::kInvalidArgument,
             "player name count does not match strategy lists");
  std::size_t profiles = 1;
  strides_.assign(n, 1);
  for (std::size_t i = n; i-- > 0;) {
    GT_REQUIRE(!strategy_names_[i].empty(), ErrorKind::kInvalidArgument,
               "player " + std::to_string(i) + " has no strategies");
    strides_[i] = profiles;
    profiles *= strategy_names_[i].size();
  }
  GT_REQUIRE(payoffs_.size() == profiles, ErrorKind::kInvalidArgument,
             "payoff table has " + std::to_string(payoffs_.size()) + " entries, expected " +
                 std::to_string(profiles));
  for (const auto& entry : payoffs_) {
    GT_REQUIRE(entry.size() == n, ErrorKind::kInvalidArgument,
               "payoff vector length does not match player count");
  }
}

StrategicGame StrategicGame::bimatrix(std::vector<std::string> row_strategies,
                                      std::vector<std::string> col_strategies,
                                      const std::vector<std::vector<Rational>>& row_payoffs,
                                      const std::vector<std::vector<Rational>>& col_payoffs,
                                      std::vector<std::string> player_names) {
  const std::size_t m = row_strategies.size();
  const std::size_t n = col_strategies.size();
  GT_REQUIRE(row_payoffs.size() == m && col_payoffs.size() == m, ErrorKind::kInvalidArgument,
             "bimatrix row count mismatch");
  std::vector<PayoffVector> table;
  table.reserve(m * n);
  for (std::size_t i = 0; i < m; ++i) {
    GT_REQUIRE(row_payoffs[i].size() == n && col_payoffs[i].size() == n,
               ErrorKind::kInvalidArgument, "bimatrix column count mismatch");
    for (std::size_t j = 0; j < n; ++j) table.push_back({row_payoffs[i][j], col_payoffs[i][j]});
  }
  return StrategicGame({std::move(row_strategies), std::move(col_strategies)}, std::move(table),
                       std::move(player_names));
}

void StrategicGame::validate(const PureProfile& profile) const {
  GT_REQUIRE(profile.size() == num_players(), ErrorKind::kInvalidProfile,
             "profile has " + std::to_string(profile.size()) + " entries for " +
                 std::to_string(num_players()) + " players");
  for (std::size_t i = 0; i < profile.size(); ++i) {
    GT_REQUIRE(profile[i] < num_strategies(i), ErrorKind::kInvalidProfile,
               "strategy " + std::to_string(profile[i]) + " out of range for player " +
                   std::to_string(i));
  }
}

std::size_t StrategicGame::profile_index(const PureProfile& profile) const {
  validate(profile);
  std::size_t index = 0;
  for (std::size_t i = 0; i < profile.size(); ++i) index += profile[i] * strides_[i];
  return index;
}

PureProfile StrategicGame::profile_at(std::size_t index) const {
  GT_REQUIRE(index < num_profiles(), ErrorKind::kInvalidProfile, "profile index out of range");
  PureProfile profile(num_players());
  for (std::size_t i = 0; i < num_players(); ++i) {
    profile[i] = (index / strides_[i]) % num_strategies(i);
  }
  return profile;
}

StrategicGame StrategicGame::restricted(const std::vector<std::vector<std::size_t>>& kept) const {
  GT_REQUIRE(kept.size() == num_players(), ErrorKind::kInvalidArgument,
             "restriction needs one list per player");
  std::vector<std::vector<std::string>> names(num_players());
  for (std::size_t i = 0; i < num_players(); ++i) {
    GT_REQUIRE(!kept[i].empty(), ErrorKind::kInvalidArgument, "restriction removes a player");
    for (std::size_t s : kept[i]) {
      GT_REQUIRE(s < num_strategies(i), ErrorKind::kInvalidArgument, "restriction out of range");
      names[i].push_back(strategy_names_[i][s]);
    }
  }
  std::size_t count = 1;
  for (const auto& k : kept) count *= k.size();
  std::vector<PayoffVector> table;
  table.reserve(count);
  PureProfile local(num_players(), 0);
  PureProfile original(num_players());
  for (std::size_t k = 0; k < count; ++k) {
    for (std::size_t i = 0; i < num_players(); ++i) original[i] = kept[i][local[i]];
    table.push_back(payoffs_[profile_index(original)]);
    for (std::size_t i = num_players(); i-- > 0;) {
      if (++local[i] < kept[i].size()) break;
      local[i] = 0;
    }
  }
  return StrategicGame(std::move(names), std::move(table), player_names_);
}

StrategicGame StrategicGame::with_affine_payoff(std::size_t player, const Rational& scale,
                                                const Rational& shift) const {
  GT_REQUIRE(player < num_players(), ErrorKind::kInvalidArgument, "no such player");
  GT_REQUIRE(scale > 0, ErrorKind::kInvalidArgument, "affine scale must be positive");
  auto table = payoffs_;
  for (auto& entry : table) entry[player] = scale * entry[player] + shift;
  return StrategicGame(strategy_names_, std::move(table), player_names_);
}

std::string StrategicGame::profile_label(const PureProfile& profile) const {
  validate(profile);
  std::string label = "(";
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (i > 0) label += ",";
    label += strategy_names_[i][profile[i]];
  }
  return label + ")";
}

std::vector<PureProfile> all_profiles(const StrategicGame& game) {
  std::vector<PureProfile> out;
  out.reserve(game.num_profiles());
  for (std::size_t k = 0; k < game.num_profiles(); ++k) out.push_back(game.profile_at(k));
  return out;
}

PayoffVector payoff(const StrategicGame& game, const PureProfile& profile) {
  return game.payoff_at(game.profile_index(profile));
}

void validate_mixed(const StrategicGame& game, const MixedProfile& sigma) {
  GT_REQUIRE(sigma.size() == game.num_players(), ErrorKind::kInvalidProfile,
             "mixed profile has wrong player count");
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    GT_REQUIRE(sigma[i].size() == game.num_strategies(i), ErrorKind::kInvalidProfile,
               "mixed strategy of player " + std::to_string(i) + " has wrong length");
    Rational total = 0;
    for (const auto& prob : sigma[i]) {
      GT_REQUIRE(prob >= 0, ErrorKind::kInvalidProfile, "negative probability");
      total += prob;
    }
    GT_REQUIRE(total == 1, ErrorKind::kInvalidProfile,
               "mixed strategy of player " + std::to_string(i) + " sums to " + to_string(total));
  }
}

JointDistribution product_distribution(const StrategicGame& game, const MixedProfile& sigma) {
  validate_mixed(game, sigma);
  JointDistribution d(game.num_profiles());
  for (std::size_t k = 0; k < game.num_profiles(); ++k) {
    const PureProfile s = game.profile_at(k);
    Rational prob = 1;
    for (std::size_t i = 0; i < s.size() && prob != 0; ++i) prob *= sigma[i][s[i]];
    d[k] = prob;
  }
  return d;
}

PayoffVector expected_payoff(const StrategicGame& game, const MixedProfile& sigma) {
  const JointDistribution d = product_distribution(game, sigma);
  PayoffVector out(game.num_players(), Rational(0));
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (d[k] == 0) continue;
    const auto& u = game.payoff_at(k);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += d[k] * u[i];
  }
  return out;
}

MixedProfile degenerate_profile(const StrategicGame& game, const PureProfile& profile) {
  game.validate(profile);
  MixedProfile sigma(game.num_players());
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    sigma[i].assign(game.num_strategies(i), Rational(0));
    sigma[i][profile[i]] = 1;
  }
  return sigma;
}

std::vector<Rational> pure_strategy_values(const StrategicGame& game, std::size_t player,
                                           const MixedProfile& sigma) {
  GT_REQUIRE(player < game.num_players(), ErrorKind::kInvalidArgument, "no such player");
  GT_REQUIRE(sigma.size() == game.num_players(), ErrorKind::kInvalidProfile,
             "mixed profile has wrong player count");
  std::vector<Rational> values(game.num_strategies(player), Rational(0));
  for (std::size_t k = 0; k < game.num_profiles(); ++k) {
    const PureProfile s = game.profile_at(k);
    Rational prob = 1;
    for (std::size_t j = 0; j < s.size() && prob != 0; ++j) {
      if (j != player) prob *= sigma[j].at(s[j]);
    }
    if (prob != 0) values[s[player]] += prob * game.payoff_at(k)[player];
  }
  return values;
}

Rational welfare(const PayoffVector& payoffs) {
  return std::accumulate(payoffs.begin(), payoffs.end(), Rational(0));
}

}  // namespace gt
