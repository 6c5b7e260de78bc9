#ifndef GT_GAME_H_
#define GT_GAME_H_

#include <cstddef>
#include <string>
#include <vector>

#include "gt/rational.h"

namespace gt {

// One strategy index per player.
using PureProfile = std::vector<std::size_t>;
using PayoffVector = std::vector<Rational>;
using MixedStrategy = std::vector<Rational>;
using MixedProfile = std::vector<MixedStrategy>;
// Probability per pure profile, indexed like StrategicGame::profile_index.
using JointDistribution = std::vector<Rational>;

// Finite normal-form game with exact rational payoffs. Profiles are stored
// row-major: player 0's strategy is the most significant digit.
class StrategicGame {
 public:
  // `payoffs[k]` is the payoff vector of profile_at(k).
  StrategicGame(std::vector<std::vector<std::string>> strategy_names,
                std::vector<PayoffVector> payoffs,
                std::vector<std::string> player_names = {});

  // Two-player game from row/column payoff matrices.
  static StrategicGame bimatrix(std::vector<std::string> row_strategies,
                                std::vector<std::string> col_strategies,
                                const std::vector<std::vector<Rational>>& row_payoffs,
                                const std::vector<std::vector<Rational>>& col_payoffs,
                                std::vector<std::string> player_names = {});

  std::size_t num_players() const { return strategy_names_.size(); }
  std::size_t num_strategies(std::size_t player) const {
    return strategy_names_.at(player).size();
  }
  std::size_t num_profiles() const { return payoffs_.size(); }

  const std::vector<std::string>& player_names() const { return player_names_; }
  const std::vector<std::string>& strategy_names(std::size_t player) const {
    return strategy_names_.at(player);
  }
  const std::vector<std::vector<std::string>>& all_strategy_names() const {
    return strategy_names_;
  }

  // Throws kInvalidProfile on a wrong length or out-of-range index.
  void validate(const PureProfile& profile) const;
  std::size_t profile_index(const PureProfile& profile) const;
  PureProfile profile_at(std::size_t index) const;
  const PayoffVector& payoff_at(std::size_t index) const { return payoffs_.at(index); }
  const std::vector<PayoffVector>& payoff_table() const { return payoffs_; }

  // Sub-game keeping the listed (original) strategy indices of every player.
  StrategicGame restricted(const std::vector<std::vector<std::size_t>>& kept) const;

  // u_player <- scale * u_player + shift; scale must be positive.
  StrategicGame with_affine_payoff(std::size_t player, const Rational& scale,
                                   const Rational& shift) const;

  bool is_two_by_two() const {
    return num_players() == 2 && num_strategies(0) == 2 && num_strategies(1) == 2;
  }

  // "(O,F)" style label.
  std::string profile_label(const PureProfile& profile) const;

  bool operator==(const StrategicGame& other) const = default;

 private:
  std::vector<std::string> player_names_;
  std::vector<std::vector<std::string>> strategy_names_;
  std::vector<PayoffVector> payoffs_;
  std::vector<std::size_t> strides_;
};

std::vector<PureProfile> all_profiles(const StrategicGame& game);

PayoffVector payoff(const StrategicGame& game, const PureProfile& profile);

// Throws kInvalidProfile unless every strategy is a distribution of the
// right length.
void validate_mixed(const StrategicGame& game, const MixedProfile& sigma);

// Exact expected payoff under independent mixing.
PayoffVector expected_payoff(const StrategicGame& game, const MixedProfile& sigma);

// Point mass on `profile`.
MixedProfile degenerate_profile(const StrategicGame& game, const PureProfile& profile);

// Joint distribution induced by independent mixing.
JointDistribution product_distribution(const StrategicGame& game, const MixedProfile& sigma);

// Expected payoff of each pure strategy of `player` while the others play
// `sigma` (the player's own entry of sigma is ignored).
std::vector<Rational> pure_strategy_values(const StrategicGame& game, std::size_t player,
                                           const MixedProfile& sigma);

Rational welfare(const PayoffVector& payoffs);

}  // namespace gt

#endif  // GT_GAME_H_
