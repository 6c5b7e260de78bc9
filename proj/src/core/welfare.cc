#include "gt/welfare.h"

#include <algorithm>

#include "gt/error.h"
#include "gt/nash.h"

namespace gt {

std::vector<PureProfile> pareto_optimal_profiles(const StrategicGame& game) {
  std::vector<PureProfile> out;
  const std::size_t count = game.num_profiles();
  for (std::size_t k = 0; k < count; ++k) {
    const auto& u = game.payoff_at(k);
    bool dominated = false;
    for (std::size_t other = 0; other < count && !dominated; ++other) {
      const auto& v = game.payoff_at(other);
      bool weakly_better = true;
      bool strictly_better = false;
      for (std::size_t i = 0; i < u.size(); ++i) {
        if (v[i] < u[i]) {
          weakly_better = false;
          break;
        }
        if (v[i] > u[i]) strictly_better = true;
      }
      dominated = weakly_better && strictly_better;
    }
    if (!dominated) out.push_back(game.profile_at(k));
  }
  return out;
}

SocialOptimum social_optimum(const StrategicGame& game) {
  SocialOptimum best{{}, welfare(game.payoff_at(0))};
  for (std::size_t k = 0; k < game.num_profiles(); ++k) {
    const Rational w = welfare(game.payoff_at(k));
    if (w > best.welfare) {
      best.welfare = w;
      best.profiles.clear();
    }
    if (w == best.welfare) best.profiles.push_back(game.profile_at(k));
  }
  return best;
}

PriceOfAnarchy price_of_anarchy(const StrategicGame& game) {
  const auto equilibria = pure_nash(game);
  GT_REQUIRE(!equilibria.empty(), ErrorKind::kNoEquilibrium, "game has no pure Nash equilibrium");
  Rational worst = welfare(payoff(game, equilibria.front()));
  for (const auto& s : equilibria) worst = std::min(worst, welfare(payoff(game, s)));
  GT_REQUIRE(worst > 0, ErrorKind::kUndefinedRatio,
             "worst equilibrium welfare " + to_string(worst) + " is not positive");
  const Rational optimum = social_optimum(game).welfare;
  return {optimum / worst, optimum, worst};
}

CorrelatedCheck is_correlated_equilibrium(const StrategicGame& game, const JointDistribution& d) {
  GT_REQUIRE(d.size() == game.num_profiles(), ErrorKind::kInvalidArgument,
             "joint distribution does not cover every profile");
  Rational total = 0;
  for (const auto& prob : d) {
    GT_REQUIRE(prob >= 0, ErrorKind::kInvalidArgument, "negative joint probability");
    total += prob;
  }
  GT_REQUIRE(total == 1, ErrorKind::kInvalidArgument,
             "joint distribution sums to " + to_string(total));

  CorrelatedCheck check{true, Rational(0)};
  bool first = true;
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    const std::size_t count = game.num_strategies(i);
    for (std::size_t rec = 0; rec < count; ++rec) {
      for (std::size_t dev = 0; dev < count; ++dev) {
        if (dev == rec) continue;
        Rational margin = 0;
        for (std::size_t k = 0; k < game.num_profiles(); ++k) {
          if (d[k] == 0) continue;
          PureProfile s = game.profile_at(k);
          if (s[i] != rec) continue;
          const Rational& followed = game.payoff_at(k)[i];
          s[i] = dev;
          margin += d[k] * (followed - game.payoff_at(game.profile_index(s))[i]);
        }
        if (first || margin < check.worst_margin) {
          check.worst_margin = margin;
          check.player = i;
          check.recommended = rec;
          check.deviation = dev;
          first = false;
        }
      }
    }
  }
  check.holds = check.worst_margin >= 0;
  return check;
}

}  // namespace gt
