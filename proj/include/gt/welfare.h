#ifndef GT_WELFARE_H_
#define GT_WELFARE_H_

#include <cstddef>
#include <string>
#include <vector>

#include "gt/game.h"

namespace gt {

// Profiles not Pareto-dominated by any other pure profile.
std::vector<PureProfile> pareto_optimal_profiles(const StrategicGame& game);

struct SocialOptimum {
  std::vector<PureProfile> profiles;
  Rational welfare;
};

SocialOptimum social_optimum(const StrategicGame& game);

struct PriceOfAnarchy {
  Rational ratio;
  Rational optimal_welfare;
  Rational worst_equilibrium_welfare;
  // The equilibrium set is restricted to pure Nash equilibria.
  std::string equilibrium_scope = "pure-nash";
};

// Throws kNoEquilibrium without a pure equilibrium and kUndefinedRatio when
// the worst equilibrium welfare is not positive.
PriceOfAnarchy price_of_anarchy(const StrategicGame& game);

struct CorrelatedCheck {
  bool holds;
  // Most negative value of  sum_{s_-i} d(s_i,s_-i) [u_i(s_i,s_-i) - u_i(s'_i,s_-i)]
  // over all (player, recommended, deviation) triples; >= 0 iff holds.
  Rational worst_margin;
  std::size_t player = 0;
  std::size_t recommended = 0;
  std::size_t deviation = 0;
};

// Throws kInvalidArgument if `d` is not a distribution over the profiles.
CorrelatedCheck is_correlated_equilibrium(const StrategicGame& game, const JointDistribution& d);

}  // namespace gt

#endif  // GT_WELFARE_H_
