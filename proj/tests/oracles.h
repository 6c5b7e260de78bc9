// Independent brute-force checks used by the unit and acceptance tests.
#ifndef GT_TESTS_ORACLES_H_
#define GT_TESTS_ORACLES_H_

#include <cstdint>
#include <random>
#include <vector>

#include "gt/game.h"

namespace gt::testing {

inline Rational random_rational(std::mt19937_64& rng, int range = 6, int max_den = 3) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> den(1, max_den);
  return Rational(num(rng), den(rng));
}

// n-player game with the given strategy counts and small random payoffs.
inline StrategicGame random_game(std::mt19937_64& rng, const std::vector<std::size_t>& counts,
                                 int range = 6) {
  std::vector<std::vector<std::string>> names;
  std::size_t profiles = 1;
  for (std::size_t c : counts) {
    std::vector<std::string> list;
    for (std::size_t s = 0; s < c; ++s) list.push_back("s" + std::to_string(s));
    names.push_back(list);
    profiles *= c;
  }
  std::vector<PayoffVector> table(profiles);
  for (auto& entry : table) {
    for (std::size_t i = 0; i < counts.size(); ++i) entry.push_back(random_rational(rng, range, 1));
  }
  return StrategicGame(names, table);
}

// Enumerates every profile through nested odometer counting and checks the
// weak Nash inequality by recomputing each deviation's payoff via payoff().
inline bool brute_force_is_pure_nash(const StrategicGame& game, const PureProfile& s) {
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    const Rational current = payoff(game, s)[i];
    for (std::size_t alt = 0; alt < game.num_strategies(i); ++alt) {
      PureProfile dev = s;
      dev[i] = alt;
      if (payoff(game, dev)[i] > current) return false;
    }
  }
  return true;
}

inline std::vector<PureProfile> brute_force_pure_nash(const StrategicGame& game) {
  std::vector<PureProfile> out;
  PureProfile s(game.num_players(), 0);
  while (true) {
    if (brute_force_is_pure_nash(game, s)) out.push_back(s);
    std::size_t i = game.num_players();
    while (i-- > 0) {
      if (++s[i] < game.num_strategies(i)) break;
      s[i] = 0;
      if (i == 0) return out;
    }
  }
}

}  // namespace gt::testing

#endif  // GT_TESTS_ORACLES_H_
