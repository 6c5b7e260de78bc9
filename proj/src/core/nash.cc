#include "gt/nash.h"

#include <algorithm>
#include <map>

#include "gt/error.h"
#include "gt/linear.h"

namespace gt {

namespace {

// Index of the profile obtained by replacing player's strategy in `base`.
std::size_t deviation_index(const StrategicGame& game, PureProfile profile, std::size_t player,
                            std::size_t strategy) {
  profile[player] = strategy;
  return game.profile_index(profile);
}

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k == 0 || k > n) return out;
  std::vector<std::size_t> current(k);
  for (std::size_t i = 0; i < k; ++i) current[i] = i;
  while (true) {
    out.push_back(current);
    std::size_t i = k;
    while (i-- > 0) {
      if (current[i] != i + n - k) break;
      if (i == 0) return out;
    }
    if (current[i] == i + n - k) return out;
    ++current[i];
    for (std::size_t j = i + 1; j < k; ++j) current[j] = current[j - 1] + 1;
  }
}

// Mixed strategy on `support` (size k) that makes the opponent indifferent
// across `their_support`. `gain(mine, theirs)` is the opponent's payoff.
// Returns the solution kind, the strategy (full length) and the common value.
template <typename Gain>
LinearSolution::Kind indifference(std::size_t full_size, const std::vector<std::size_t>& support,
                                  const std::vector<std::size_t>& their_support, Gain gain,
                                  MixedStrategy& strategy, Rational& value) {
  const std::size_t k = support.size();
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  for (std::size_t t : their_support) {
    std::vector<Rational> row(k + 1);
    for (std::size_t c = 0; c < k; ++c) row[c] = gain(support[c], t);
    row[k] = -1;
    a.push_back(std::move(row));
    b.push_back(0);
  }
  std::vector<Rational> normalization(k + 1, Rational(1));
  normalization[k] = 0;
  a.push_back(std::move(normalization));
  b.push_back(1);
  const LinearSolution solution = solve_exact(std::move(a), std::move(b));
  if (solution.kind == LinearSolution::Kind::kUnique) {
    strategy.assign(full_size, Rational(0));
    for (std::size_t c = 0; c < k; ++c) strategy[support[c]] = solution.x[c];
    value = solution.x[k];
  }
  return solution.kind;
}

}  // namespace

std::vector<std::size_t> best_responses(const StrategicGame& game, std::size_t player,
                                        const std::vector<MixedStrategy>& opponents) {
  GT_REQUIRE(player < game.num_players(), ErrorKind::kInvalidArgument, "no such player");
  GT_REQUIRE(opponents.size() + 1 == game.num_players(), ErrorKind::kInvalidProfile,
             "expected one mixed strategy per opponent");
  MixedProfile sigma;
  for (std::size_t i = 0, o = 0; i < game.num_players(); ++i) {
    if (i == player) {
      MixedStrategy own(game.num_strategies(i), Rational(0));
      own[0] = 1;
      sigma.push_back(std::move(own));
    } else {
      sigma.push_back(opponents[o++]);
    }
  }
  validate_mixed(game, sigma);
  const auto values = pure_strategy_values(game, player, sigma);
  const Rational best = *std::max_element(values.begin(), values.end());
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < values.size(); ++s) {
    if (values[s] == best) out.push_back(s);
  }
  return out;
}

std::vector<PureProfile> pure_nash(const StrategicGame& game) {
  std::vector<PureProfile> out;
  for (std::size_t k = 0; k < game.num_profiles(); ++k) {
    const PureProfile s = game.profile_at(k);
    bool stable = true;
    for (std::size_t i = 0; i < game.num_players() && stable; ++i) {
      const Rational& current = game.payoff_at(k)[i];
      for (std::size_t alt = 0; alt < game.num_strategies(i); ++alt) {
        if (alt == s[i]) continue;
        if (game.payoff_at(deviation_index(game, s, i, alt))[i] > current) {
          stable = false;
          break;
        }
      }
    }
    if (stable) out.push_back(s);
  }
  return out;
}

EliminationResult iterated_elimination(const StrategicGame& game) {
  const std::size_t n = game.num_players();
  std::vector<std::vector<std::size_t>> kept(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t s = 0; s < game.num_strategies(i); ++s) kept[i].push_back(s);
  }
  std::vector<EliminationStep> trace;
  for (std::size_t round = 1;; ++round) {
    const StrategicGame current = game.restricted(kept);
    const auto profiles = all_profiles(current);
    std::vector<EliminationStep> removed;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t count = current.num_strategies(i);
      for (std::size_t a = 0; a < count; ++a) {
        for (std::size_t b = 0; b < count; ++b) {
          if (a == b) continue;
          bool dominates = true;
          for (const auto& s : profiles) {
            if (s[i] != a) continue;
            const auto& ua = current.payoff_at(current.profile_index(s))[i];
            const auto& ub = current.payoff_at(deviation_index(current, s, i, b))[i];
            if (!(ub > ua)) {
              dominates = false;
              break;
            }
          }
          if (dominates) {
            removed.push_back({round, i, kept[i][a], kept[i][b]});
            break;
          }
        }
      }
    }
    if (removed.empty()) return {current, kept, trace};
    for (const auto& step : removed) {
      auto& list = kept[step.player];
      list.erase(std::find(list.begin(), list.end(), step.strategy));
      trace.push_back(step);
    }
  }
}

void sort_equilibria(std::vector<Equilibrium>& equilibria) {
  std::sort(equilibria.begin(), equilibria.end(),
            [](const Equilibrium& a, const Equilibrium& b) { return a.profile < b.profile; });
}

std::vector<Equilibrium> mixed_ne_2x2(const StrategicGame& game) {
  GT_REQUIRE(game.is_two_by_two(), ErrorKind::kUnsupportedShape,
             "mixed_ne_2x2 needs two players with two strategies each");
  std::vector<Equilibrium> out;
  for (const auto& s : pure_nash(game)) {
    out.push_back({degenerate_profile(game, s), payoff(game, s)});
  }
  auto a = [&](std::size_t i, std::size_t j) { return payoff(game, {i, j})[0]; };
  auto b = [&](std::size_t i, std::size_t j) { return payoff(game, {i, j})[1]; };
  const Rational row_den = b(0, 0) - b(1, 0) - b(0, 1) + b(1, 1);
  const Rational col_den = a(0, 0) - a(0, 1) - a(1, 0) + a(1, 1);
  if (row_den != 0 && col_den != 0) {
    const Rational x = (b(1, 1) - b(1, 0)) / row_den;
    const Rational y = (a(1, 1) - a(0, 1)) / col_den;
    if (x > 0 && x < 1 && y > 0 && y < 1) {
      MixedProfile sigma{{x, 1 - x}, {y, 1 - y}};
      PayoffVector value = expected_payoff(game, sigma);
      out.push_back({std::move(sigma), std::move(value)});
    }
  }
  sort_equilibria(out);
  return out;
}

SupportEnumerationResult support_enumeration(const StrategicGame& game,
                                             std::size_t max_support) {
  GT_REQUIRE(game.num_players() == 2, ErrorKind::kUnsupportedShape,
             "support enumeration needs exactly two players");
  const std::size_t m = game.num_strategies(0);
  const std::size_t n = game.num_strategies(1);
  GT_REQUIRE(m <= kSupportEnumerationMaxStrategies && n <= kSupportEnumerationMaxStrategies,
             ErrorKind::kSizeLimit,
             "support enumeration is limited to " +
                 std::to_string(kSupportEnumerationMaxStrategies) + " strategies per player");
  auto a = [&](std::size_t i, std::size_t j) -> const Rational& {
    return game.payoff_at(i * n + j)[0];
  };
  auto b = [&](std::size_t i, std::size_t j) -> const Rational& {
    return game.payoff_at(i * n + j)[1];
  };

  SupportEnumerationResult result;
  const std::size_t top = std::min({max_support, m, n});
  for (std::size_t k = 1; k <= top; ++k) {
    const auto row_supports = subsets_of_size(m, k);
    const auto col_supports = subsets_of_size(n, k);
    for (const auto& rows : row_supports) {
      for (const auto& cols : col_supports) {
        MixedStrategy x, y;
        Rational v, w;
        // y makes the row player indifferent over `rows`.
        const auto ky = indifference(
            n, cols, rows, [&](std::size_t j, std::size_t i) { return a(i, j); }, y, v);
        const auto kx = indifference(
            m, rows, cols, [&](std::size_t i, std::size_t j) { return b(i, j); }, x, w);
        if (ky == LinearSolution::Kind::kNone || kx == LinearSolution::Kind::kNone) continue;
        if (ky == LinearSolution::Kind::kContinuum || kx == LinearSolution::Kind::kContinuum) {
          result.degenerate_supports.push_back({rows, cols});
          continue;
        }
        const bool positive =
            std::all_of(rows.begin(), rows.end(), [&](std::size_t i) { return x[i] > 0; }) &&
            std::all_of(cols.begin(), cols.end(), [&](std::size_t j) { return y[j] > 0; });
        if (!positive) continue;
        bool stable = true;
        for (std::size_t i = 0; i < m && stable; ++i) {
          Rational value = 0;
          for (std::size_t j = 0; j < n; ++j) value += a(i, j) * y[j];
          stable = value <= v;
        }
        for (std::size_t j = 0; j < n && stable; ++j) {
          Rational value = 0;
          for (std::size_t i = 0; i < m; ++i) value += b(i, j) * x[i];
          stable = value <= w;
        }
        if (stable) result.equilibria.push_back({{x, y}, {v, w}});
      }
    }
  }
  sort_equilibria(result.equilibria);
  return result;
}

Rational max_deviation_gain(const StrategicGame& game, const MixedProfile& sigma) {
  validate_mixed(game, sigma);
  Rational worst = 0;
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    const auto values = pure_strategy_values(game, i, sigma);
    Rational current = 0;
    for (std::size_t s = 0; s < values.size(); ++s) current += sigma[i][s] * values[s];
    const Rational gain = *std::max_element(values.begin(), values.end()) - current;
    worst = std::max(worst, gain);
  }
  return worst;
}

bool is_epsilon_nash(const StrategicGame& game, const MixedProfile& sigma,
                     const Rational& epsilon) {
  GT_REQUIRE(epsilon >= 0, ErrorKind::kInvalidArgument, "epsilon must be non-negative");
  return max_deviation_gain(game, sigma) <= epsilon;
}

bool check_potential(const StrategicGame& game, const std::vector<Rational>& potential) {
  GT_REQUIRE(potential.size() == game.num_profiles(), ErrorKind::kInvalidArgument,
             "potential defined on " + std::to_string(potential.size()) + " of " +
                 std::to_string(game.num_profiles()) + " profiles");
  for (std::size_t k = 0; k < game.num_profiles(); ++k) {
    const PureProfile s = game.profile_at(k);
    for (std::size_t i = 0; i < game.num_players(); ++i) {
      for (std::size_t alt = 0; alt < game.num_strategies(i); ++alt) {
        if (alt == s[i]) continue;
        const std::size_t k2 = deviation_index(game, s, i, alt);
        if (potential[k] - potential[k2] != game.payoff_at(k)[i] - game.payoff_at(k2)[i]) {
          return false;
        }
      }
    }
  }
  return true;
}

DynamicsResult best_response_dynamics(const StrategicGame& game, const PureProfile& start,
                                      std::size_t max_steps) {
  game.validate(start);
  DynamicsResult result{DynamicsResult::Outcome::kConverged, start, {start}, {}};
  std::map<PureProfile, std::size_t> seen{{start, 0}};
  PureProfile current = start;
  while (true) {
    const std::size_t k = game.profile_index(current);
    bool moved = false;
    for (std::size_t i = 0; i < game.num_players() && !moved; ++i) {
      std::size_t best = current[i];
      Rational best_value = game.payoff_at(k)[i];
      for (std::size_t alt = 0; alt < game.num_strategies(i); ++alt) {
        const Rational& value = game.payoff_at(deviation_index(game, current, i, alt))[i];
        if (value > best_value) {
          best_value = value;
          best = alt;
        }
      }
      if (best == current[i]) continue;
      if (result.steps() == max_steps) {
        throw Error(ErrorKind::kStepLimit,
                    "no fixed point after " + std::to_string(max_steps) + " steps");
      }
      current[i] = best;
      moved = true;
    }
    if (!moved) {
      result.final_profile = current;
      return result;
    }
    result.trace.push_back(current);
    if (auto it = seen.find(current); it != seen.end()) {
      result.outcome = DynamicsResult::Outcome::kCycle;
      result.cycle.assign(result.trace.begin() + static_cast<std::ptrdiff_t>(it->second),
                          result.trace.end() - 1);
      result.final_profile = current;
      return result;
    }
    seen.emplace(current, result.trace.size() - 1);
  }
}

}  // namespace gt
