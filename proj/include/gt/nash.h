#ifndef GT_NASH_H_
#define GT_NASH_H_

#include <cstddef>
#include <vector>

#include "gt/game.h"

namespace gt {

// Argmax of player's expected payoff against `opponents`, which holds one
// mixed strategy per other player in player order. All ties are returned.
std::vector<std::size_t> best_responses(const StrategicGame& game, std::size_t player,
                                        const std::vector<MixedStrategy>& opponents);

// Profiles where no unilateral pure deviation is profitable (weak inequality).
std::vector<PureProfile> pure_nash(const StrategicGame& game);

struct EliminationStep {
  std::size_t round;
  std::size_t player;
  std::size_t strategy;       // index in the original game
  std::size_t dominated_by;   // index in the original game
};

struct EliminationResult {
  StrategicGame reduced;
  // Surviving original strategy indices per player.
  std::vector<std::vector<std::size_t>> kept;
  std::vector<EliminationStep> trace;
};

// Removes strictly dominated pure strategies (pure dominators only) until no
// more can be removed. Each round removes every strategy dominated at the
// start of that round.
EliminationResult iterated_elimination(const StrategicGame& game);

struct Equilibrium {
  MixedProfile profile;
  PayoffVector payoffs;

  bool operator==(const Equilibrium&) const = default;
};

// Canonical (lexicographic) order of equilibria, used by every solver.
void sort_equilibria(std::vector<Equilibrium>& equilibria);

// Pure equilibria plus the interior indifference solution of a 2x2 game when
// it lies strictly inside (0,1)^2. Throws kUnsupportedShape otherwise.
std::vector<Equilibrium> mixed_ne_2x2(const StrategicGame& game);

struct SupportPair {
  std::vector<std::size_t> row;
  std::vector<std::size_t> col;
};

struct SupportEnumerationResult {
  std::vector<Equilibrium> equilibria;
  // Support pairs whose indifference system has a continuum of solutions.
  // Non-empty means the game is degenerate and the list may be incomplete.
  std::vector<SupportPair> degenerate_supports;

  bool degenerate() const { return !degenerate_supports.empty(); }
};

inline constexpr std::size_t kSupportEnumerationMaxStrategies = 5;

// Equal-size support enumeration for bimatrix games, exact arithmetic.
// Throws kUnsupportedShape for other than two players and kSizeLimit when a
// player has more than kSupportEnumerationMaxStrategies strategies.
SupportEnumerationResult support_enumeration(const StrategicGame& game,
                                             std::size_t max_support);

// Largest gain any player gets from a unilateral pure deviation (>= 0).
Rational max_deviation_gain(const StrategicGame& game, const MixedProfile& sigma);

bool is_epsilon_nash(const StrategicGame& game, const MixedProfile& sigma,
                     const Rational& epsilon);

// potential[k] is the value at profile_at(k). Throws kInvalidArgument when the
// table does not cover every profile.
bool check_potential(const StrategicGame& game, const std::vector<Rational>& potential);

struct DynamicsResult {
  enum class Outcome { kConverged, kCycle };
  Outcome outcome;
  PureProfile final_profile;
  // Visited profiles, start first. For kConverged the last entry is the
  // fixed point.
  std::vector<PureProfile> trace;
  // For kCycle: the repeated profiles in visiting order.
  std::vector<PureProfile> cycle;

  std::size_t steps() const { return trace.empty() ? 0 : trace.size() - 1; }
};

// Sequential best-response dynamics: the lowest-index player with a strict
// improvement switches to its lowest-index best response. Throws kStepLimit
// when neither a fixed point nor a repeat occurs within max_steps moves.
DynamicsResult best_response_dynamics(const StrategicGame& game, const PureProfile& start,
                                      std::size_t max_steps);

}  // namespace gt

#endif  // GT_NASH_H_
