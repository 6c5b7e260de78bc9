#include "gt/error.h"
#include "gt/scenario_library.h"
#include "gt/scenarios.h"

namespace gt::io {

std::vector<std::string> scenario_names() {
  return {"bos",  "pd", "matching-pennies", "rps", "congestion-2link", "congestion-3resource",
          "american-values-10"};
}

GameFile builtin_scenario(std::string_view name) {
  if (name == "bos") {
    GameFile f = make_strategic_file(
        "bos", "Battle of the Sexes: Wife prefers Opera, Husband prefers Football",
        scenarios::battle_of_the_sexes());
    // Fair coin over the two coordinated outcomes: a correlated equilibrium.
    f.correlated = JointDistribution{Rational(1, 2), 0, 0, Rational(1, 2)};
    return f;
  }
  if (name == "pd") {
    return make_strategic_file("pd", "Prisoner's Dilemma with T=5, R=3, P=1, S=0",
                               scenarios::prisoners_dilemma());
  }
  if (name == "matching-pennies") {
    return make_strategic_file("matching-pennies", "Matching Pennies (zero-sum)",
                               scenarios::matching_pennies());
  }
  if (name == "rps") {
    return make_evolution_file("rps", "Rock-Paper-Scissors replicator dynamics",
                               {"R", "P", "S"}, scenarios::rock_paper_scissors_matrix(),
                               std::vector<Rational>{Rational(1, 2), Rational(1, 4),
                                                     Rational(1, 4)});
  }
  if (name == "congestion-2link") {
    return make_congestion_file("congestion-2link", "Two players, two parallel links, c(x) = x",
                                scenarios::two_link_congestion());
  }
  if (name == "congestion-3resource") {
    return make_congestion_file(
        "congestion-3resource",
        "Three players; resources a: c(x) = x, b: c(x) = 2x, c: c(x) = 3; choices {a}, {b}, {a,c}",
        scenarios::three_resource_congestion());
  }
  if (name == "american-values-10") {
    std::vector<Rational> start(10, Rational(1, 12));
    start[0] = Rational(1, 4);
    GameFile f = make_evolution_file(
        "american-values-10",
        "Ten core values A1..A10. Synthetic payoffs: 1 on the diagonal, 1/4 off the diagonal, "
        "plus a cyclic perturbation a(i,i+1) = 3/2 and a(i+1,i) = -1/2. Illustrative only.",
        scenarios::american_values_names(), scenarios::american_values_matrix(), start);
    f.illustrative = true;
    return f;
  }
  throw Error(ErrorKind::kInvalidArgument, "unknown scenario '" + std::string(name) + "'");
}

}  // namespace gt::io
