#include <algorithm>
#include <random>

#include "doctest.h"
#include "gt/bargaining.h"
#include "gt/congestion.h"
#include "gt/error.h"
#include "gt/nash.h"
#include "gt/scenarios.h"
#include "gt/welfare.h"
#include "oracles.h"

using gt::MixedProfile;
using gt::PureProfile;
using gt::Rational;
namespace sc = gt::scenarios;

namespace {

constexpr std::size_t O = 0, F = 1;
constexpr std::size_t C = 0, D = 1;

gt::ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const gt::Error& e) {
    return e.kind();
  }
  FAIL("expected gt::Error");
  return gt::ErrorKind::kInvalidArgument;
}

const MixedProfile kBosMixed{{Rational(3, 5), Rational(2, 5)}, {Rational(2, 5), Rational(3, 5)}};

}  // namespace

TEST_CASE("payoff lookup") {
  const auto bos = sc::battle_of_the_sexes();
  CHECK(gt::payoff(bos, {O, O}) == gt::PayoffVector{3, 2});
  const auto pd = sc::prisoners_dilemma(7, 5, 2, 1);
  CHECK(gt::payoff(pd, {D, D}) == gt::PayoffVector{2, 2});
  CHECK(gt::payoff(pd, {C, C}) == pd.payoff_at(0));
  CHECK(kind_of([&] { gt::payoff(bos, {O, 2}); }) == gt::ErrorKind::kInvalidProfile);
  CHECK(kind_of([&] { gt::payoff(bos, {O}); }) == gt::ErrorKind::kInvalidProfile);
}

TEST_CASE("expected payoff") {
  const auto bos = sc::battle_of_the_sexes();
  // Outcome probabilities 6/25 (O,O), 9/25 (O,F), 4/25 (F,O), 6/25 (F,F).
  CHECK(gt::product_distribution(bos, kBosMixed) ==
        gt::JointDistribution{Rational(6, 25), Rational(9, 25), Rational(4, 25), Rational(6, 25)});
  CHECK(gt::expected_payoff(bos, kBosMixed) == gt::PayoffVector{Rational(6, 5), Rational(6, 5)});
  const MixedProfile uniform{{Rational(1, 2), Rational(1, 2)}, {Rational(1, 2), Rational(1, 2)}};
  CHECK(gt::expected_payoff(bos, uniform) == gt::PayoffVector{Rational(5, 4), Rational(5, 4)});
  CHECK(gt::expected_payoff(bos, gt::degenerate_profile(bos, {F, F})) == gt::PayoffVector{2, 3});
  CHECK(kind_of([&] { gt::expected_payoff(bos, {{1}, {0, 1}}); }) ==
        gt::ErrorKind::kInvalidProfile);
  CHECK(kind_of([&] { gt::expected_payoff(bos, {{Rational(1, 2), Rational(1, 3)}, {0, 1}}); }) ==
        gt::ErrorKind::kInvalidProfile);
}

TEST_CASE("best responses") {
  const auto bos = sc::battle_of_the_sexes();
  CHECK(gt::best_responses(bos, 0, {{1, 0}}) == std::vector<std::size_t>{O});
  CHECK(gt::best_responses(bos, 0, {{Rational(2, 5), Rational(3, 5)}}) ==
        std::vector<std::size_t>{O, F});
  const auto single = gt::StrategicGame::bimatrix({"x"}, {"y"}, {{4}}, {{1}});
  CHECK(gt::best_responses(single, 0, {{1}}) == std::vector<std::size_t>{0});
  CHECK(kind_of([&] { gt::best_responses(bos, 0, {}); }) == gt::ErrorKind::kInvalidProfile);
}

TEST_CASE("pure nash") {
  CHECK(gt::pure_nash(sc::battle_of_the_sexes()) == std::vector<PureProfile>{{O, O}, {F, F}});
  CHECK(gt::pure_nash(sc::prisoners_dilemma()) == std::vector<PureProfile>{{D, D}});
  CHECK(gt::pure_nash(sc::matching_pennies()).empty());
}

TEST_CASE("pure nash agrees with brute force on random games") {
  std::mt19937_64 rng(7);
  const std::vector<std::vector<std::size_t>> shapes{{2, 2}, {3, 3}, {4, 4}, {2, 4},
                                                     {3, 2}, {2, 2, 2}, {4, 3}};
  for (int trial = 0; trial < 120; ++trial) {
    const auto game = gt::testing::random_game(rng, shapes[trial % shapes.size()], 3);
    const auto found = gt::pure_nash(game);
    CHECK(found == gt::testing::brute_force_pure_nash(game));
    for (const auto& s : found) CHECK(gt::testing::brute_force_is_pure_nash(game, s));
  }
}

TEST_CASE("iterated elimination") {
  const auto pd = sc::prisoners_dilemma();
  const auto result = gt::iterated_elimination(pd);
  CHECK(result.reduced.num_profiles() == 1);
  CHECK(result.kept == std::vector<std::vector<std::size_t>>{{D}, {D}});
  REQUIRE(result.trace.size() == 2);
  CHECK(result.trace[0].strategy == C);
  CHECK(result.trace[0].dominated_by == D);

  const auto bos = sc::battle_of_the_sexes();
  const auto unchanged = gt::iterated_elimination(bos);
  CHECK(unchanged.reduced == bos);
  CHECK(unchanged.trace.empty());

  const auto single = gt::StrategicGame::bimatrix({"x"}, {"y"}, {{4}}, {{1}});
  CHECK(gt::iterated_elimination(single).reduced == single);
}

TEST_CASE("iterated elimination needs several rounds") {
  // Column's R is dominated by M; only then is Row's D dominated by U,
  // and then column's L by M.
  const auto game = gt::StrategicGame::bimatrix(
      {"U", "D"}, {"L", "M", "R"}, {{1, 1, 0}, {0, 0, 2}}, {{0, 2, 1}, {3, 1, 0}});
  const auto result = gt::iterated_elimination(game);
  CHECK(result.kept == std::vector<std::vector<std::size_t>>{{0}, {1}});
  REQUIRE(result.trace.size() == 3);
  CHECK(result.trace[0].round == 1);
  CHECK(result.trace[2].round == 3);
}

TEST_CASE("mixed nash for 2x2") {
  const auto bos = gt::mixed_ne_2x2(sc::battle_of_the_sexes());
  REQUIRE(bos.size() == 3);
  const auto mixed = std::find_if(bos.begin(), bos.end(), [](const gt::Equilibrium& e) {
    return e.profile == kBosMixed;
  });
  REQUIRE(mixed != bos.end());
  CHECK(mixed->payoffs == gt::PayoffVector{Rational(6, 5), Rational(6, 5)});

  const auto mp = gt::mixed_ne_2x2(sc::matching_pennies());
  REQUIRE(mp.size() == 1);
  CHECK(mp[0].profile ==
        MixedProfile{{Rational(1, 2), Rational(1, 2)}, {Rational(1, 2), Rational(1, 2)}});

  const auto pd = gt::mixed_ne_2x2(sc::prisoners_dilemma());
  REQUIRE(pd.size() == 1);
  CHECK(pd[0].profile == gt::degenerate_profile(sc::prisoners_dilemma(), {D, D}));

  CHECK(kind_of([] { gt::mixed_ne_2x2(sc::rock_paper_scissors()); }) ==
        gt::ErrorKind::kUnsupportedShape);
}

TEST_CASE("support enumeration") {
  const auto bos = sc::battle_of_the_sexes();
  const auto result = gt::support_enumeration(bos, 2);
  CHECK_FALSE(result.degenerate());
  CHECK(result.equilibria == gt::mixed_ne_2x2(bos));

  const auto rps = gt::support_enumeration(sc::rock_paper_scissors(), 3);
  REQUIRE(rps.equilibria.size() == 1);
  const gt::MixedStrategy third(3, Rational(1, 3));
  CHECK(rps.equilibria[0].profile == MixedProfile{third, third});
  CHECK(rps.equilibria[0].payoffs == gt::PayoffVector{0, 0});

  const auto single = gt::StrategicGame::bimatrix({"x"}, {"y"}, {{4}}, {{1}});
  const auto one = gt::support_enumeration(single, 1);
  REQUIRE(one.equilibria.size() == 1);
  CHECK(one.equilibria[0].payoffs == gt::PayoffVector{4, 1});

  const auto constant = gt::StrategicGame::bimatrix({"a", "b"}, {"c", "d"}, {{1, 1}, {1, 1}},
                                                    {{1, 1}, {1, 1}});
  CHECK(gt::support_enumeration(constant, 2).degenerate());

  std::mt19937_64 rng(1);
  const auto three = gt::testing::random_game(rng, {2, 2, 2});
  CHECK(kind_of([&] { gt::support_enumeration(three, 2); }) == gt::ErrorKind::kUnsupportedShape);
  const auto big = sc::symmetric_game(sc::american_values_matrix(), sc::american_values_names());
  CHECK(kind_of([&] { gt::support_enumeration(big, 2); }) == gt::ErrorKind::kSizeLimit);
}

TEST_CASE("support enumeration matches 2x2 solver on random games") {
  std::mt19937_64 rng(11);
  int compared = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto game = gt::testing::random_game(rng, {2, 2}, 5);
    const auto support = gt::support_enumeration(game, 2);
    if (support.degenerate()) continue;
    CHECK(support.equilibria == gt::mixed_ne_2x2(game));
    ++compared;
  }
  CHECK(compared > 100);
}

TEST_CASE("every solver output is an exact equilibrium") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t m = 2 + trial % 3, n = 2 + (trial / 3) % 3;
    const auto game = gt::testing::random_game(rng, {m, n}, 4);
    for (const auto& eq : gt::support_enumeration(game, 3).equilibria) {
      CHECK(gt::is_epsilon_nash(game, eq.profile, 0));
      CHECK(gt::expected_payoff(game, eq.profile) == eq.payoffs);
      CHECK(gt::is_correlated_equilibrium(game, gt::product_distribution(game, eq.profile)).holds);
    }
  }
}

TEST_CASE("epsilon nash") {
  const auto bos = sc::battle_of_the_sexes();
  CHECK(gt::is_epsilon_nash(bos, kBosMixed, 0));
  const auto miss = gt::degenerate_profile(bos, {O, F});
  CHECK(gt::max_deviation_gain(bos, miss) == 2);
  CHECK(gt::is_epsilon_nash(bos, miss, 2));
  CHECK_FALSE(gt::is_epsilon_nash(bos, miss, 1));
  CHECK(kind_of([&] { gt::is_epsilon_nash(bos, miss, -1); }) == gt::ErrorKind::kInvalidArgument);
}

TEST_CASE("pareto optimal profiles") {
  CHECK(gt::pareto_optimal_profiles(sc::prisoners_dilemma()) ==
        std::vector<PureProfile>{{C, C}, {C, D}, {D, C}});
  CHECK(gt::pareto_optimal_profiles(sc::battle_of_the_sexes()) ==
        std::vector<PureProfile>{{O, O}, {F, F}});
  const auto single = gt::StrategicGame::bimatrix({"x"}, {"y"}, {{4}}, {{1}});
  CHECK(gt::pareto_optimal_profiles(single) == std::vector<PureProfile>{{0, 0}});
}

TEST_CASE("social optimum and price of anarchy") {
  const auto pd = gt::social_optimum(sc::prisoners_dilemma());
  CHECK(pd.profiles == std::vector<PureProfile>{{C, C}});
  CHECK(pd.welfare == 6);
  const auto bos = gt::social_optimum(sc::battle_of_the_sexes());
  CHECK(bos.profiles == std::vector<PureProfile>{{O, O}, {F, F}});
  CHECK(bos.welfare == 5);
  const auto constant = gt::StrategicGame::bimatrix({"a", "b"}, {"c", "d"}, {{1, 1}, {1, 1}},
                                                    {{2, 2}, {2, 2}});
  CHECK(gt::social_optimum(constant).profiles.size() == 4);

  CHECK(gt::price_of_anarchy(sc::prisoners_dilemma()).ratio == 3);
  CHECK(gt::price_of_anarchy(sc::battle_of_the_sexes()).ratio == 1);
  CHECK(gt::price_of_anarchy(constant).ratio == 1);
  CHECK(kind_of([] { gt::price_of_anarchy(sc::matching_pennies()); }) ==
        gt::ErrorKind::kNoEquilibrium);
  const auto zero = sc::prisoners_dilemma(5, 3, 0, -1);
  CHECK(kind_of([&] { gt::price_of_anarchy(zero); }) == gt::ErrorKind::kUndefinedRatio);
}

TEST_CASE("price of anarchy is at least one for positive games") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    auto game = gt::testing::random_game(rng, {3, 3}, 4);
    game = game.with_affine_payoff(0, 1, 10).with_affine_payoff(1, 1, 10);
    if (gt::pure_nash(game).empty()) continue;
    CHECK(gt::price_of_anarchy(game).ratio >= 1);
  }
}

TEST_CASE("correlated equilibrium") {
  const auto bos = sc::battle_of_the_sexes();
  const Rational half(1, 2);
  const auto coordinate = gt::is_correlated_equilibrium(bos, {half, 0, 0, half});
  CHECK(coordinate.holds);
  CHECK(gt::is_correlated_equilibrium(bos, gt::product_distribution(bos, kBosMixed)).holds);
  const auto anti = gt::is_correlated_equilibrium(bos, {0, half, half, 0});
  CHECK_FALSE(anti.holds);
  CHECK(anti.worst_margin < 0);
  CHECK(kind_of([&] { gt::is_correlated_equilibrium(bos, {half, half, half, 0}); }) ==
        gt::ErrorKind::kInvalidArgument);
}

TEST_CASE("affine payoff transforms keep the argmax structure") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 80; ++trial) {
    const auto game = gt::testing::random_game(rng, {3, 3}, 3);
    const std::size_t player = trial % 2;
    const auto moved = game.with_affine_payoff(player, Rational(trial % 5 + 1, 3), trial - 40);
    CHECK(gt::pure_nash(moved) == gt::pure_nash(game));
    CHECK(gt::iterated_elimination(moved).kept == gt::iterated_elimination(game).kept);
    CHECK(gt::best_responses(moved, 0, {{Rational(1, 3), Rational(1, 2), Rational(1, 6)}}) ==
          gt::best_responses(game, 0, {{Rational(1, 3), Rational(1, 2), Rational(1, 6)}}));
    // Pareto sets are compared on games where only one player's scale changes.
    CHECK(gt::pareto_optimal_profiles(moved) == gt::pareto_optimal_profiles(game));
  }
}

TEST_CASE("nash bargaining") {
  gt::BargainingProblem problem{{{0, 0}, {3, 2}, {2, 3}}, {0, 0}};
  const auto solution = gt::nash_bargaining(problem, 50);
  CHECK(solution.point == gt::Point2{Rational(5, 2), Rational(5, 2)});
  CHECK(solution.nash_product == Rational(25, 4));
  CHECK(solution.grid_product <= solution.nash_product);

  gt::BargainingProblem square{{{0, 0}, {1, 0}, {0, 1}, {1, 1}}, {0, 0}};
  CHECK(gt::nash_bargaining(square, 10).point == gt::Point2{1, 1});

  problem.disagreement = {10, 10};
  CHECK(kind_of([&] { gt::nash_bargaining(problem, 10); }) == gt::ErrorKind::kInfeasibleBargain);
}

TEST_CASE("nash bargaining agrees with a fine grid") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    gt::BargainingProblem problem;
    for (int k = 0; k < 6; ++k) {
      problem.points.push_back({gt::testing::random_rational(rng, 8, 2) + 8,
                                gt::testing::random_rational(rng, 8, 2) + 8});
    }
    problem.disagreement = {4, 4};
    try {
      const auto solution = gt::nash_bargaining(problem, 400);
      CHECK(solution.grid_product <= solution.nash_product);
      // Grid spacing 1/400 on edges of length < 23 bounds the gap.
      CHECK(gt::to_double(solution.nash_product - solution.grid_product) < 0.2);
    } catch (const gt::Error& e) {
      CHECK(e.kind() == gt::ErrorKind::kInfeasibleBargain);
    }
  }
}

TEST_CASE("rosenthal potential") {
  const auto links = sc::two_link_congestion();
  CHECK(gt::rosenthal_potential(links, {0, 0}) == 3);
  CHECK(gt::rosenthal_potential(links, {0, 1}) == 2);
  // Resource c is unused here and contributes nothing.
  const auto three = sc::three_resource_congestion();
  CHECK(gt::rosenthal_potential(three, {0, 0, 1}) == Rational(1 + 2 + 2));
}

TEST_CASE("potential check") {
  for (const auto& cg : {sc::two_link_congestion(), sc::three_resource_congestion()}) {
    const auto game = gt::to_strategic_game(cg);
    CHECK(gt::check_potential(game, gt::potential_table(cg)));
  }
  const auto bos = sc::battle_of_the_sexes();
  CHECK_FALSE(gt::check_potential(bos, std::vector<Rational>(4, Rational(7))));
  CHECK(kind_of([&] { gt::check_potential(bos, {1, 2}); }) == gt::ErrorKind::kInvalidArgument);

  const gt::StrategicGame solo({{"a", "b", "c"}}, {{1}, {5}, {Rational(-2, 3)}});
  CHECK(gt::check_potential(solo, {1, 5, Rational(-2, 3)}));
}

TEST_CASE("best response dynamics") {
  const auto links = gt::to_strategic_game(sc::two_link_congestion());
  const auto run = gt::best_response_dynamics(links, {0, 0}, 10);
  CHECK(run.outcome == gt::DynamicsResult::Outcome::kConverged);
  CHECK(run.final_profile == PureProfile{1, 0});
  CHECK(run.steps() <= 2);

  const auto mp = gt::best_response_dynamics(sc::matching_pennies(), {0, 0}, 100);
  CHECK(mp.outcome == gt::DynamicsResult::Outcome::kCycle);
  CHECK(mp.cycle.size() == 4);

  const auto bos = gt::best_response_dynamics(sc::battle_of_the_sexes(), {O, O}, 0);
  CHECK(bos.steps() == 0);
  CHECK(bos.final_profile == PureProfile{O, O});

  CHECK(kind_of([] { gt::best_response_dynamics(sc::matching_pennies(), {0, 0}, 2); }) ==
        gt::ErrorKind::kStepLimit);
}

TEST_CASE("congestion dynamics converge within the profile count from every start") {
  for (const auto& cg : {sc::two_link_congestion(), sc::three_resource_congestion()}) {
    const auto game = gt::to_strategic_game(cg);
    for (const auto& start : gt::all_profiles(game)) {
      const auto run = gt::best_response_dynamics(game, start, game.num_profiles());
      CHECK(run.outcome == gt::DynamicsResult::Outcome::kConverged);
      CHECK(gt::testing::brute_force_is_pure_nash(game, run.final_profile));
    }
  }
}

TEST_CASE("exact results are reproducible") {
  const auto bos = sc::battle_of_the_sexes();
  CHECK(gt::support_enumeration(bos, 2).equilibria == gt::support_enumeration(bos, 2).equilibria);
}
