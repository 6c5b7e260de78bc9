#include "gt/scenarios.h"

#include <string>

namespace gt::scenarios {

StrategicGame battle_of_the_sexes() {
  return StrategicGame::bimatrix({"O", "F"}, {"O", "F"}, {{3, 0}, {0, 2}}, {{2, 0}, {0, 3}},
                                 {"Wife", "Husband"});
}

StrategicGame prisoners_dilemma(const Rational& t, const Rational& r, const Rational& p,
                                const Rational& s) {
  return StrategicGame::bimatrix({"C", "D"}, {"C", "D"}, {{r, s}, {t, p}}, {{r, t}, {s, p}},
                                 {"Row", "Column"});
}

StrategicGame matching_pennies() {
  return StrategicGame::bimatrix({"H", "T"}, {"H", "T"}, {{1, -1}, {-1, 1}}, {{-1, 1}, {1, -1}},
                                 {"Row", "Column"});
}

std::vector<std::vector<Rational>> rock_paper_scissors_matrix() {
  return {{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}};
}

StrategicGame symmetric_game(const std::vector<std::vector<Rational>>& matrix,
                             const std::vector<std::string>& strategy_names) {
  const std::size_t n = matrix.size();
  std::vector<std::vector<Rational>> transposed(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) transposed[i][j] = matrix[j][i];
  }
  return StrategicGame::bimatrix(strategy_names, strategy_names, matrix, transposed,
                                 {"Row", "Column"});
}

StrategicGame rock_paper_scissors() {
  return symmetric_game(rock_paper_scissors_matrix(), {"R", "P", "S"});
}

CongestionGame two_link_congestion() {
  std::vector<Resource> links{{"link1", {1, 2}}, {"link2", {1, 2}}};
  std::vector<std::vector<std::size_t>> choices{{0}, {1}};
  return CongestionGame(std::move(links), {choices, choices});
}

CongestionGame three_resource_congestion() {
  std::vector<Resource> resources{{"a", {1, 2, 3}}, {"b", {2, 4, 6}}, {"c", {3, 3, 3}}};
  std::vector<std::vector<std::size_t>> choices{{0}, {1}, {0, 2}};
  return CongestionGame(std::move(resources), {choices, choices, choices});
}

std::vector<std::vector<Rational>> american_values_matrix() {
  constexpr std::size_t n = 10;
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t gap = (j + n - i) % n;
      if (gap == 0) {
        a[i][j] = 1;
      } else if (gap == 1) {
        a[i][j] = Rational(1, 2) + 1;
      } else if (gap == n - 1) {
        a[i][j] = Rational(1, 2) - 1;
      } else {
        a[i][j] = Rational(1, 4);
      }
    }
  }
  return a;
}

std::vector<std::string> american_values_names() {
  std::vector<std::string> names;
  for (int i = 1; i <= 10; ++i) names.push_back("A" + std::to_string(i));
  return names;
}

}  // namespace gt::scenarios
