#ifndef GT_CONGESTION_H_
#define GT_CONGESTION_H_

#include <cstddef>
#include <string>
#include <vector>

#include "gt/game.h"

namespace gt {

struct Resource {
  std::string name;
  // costs[k-1] is the cost per user when k players use the resource.
  std::vector<Rational> costs;

  bool operator==(const Resource&) const = default;
};

// Players choose resource subsets; each player pays the sum of the per-user
// costs of the resources it uses.
class CongestionGame {
 public:
  // strategies[i][s] lists resource indices of player i's strategy s.
  CongestionGame(std::vector<Resource> resources,
                 std::vector<std::vector<std::vector<std::size_t>>> strategies,
                 std::vector<std::vector<std::string>> strategy_names = {});

  std::size_t num_players() const { return strategies_.size(); }
  const std::vector<Resource>& resources() const { return resources_; }
  const std::vector<std::vector<std::vector<std::size_t>>>& strategies() const {
    return strategies_;
  }
  const std::vector<std::vector<std::string>>& strategy_names() const { return names_; }

  // Users per resource.
  std::vector<std::size_t> usage(const PureProfile& profile) const;
  Rational cost(const PureProfile& profile, std::size_t player) const;

  bool operator==(const CongestionGame&) const = default;

 private:
  void validate(const PureProfile& profile) const;

  std::vector<Resource> resources_;
  std::vector<std::vector<std::vector<std::size_t>>> strategies_;
  std::vector<std::vector<std::string>> names_;
};

// Rosenthal potential: sum over resources of c_j(1) + ... + c_j(x_j).
Rational rosenthal_potential(const CongestionGame& game, const PureProfile& profile);

// Strategic form with payoffs equal to negated costs.
StrategicGame to_strategic_game(const CongestionGame& game);

// Negated Rosenthal potential per profile of to_strategic_game(game); a
// potential for that strategic game.
std::vector<Rational> potential_table(const CongestionGame& game);

}  // namespace gt

#endif  // GT_CONGESTION_H_
