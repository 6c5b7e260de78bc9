#ifndef GT_SCENARIOS_H_
#define GT_SCENARIOS_H_

#include <vector>

#include "gt/congestion.h"
#include "gt/game.h"

// Classic model games used by the CLI scenario library and the tests.
namespace gt::scenarios {

// Wife (row) and Husband (column), strategies O(pera) and F(ootball).
StrategicGame battle_of_the_sexes();

// Row/column strategies C, D; payoffs (R,R) (S,T) / (T,S) (P,P).
StrategicGame prisoners_dilemma(const Rational& t = 5, const Rational& r = 3,
                                const Rational& p = 1, const Rational& s = 0);

// Antisymmetric form ((1,-1),(-1,1) / (-1,1),(1,-1)).
StrategicGame matching_pennies();

// Win 1, lose -1, tie 0 for the row player.
std::vector<std::vector<Rational>> rock_paper_scissors_matrix();
StrategicGame rock_paper_scissors();

// Symmetric bimatrix game (A, A^T) of an evolution matrix.
StrategicGame symmetric_game(const std::vector<std::vector<Rational>>& matrix,
                             const std::vector<std::string>& strategy_names);

// Two players, two parallel links with per-user cost c(x) = x.
CongestionGame two_link_congestion();

// Three players routing over resources a, b, c with costs c_a(x) = x,
// c_b(x) = 2x, c_c(x) = 3; each player picks {a}, {b} or {a,c}.
CongestionGame three_resource_congestion();

// Illustrative 10x10 matrix for the ten core values A1..A10: a symmetric base
// (1 on the diagonal, 1/2 for cyclic neighbours, 1/4 otherwise) plus a cyclic
// perturbation of +1 on a_{i,i+1} and -1 on a_{i+1,i}.
std::vector<std::vector<Rational>> american_values_matrix();
std::vector<std::string> american_values_names();

}  // namespace gt::scenarios

#endif  // GT_SCENARIOS_H_
