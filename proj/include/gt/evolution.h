#ifndef GT_EVOLUTION_H_
#define GT_EVOLUTION_H_

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "gt/rational.h"

// Replicator dynamics of symmetric evolution matrix games on the simplex.
namespace gt::evo {

// Population state: a probability vector.
using SimplexState = std::vector<double>;
using ExactState = std::vector<Rational>;

inline constexpr double kSimplexTolerance = 1e-12;
inline constexpr double kNashTolerance = 1e-10;

class EvolutionGame {
 public:
  explicit EvolutionGame(std::vector<std::vector<Rational>> matrix);
  static EvolutionGame from_doubles(const std::vector<std::vector<double>>& matrix);

  std::size_t size() const { return exact_.size(); }
  const std::vector<std::vector<double>>& matrix() const { return matrix_; }
  const std::vector<std::vector<Rational>>& exact_matrix() const { return exact_; }
  bool is_symmetric() const;

  // Adds `shift` to every entry of column `column`.
  EvolutionGame with_column_shift(std::size_t column, const Rational& shift) const;

 private:
  std::vector<std::vector<Rational>> exact_;
  std::vector<std::vector<double>> matrix_;
};

// Throws kInvalidArgument on a size mismatch and kInvalidState when `p` is
// not a probability vector within kSimplexTolerance.
void validate_state(const EvolutionGame& game, const SimplexState& p);

// (Ap)_i: payoff of strategy i against the population.
std::vector<double> fitness(const EvolutionGame& game, const SimplexState& p);
std::vector<Rational> fitness(const EvolutionGame& game, const ExactState& p);

// p A p^T.
double mean_fitness(const EvolutionGame& game, const SimplexState& p);
Rational mean_fitness(const EvolutionGame& game, const ExactState& p);

// fitness - mean fitness.
std::vector<double> excess(const EvolutionGame& game, const SimplexState& p);
std::vector<Rational> excess(const EvolutionGame& game, const ExactState& p);

// p_i ((Ap)_i - pAp^T).
std::vector<double> replicator_rhs(const EvolutionGame& game, const SimplexState& p);
std::vector<Rational> replicator_rhs(const EvolutionGame& game, const ExactState& p);

// max_i |replicator_rhs_i|.
double rest_residual(const EvolutionGame& game, const SimplexState& p);

// One classical Runge-Kutta step of size h, without projection.
SimplexState rk4_step(const EvolutionGame& game, const SimplexState& p, double h);

struct Trajectory {
  std::vector<double> times;
  std::vector<SimplexState> states;
  double h = 0;

  std::size_t size() const { return states.size(); }
};

// RK4 with fixed step h (the last step is shortened to land on t_end). After
// each step entries below 1e-12 in magnitude are zeroed and the state is
// renormalized. Throws kIntegrationDiverged if an entry drops below -1e-9.
Trajectory integrate(const EvolutionGame& game, const SimplexState& p0, double t_end,
                     double h = 1e-3);

struct InteriorRestPoints {
  std::vector<ExactState> points;
  // The defining linear system is underdetermined.
  bool continuum = false;
};

// Solves (Ap)_1 = ... = (Ap)_n, sum p = 1 exactly; keeps strictly positive
// solutions.
InteriorRestPoints interior_rest_points(const EvolutionGame& game);

struct RestPointReport {
  ExactState exact_point;
  SimplexState point;
  double residual = 0;
  enum class Location { kInterior, kBoundary } location = Location::kInterior;
  bool is_nash = false;
  // h_i at the point for strategies outside the support.
  std::vector<std::pair<std::size_t, double>> transversal_eigenvalues;
};

struct RestPointSurvey {
  std::vector<RestPointReport> points;
  // Supports whose restricted system has a continuum of solutions.
  std::vector<std::vector<std::size_t>> continuum_supports;
};

// Isolated rest points of every support, solved exactly.
RestPointSurvey rest_points(const EvolutionGame& game);

// Every pure strategy earns at most the mean fitness (within 1e-10).
bool is_nash_state(const EvolutionGame& game, const SimplexState& p);
bool is_nash_state(const EvolutionGame& game, const ExactState& p);

struct EssReport {
  bool stable = false;
  // false when the best-reply face was only sampled.
  bool certified = true;
  // Grid resolution used for sampled faces (0 when certified).
  std::size_t resolution = 0;
};

// Checks p0 A p0 < p A p0 for every alternative best reply p0. Best-reply
// faces with at most three strategies are decided exactly through the
// quadratic form on the face's feasible cone; larger faces are sampled on a
// 1/64 grid. Throws kInvalidArgument when p is not a Nash state.
EssReport is_ess(const EvolutionGame& game, const SimplexState& p);

// Trapezoidal (1/T) * integral of p(t).
std::vector<double> time_average(const Trajectory& trajectory);

// |d/dt (pAp^T) - 2 sum p_i h_i^2| along the flow. Throws kUnsupportedMatrix
// for asymmetric A.
double fisher_rate_check(const EvolutionGame& game, const SimplexState& p);

// h_i(p) for each i outside supp(p). Throws kInvalidArgument when p is
// interior or not a rest point (residual above 1e-9).
std::vector<std::pair<std::size_t, double>> transversal_eigenvalues(const EvolutionGame& game,
                                                                    const SimplexState& p);

// d/dt of V(p) = prod p_i^alpha_i along the flow: V sum alpha_i h_i(p).
double power_product(const SimplexState& p, const std::vector<double>& alpha);
double power_product_rate(const EvolutionGame& game, const SimplexState& p,
                          const std::vector<double>& alpha);

struct RecurrenceReport {
  enum class Kind { kNone, kConvergent, kRecurrent };
  Kind kind = Kind::kNone;
  // Max-norm diameter of the terminal window.
  double terminal_diameter = 0;
  // Times at which the trajectory came back to its initial state.
  std::vector<double> return_times;
  double period = 0;
};

std::string to_string(RecurrenceReport::Kind kind);

// Convergent when the last tenth of the samples (at least 10) has max-norm
// diameter below tol. Recurrent when the state returns at least twice into
// the tol-ball around the initial state and the gaps between successive
// returns stay within 10% of their mean. Throws kInsufficientData below 10
// samples.
RecurrenceReport detect_recurrence(const Trajectory& trajectory, double tol = 1e-3);

// Smallest coordinate seen along the trajectory; a trajectory-based stand-in
// for distance to the boundary, not a permanence certificate.
double min_boundary_distance(const Trajectory& trajectory);

// Rows "t,p1,...,pn" with 17 significant digits; every `stride`-th sample
// plus the final one.
void write_csv(const Trajectory& trajectory, std::ostream& out, std::size_t stride = 1);

}  // namespace gt::evo

#endif  // GT_EVOLUTION_H_
