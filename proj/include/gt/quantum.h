#ifndef GT_QUANTUM_H_
#define GT_QUANTUM_H_

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "gt/game.h"

namespace gt::quantum {

using Amplitude = std::complex<double>;

inline constexpr double kNormTolerance = 1e-10;
inline constexpr double kEigenFloor = -1e-9;
inline constexpr double kImprovementTolerance = 1e-9;

// Unit vector of dimension 2 (one qubit) or 4 (two qubits).
class Ket {
 public:
  // Throws kUnsupportedShape for other dimensions and kInvalidState when the
  // norm is off by more than kNormTolerance.
  explicit Ket(Eigen::VectorXcd amplitudes);

  static Ket basis(std::size_t dimension, std::size_t index);

  std::size_t dimension() const { return static_cast<std::size_t>(amps_.size()); }
  const Eigen::VectorXcd& amplitudes() const { return amps_; }
  Amplitude operator[](std::size_t i) const { return amps_(static_cast<Eigen::Index>(i)); }

 private:
  Eigen::VectorXcd amps_;
};

Ket tensor(const Ket& a, const Ket& b);

// |<b_i|psi>|^2 over an orthonormal basis. Throws kInvalidBasis when the
// basis is not orthonormal within kNormTolerance or has the wrong size.
std::vector<double> born_probabilities(const Ket& psi, const std::vector<Ket>& basis);

// Hermitian, trace one, eigenvalues >= kEigenFloor.
class DensityOperator {
 public:
  // Throws kInvalidState on any violated invariant.
  explicit DensityOperator(Eigen::MatrixXcd matrix);

  const Eigen::MatrixXcd& matrix() const { return m_; }
  std::size_t dimension() const { return static_cast<std::size_t>(m_.rows()); }
  Amplitude operator()(std::size_t i, std::size_t j) const {
    return m_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }
  std::vector<double> diagonal() const;
  Eigen::VectorXd eigenvalues() const;

 private:
  Eigen::MatrixXcd m_;
};

DensityOperator density_of(const Ket& psi);

// A 2x2 game played from the entangled state alpha|OO> + beta|FF>.
// Basis order |OO>, |OF>, |FO>, |FF>: player 1's strategy is the high bit.
class QuantumizedGame {
 public:
  // Throws kUnsupportedShape unless base is 2x2, kInvalidState unless
  // |alpha|^2 + |beta|^2 = 1 within kNormTolerance.
  QuantumizedGame(StrategicGame base, Amplitude alpha, Amplitude beta);

  const StrategicGame& base() const { return base_; }
  Amplitude alpha() const { return alpha_; }
  Amplitude beta() const { return beta_; }
  Ket initial_state() const;

  // Payoffs of the basis profile with index s (|OO>=0 ... |FF>=3).
  std::array<double, 2> basis_payoffs(std::size_t s) const { return payoffs_[s]; }

 private:
  StrategicGame base_;
  Amplitude alpha_;
  Amplitude beta_;
  std::array<std::array<double, 2>, 4> payoffs_;
};

// Each player keeps the state with probability p (player 1) or q (player 2)
// and applies the bit flip X otherwise:
// rho' = sum_{U,V in {I,X}} w_UV (U (x) V) rho (U (x) V)^dagger.
// Throws kInvalidArgument unless p, q lie in [0, 1].
DensityOperator mw_final_density(const QuantumizedGame& qg, double p, double q);

// sum_s payoff(s) <s|rho'|s>.
std::array<double, 2> mw_expected_payoffs(const QuantumizedGame& qg, double p, double q);

struct GridEquilibrium {
  std::size_t i = 0;  // p = i / grid_n
  std::size_t j = 0;  // q = j / grid_n
  double p = 0;
  double q = 0;
  std::array<double, 2> payoffs{};
};

// Grid points where no unilateral grid deviation gains kImprovementTolerance
// or more, in (i, j) order. Throws kInvalidArgument when grid_n < 1.
std::vector<GridEquilibrium> mw_nash_search(const QuantumizedGame& qg, std::size_t grid_n = 100);

struct SurfacePoint {
  double p = 0;
  double q = 0;
  std::array<double, 2> payoffs{};
};

// Expected payoffs over the (grid_n + 1)^2 grid, p-major.
std::vector<SurfacePoint> payoff_surface(const QuantumizedGame& qg, std::size_t grid_n);

}  // namespace gt::quantum

#endif  // GT_QUANTUM_H_
