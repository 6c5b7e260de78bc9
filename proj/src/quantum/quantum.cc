#include "gt/quantum.h"

#include <cmath>

#include "gt/error.h"

namespace gt::quantum {
namespace {

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

void require_probability(double x, const char* name) {
  GT_REQUIRE(std::isfinite(x) && x >= 0.0 && x <= 1.0, ErrorKind::kInvalidArgument,
             std::string(name) + " must lie in [0, 1]");
}

// Diagonal of rho' from the diagonal of rho: the channel only permutes basis
// states (X flips one bit), so the diagonal maps to itself.
std::array<double, 4> channel_diagonal(const std::array<double, 4>& d, double p, double q) {
  const std::array<double, 4> w{p * q, p * (1 - q), (1 - p) * q, (1 - p) * (1 - q)};
  // Weight index k doubles as the flip mask: I(x)I, I(x)X, X(x)I, X(x)X.
  std::array<double, 4> out{};
  for (std::size_t s = 0; s < 4; ++s) {
    for (std::size_t k = 0; k < 4; ++k) out[s] += w[k] * d[s ^ k];
  }
  return out;
}

std::array<double, 4> initial_diagonal(const QuantumizedGame& qg) {
  return {std::norm(qg.alpha()), 0.0, 0.0, std::norm(qg.beta())};
}

std::array<double, 2> pay(const QuantumizedGame& qg, const std::array<double, 4>& diag) {
  std::array<double, 2> out{};
  for (std::size_t s = 0; s < 4; ++s) {
    out[0] += qg.basis_payoffs(s)[0] * diag[s];
    out[1] += qg.basis_payoffs(s)[1] * diag[s];
  }
  return out;
}

}  // namespace

Ket::Ket(Eigen::VectorXcd amplitudes) : amps_(std::move(amplitudes)) {
  GT_REQUIRE(amps_.size() == 2 || amps_.size() == 4, ErrorKind::kUnsupportedShape,
             "kets have dimension 2 or 4");
  GT_REQUIRE(amps_.allFinite() && near(amps_.squaredNorm(), 1.0, kNormTolerance),
             ErrorKind::kInvalidState, "ket is not normalized");
}

Ket Ket::basis(std::size_t dimension, std::size_t index) {
  GT_REQUIRE(index < dimension, ErrorKind::kInvalidArgument, "basis index out of range");
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dimension));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return Ket(std::move(v));
}

Ket tensor(const Ket& a, const Ket& b) {
  GT_REQUIRE(a.dimension() == 2 && b.dimension() == 2, ErrorKind::kUnsupportedShape,
             "tensor products are limited to two qubits");
  Eigen::VectorXcd v(4);
  for (Eigen::Index i = 0; i < 2; ++i) {
    for (Eigen::Index j = 0; j < 2; ++j) v(2 * i + j) = a.amplitudes()(i) * b.amplitudes()(j);
  }
  return Ket(std::move(v));
}

std::vector<double> born_probabilities(const Ket& psi, const std::vector<Ket>& basis) {
  GT_REQUIRE(basis.size() == psi.dimension(), ErrorKind::kInvalidBasis,
             "basis size differs from the state dimension");
  for (std::size_t i = 0; i < basis.size(); ++i) {
    GT_REQUIRE(basis[i].dimension() == psi.dimension(), ErrorKind::kInvalidBasis,
               "basis vector of the wrong dimension");
    for (std::size_t j = 0; j < basis.size(); ++j) {
      Amplitude ip = basis[i].amplitudes().dot(basis[j].amplitudes());
      GT_REQUIRE(std::abs(ip - Amplitude(i == j ? 1.0 : 0.0)) <= kNormTolerance,
                 ErrorKind::kInvalidBasis, "basis is not orthonormal");
    }
  }
  std::vector<double> out;
  for (const auto& b : basis) out.push_back(std::norm(b.amplitudes().dot(psi.amplitudes())));
  return out;
}

DensityOperator::DensityOperator(Eigen::MatrixXcd matrix) : m_(std::move(matrix)) {
  GT_REQUIRE(m_.rows() == m_.cols() && m_.rows() > 0, ErrorKind::kInvalidState,
             "density operator must be square");
  GT_REQUIRE(m_.allFinite(), ErrorKind::kInvalidState, "non-finite density entry");
  GT_REQUIRE((m_ - m_.adjoint()).cwiseAbs().maxCoeff() <= kNormTolerance, ErrorKind::kInvalidState,
             "density operator is not Hermitian");
  GT_REQUIRE(std::abs(m_.trace() - Amplitude(1.0)) <= kNormTolerance, ErrorKind::kInvalidState,
             "density operator trace is not 1");
  GT_REQUIRE(eigenvalues().minCoeff() >= kEigenFloor, ErrorKind::kInvalidState,
             "density operator has a negative eigenvalue");
}

std::vector<double> DensityOperator::diagonal() const {
  std::vector<double> d;
  for (Eigen::Index i = 0; i < m_.rows(); ++i) d.push_back(m_(i, i).real());
  return d;
}

Eigen::VectorXd DensityOperator::eigenvalues() const {
  Eigen::MatrixXcd h = (m_ + m_.adjoint()) / 2.0;
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(h, Eigen::EigenvaluesOnly).eigenvalues();
}

DensityOperator density_of(const Ket& psi) {
  return DensityOperator(psi.amplitudes() * psi.amplitudes().adjoint());
}

QuantumizedGame::QuantumizedGame(StrategicGame base, Amplitude alpha, Amplitude beta)
    : base_(std::move(base)), alpha_(alpha), beta_(beta) {
  GT_REQUIRE(base_.is_two_by_two(), ErrorKind::kUnsupportedShape,
             "quantumization needs a 2x2 game");
  GT_REQUIRE(std::isfinite(std::abs(alpha)) && std::isfinite(std::abs(beta)) &&
                 near(std::norm(alpha) + std::norm(beta), 1.0, kNormTolerance),
             ErrorKind::kInvalidState, "|alpha|^2 + |beta|^2 must be 1");
  for (std::size_t s = 0; s < 4; ++s) {
    PayoffVector u = payoff(base_, {s >> 1, s & 1});
    payoffs_[s] = {to_double(u[0]), to_double(u[1])};
  }
}

Ket QuantumizedGame::initial_state() const {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(4);
  v(0) = alpha_;
  v(3) = beta_;
  return Ket(std::move(v));
}

DensityOperator mw_final_density(const QuantumizedGame& qg, double p, double q) {
  require_probability(p, "p");
  require_probability(q, "q");
  const Eigen::MatrixXcd rho = density_of(qg.initial_state()).matrix();
  const std::array<double, 4> w{p * q, p * (1 - q), (1 - p) * q, (1 - p) * (1 - q)};
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(4, 4);
  // (U (x) V) is the permutation s -> s ^ mask, so conjugation permutes
  // rows and columns alike.
  for (std::size_t mask = 0; mask < 4; ++mask) {
    if (w[mask] == 0.0) continue;
    for (std::size_t s = 0; s < 4; ++s) {
      for (std::size_t t = 0; t < 4; ++t) {
        out(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(t)) +=
            w[mask] * rho(static_cast<Eigen::Index>(s ^ mask), static_cast<Eigen::Index>(t ^ mask));
      }
    }
  }
  return DensityOperator(std::move(out));
}

std::array<double, 2> mw_expected_payoffs(const QuantumizedGame& qg, double p, double q) {
  require_probability(p, "p");
  require_probability(q, "q");
  return pay(qg, channel_diagonal(initial_diagonal(qg), p, q));
}

std::vector<SurfacePoint> payoff_surface(const QuantumizedGame& qg, std::size_t grid_n) {
  GT_REQUIRE(grid_n >= 1, ErrorKind::kInvalidArgument, "grid_n must be at least 1");
  const auto d0 = initial_diagonal(qg);
  std::vector<SurfacePoint> out;
  out.reserve((grid_n + 1) * (grid_n + 1));
  for (std::size_t i = 0; i <= grid_n; ++i) {
    for (std::size_t j = 0; j <= grid_n; ++j) {
      double p = static_cast<double>(i) / static_cast<double>(grid_n);
      double q = static_cast<double>(j) / static_cast<double>(grid_n);
      out.push_back({p, q, pay(qg, channel_diagonal(d0, p, q))});
    }
  }
  return out;
}

std::vector<GridEquilibrium> mw_nash_search(const QuantumizedGame& qg, std::size_t grid_n) {
  const auto surface = payoff_surface(qg, grid_n);
  const std::size_t m = grid_n + 1;
  auto at = [&](std::size_t i, std::size_t j) -> const SurfacePoint& { return surface[i * m + j]; };
  std::vector<double> best1(m, -INFINITY);  // over p, per column j
  std::vector<double> best2(m, -INFINITY);  // over q, per row i
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      best1[j] = std::max(best1[j], at(i, j).payoffs[0]);
      best2[i] = std::max(best2[i], at(i, j).payoffs[1]);
    }
  }
  std::vector<GridEquilibrium> out;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const auto& pt = at(i, j);
      if (best1[j] - pt.payoffs[0] >= kImprovementTolerance) continue;
      if (best2[i] - pt.payoffs[1] >= kImprovementTolerance) continue;
      out.push_back({i, j, pt.p, pt.q, pt.payoffs});
    }
  }
  return out;
}

}  // namespace gt::quantum
