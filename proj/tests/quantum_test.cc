#include <cmath>
#include <random>

#include "doctest.h"
#include "gt/error.h"
#include "gt/nash.h"
#include "gt/quantum.h"
#include "gt/scenarios.h"

using namespace gt::quantum;
using Eigen::MatrixXcd;
using Eigen::VectorXcd;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

gt::ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const gt::Error& e) {
    return e.kind();
  }
  FAIL("expected gt::Error");
  return gt::ErrorKind::kInvalidArgument;
}

Ket ket(std::initializer_list<Amplitude> a) {
  VectorXcd v(static_cast<Eigen::Index>(a.size()));
  Eigen::Index i = 0;
  for (auto x : a) v(i++) = x;
  return Ket(v);
}

QuantumizedGame entangled_bos() {
  return QuantumizedGame(gt::scenarios::battle_of_the_sexes(), kInvSqrt2, kInvSqrt2);
}
QuantumizedGame classical_bos() {
  return QuantumizedGame(gt::scenarios::battle_of_the_sexes(), 1.0, 0.0);
}

// Explicit Kronecker products and a full Kraus sum.
MatrixXcd kron(const MatrixXcd& a, const MatrixXcd& b) {
  MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

MatrixXcd kraus_oracle(const QuantumizedGame& qg, double p, double q) {
  MatrixXcd id = MatrixXcd::Identity(2, 2);
  MatrixXcd x(2, 2);
  x << 0, 1, 1, 0;
  VectorXcd psi = VectorXcd::Zero(4);
  psi(0) = qg.alpha();
  psi(3) = qg.beta();
  MatrixXcd rho = psi * psi.adjoint();
  MatrixXcd out = MatrixXcd::Zero(4, 4);
  const MatrixXcd* ops[2] = {&id, &x};
  double wp[2] = {p, 1 - p};
  double wq[2] = {q, 1 - q};
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      MatrixXcd k = kron(*ops[a], *ops[b]);
      out += wp[a] * wq[b] * k * rho * k.adjoint();
    }
  }
  return out;
}

std::pair<Amplitude, Amplitude> random_amplitudes(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Amplitude a(g(rng), g(rng));
  Amplitude b(g(rng), g(rng));
  double n = std::sqrt(std::norm(a) + std::norm(b));
  return {a / n, b / n};
}

}  // namespace

TEST_CASE("tensor products") {
  Ket t = tensor(Ket::basis(2, 0), Ket::basis(2, 0));
  CHECK(t.amplitudes().isApprox(VectorXcd::Unit(4, 0)));
  Ket plus = ket({kInvSqrt2, kInvSqrt2});
  Ket u = tensor(plus, Ket::basis(2, 1));
  CHECK(std::abs(u[0]) < 1e-15);
  CHECK(std::abs(u[1] - kInvSqrt2) < 1e-15);
  CHECK(std::abs(u[2]) < 1e-15);
  CHECK(std::abs(u[3] - kInvSqrt2) < 1e-15);

  std::mt19937_64 rng(2);
  for (int k = 0; k < 200; ++k) {
    auto [a, b] = random_amplitudes(rng);
    auto [c, d] = random_amplitudes(rng);
    CHECK(std::abs(tensor(ket({a, b}), ket({c, d})).amplitudes().norm() - 1) < 1e-12);
  }
  CHECK(kind_of([&] { tensor(t, plus); }) == gt::ErrorKind::kUnsupportedShape);
  CHECK(kind_of([] { ket({1, 1}); }) == gt::ErrorKind::kInvalidState);
  CHECK(kind_of([] { ket({1, 0, 0}); }) == gt::ErrorKind::kUnsupportedShape);
}

TEST_CASE("Born rule") {
  std::vector<Ket> comp{Ket::basis(2, 0), Ket::basis(2, 1)};
  auto p0 = born_probabilities(Ket::basis(2, 0), comp);
  CHECK(p0[0] == doctest::Approx(1));
  CHECK(p0[1] == doctest::Approx(0));
  auto ph = born_probabilities(ket({kInvSqrt2, kInvSqrt2}), comp);
  CHECK(ph[0] == doctest::Approx(0.5));
  CHECK(ph[1] == doctest::Approx(0.5));

  std::vector<Ket> product;
  for (std::size_t s = 0; s < 4; ++s) product.push_back(Ket::basis(4, s));
  auto pe = born_probabilities(entangled_bos().initial_state(), product);
  CHECK(pe[0] == doctest::Approx(0.5));
  CHECK(pe[1] == doctest::Approx(0));
  CHECK(pe[2] == doctest::Approx(0));
  CHECK(pe[3] == doctest::Approx(0.5));

  std::mt19937_64 rng(3);
  Amplitude i(0, 1);
  std::vector<Ket> hadamard_y{ket({kInvSqrt2, i * kInvSqrt2}), ket({kInvSqrt2, -i * kInvSqrt2})};
  for (int k = 0; k < 200; ++k) {
    auto [a, b] = random_amplitudes(rng);
    double total = 0;
    for (double x : born_probabilities(ket({a, b}), hadamard_y)) total += x;
    CHECK(std::abs(total - 1) < 1e-10);
  }

  std::vector<Ket> skew{Ket::basis(2, 0), ket({kInvSqrt2, kInvSqrt2})};
  CHECK(kind_of([&] { born_probabilities(Ket::basis(2, 0), skew); }) ==
        gt::ErrorKind::kInvalidBasis);
  CHECK(kind_of([&] { born_probabilities(Ket::basis(2, 0), {Ket::basis(2, 0)}); }) ==
        gt::ErrorKind::kInvalidBasis);
}

TEST_CASE("density operators") {
  DensityOperator r = density_of(Ket::basis(4, 0));
  CHECK(r.matrix().isApprox(MatrixXcd(VectorXcd::Unit(4, 0).asDiagonal())));
  DensityOperator e = density_of(entangled_bos().initial_state());
  for (auto [i, j] : std::vector<std::pair<int, int>>{{0, 0}, {0, 3}, {3, 0}, {3, 3}}) {
    CHECK(std::abs(e(i, j) - 0.5) < 1e-15);
  }
  CHECK(std::abs(e.matrix().trace() - 1.0) < 1e-12);

  MatrixXcd not_hermitian = MatrixXcd::Identity(2, 2) / 2.0;
  not_hermitian(0, 1) = 0.1;
  CHECK(kind_of([&] { DensityOperator{not_hermitian}; }) == gt::ErrorKind::kInvalidState);
  CHECK(kind_of([] { DensityOperator{MatrixXcd::Identity(2, 2)}; }) ==
        gt::ErrorKind::kInvalidState);
  MatrixXcd negative(2, 2);
  negative << 1.5, 0, 0, -0.5;
  CHECK(kind_of([&] { DensityOperator{negative}; }) == gt::ErrorKind::kInvalidState);
}

TEST_CASE("I/X channel") {
  auto c = classical_bos();
  auto d11 = mw_final_density(c, 1, 1).diagonal();
  CHECK(d11 == std::vector<double>{1, 0, 0, 0});
  auto d00 = mw_final_density(c, 0, 0).diagonal();
  CHECK(d00 == std::vector<double>{0, 0, 0, 1});

  auto e = entangled_bos();
  for (double p : {0.0, 0.1, 0.37, 0.5, 1.0}) {
    for (double q : {0.0, 0.25, 0.8, 1.0}) {
      auto d = mw_final_density(e, p, q).diagonal();
      double same = (p * q + (1 - p) * (1 - q)) / 2;
      double diff = (p * (1 - q) + (1 - p) * q) / 2;
      CHECK(std::abs(d[0] - same) < 1e-12);
      CHECK(std::abs(d[1] - diff) < 1e-12);
      CHECK(std::abs(d[2] - diff) < 1e-12);
      CHECK(std::abs(d[3] - same) < 1e-12);
    }
  }
  CHECK(kind_of([&] { mw_final_density(e, -0.1, 0.5); }) == gt::ErrorKind::kInvalidArgument);
  CHECK(kind_of([&] { mw_expected_payoffs(e, 0.5, 1.5); }) == gt::ErrorKind::kInvalidArgument);
}

TEST_CASE("channel agrees with the explicit Kraus sum and stays a density operator") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    auto [a, b] = random_amplitudes(rng);
    QuantumizedGame qg(gt::scenarios::battle_of_the_sexes(), a, b);
    for (int i = 0; i <= 20; ++i) {
      for (int j = 0; j <= 20; ++j) {
        double p = i / 20.0;
        double q = j / 20.0;
        DensityOperator rho = mw_final_density(qg, p, q);
        CHECK((rho.matrix() - kraus_oracle(qg, p, q)).cwiseAbs().maxCoeff() < 1e-12);
        CHECK(std::abs(rho.matrix().trace() - 1.0) < 1e-10);
        CHECK(rho.eigenvalues().minCoeff() >= -1e-9);
        auto u = mw_expected_payoffs(qg, p, q);
        auto diag = rho.diagonal();
        double u1 = 3 * diag[0] + 2 * diag[3];
        CHECK(std::abs(u[0] - u1) < 1e-12);
      }
    }
  }
}

TEST_CASE("expected payoffs") {
  auto c = mw_expected_payoffs(classical_bos(), 1, 1);
  CHECK(c[0] == 3);
  CHECK(c[1] == 2);
  auto e = mw_expected_payoffs(entangled_bos(), 1, 1);
  CHECK(e[0] == doctest::Approx(2.5).epsilon(1e-14));
  CHECK(e[1] == doctest::Approx(2.5).epsilon(1e-14));
  auto m = mw_expected_payoffs(entangled_bos(), 1, 0);
  CHECK(std::abs(m[0]) < 1e-15);
  CHECK(std::abs(m[1]) < 1e-15);

  for (int i = 0; i <= 20; ++i) {
    for (int j = 0; j <= 20; ++j) {
      double p = i / 20.0;
      double q = j / 20.0;
      auto u = mw_expected_payoffs(entangled_bos(), p, q);
      auto v = mw_expected_payoffs(entangled_bos(), 1 - p, 1 - q);
      CHECK(std::abs(u[0] - v[0]) < 1e-12);
      CHECK(std::abs(u[1] - v[1]) < 1e-12);
    }
  }
}

TEST_CASE("classical limit matches mixed-strategy expected payoffs") {
  std::mt19937_64 rng(9);
  std::vector<gt::StrategicGame> games{gt::scenarios::battle_of_the_sexes(),
                                       gt::scenarios::prisoners_dilemma(),
                                       gt::scenarios::matching_pennies()};
  for (const auto& game : games) {
    QuantumizedGame qg(game, 1.0, 0.0);
    for (int i = 0; i <= 20; ++i) {
      for (int j = 0; j <= 20; ++j) {
        gt::Rational p(i, 20);
        gt::Rational q(j, 20);
        auto exact = gt::expected_payoff(game, {{p, 1 - p}, {q, 1 - q}});
        auto u = mw_expected_payoffs(qg, gt::to_double(p), gt::to_double(q));
        CHECK(std::abs(u[0] - gt::to_double(exact[0])) < 1e-10);
        CHECK(std::abs(u[1] - gt::to_double(exact[1])) < 1e-10);
      }
    }
  }
}

TEST_CASE("grid equilibria") {
  auto eq = mw_nash_search(entangled_bos(), 100);
  auto find = [&](std::size_t i, std::size_t j) {
    return std::find_if(eq.begin(), eq.end(),
                        [&](const GridEquilibrium& g) { return g.i == i && g.j == j; });
  };
  REQUIRE(find(0, 0) != eq.end());
  REQUIRE(find(100, 100) != eq.end());
  for (auto it : {find(0, 0), find(100, 100)}) {
    CHECK(it->payoffs[0] == doctest::Approx(2.5));
    CHECK(it->payoffs[1] == doctest::Approx(2.5));
  }
  // Every other grid equilibrium pays strictly less to both players.
  for (const auto& g : eq) {
    if ((g.i == 0 && g.j == 0) || (g.i == 100 && g.j == 100)) continue;
    CHECK(g.payoffs[0] < 2.5 - 1e-9);
    CHECK(g.payoffs[1] < 2.5 - 1e-9);
  }
  // Above the classical mixed equilibrium value 6/5.
  auto classical = gt::mixed_ne_2x2(gt::scenarios::battle_of_the_sexes());
  gt::Rational mixed_value = -1;
  for (const auto& m : classical) {
    if (m.profile[0][0] != 0 && m.profile[0][0] != 1) mixed_value = m.payoffs[0];
  }
  CHECK(mixed_value == gt::Rational(6, 5));
  CHECK(find(0, 0)->payoffs[0] > gt::to_double(mixed_value));

  auto plain = mw_nash_search(classical_bos(), 100);
  auto has = [&](std::size_t i, std::size_t j) {
    return std::any_of(plain.begin(), plain.end(),
                       [&](const GridEquilibrium& g) { return g.i == i && g.j == j; });
  };
  CHECK(has(100, 100));
  CHECK(has(0, 0));
  CHECK(has(60, 40));  // wife keeps O with 3/5, husband with 2/5
  CHECK(plain.size() == 3);

  gt::StrategicGame constant =
      gt::StrategicGame::bimatrix({"a", "b"}, {"a", "b"}, {{1, 1}, {1, 1}}, {{2, 2}, {2, 2}});
  CHECK(mw_nash_search(QuantumizedGame(constant, kInvSqrt2, kInvSqrt2), 10).size() == 121);

  CHECK(kind_of([] { mw_nash_search(entangled_bos(), 0); }) == gt::ErrorKind::kInvalidArgument);
  CHECK(kind_of([] {
          QuantumizedGame(gt::scenarios::rock_paper_scissors(), 1.0, 0.0);
        }) == gt::ErrorKind::kUnsupportedShape);
  CHECK(kind_of([] { QuantumizedGame(gt::scenarios::battle_of_the_sexes(), 1.0, 1.0); }) ==
        gt::ErrorKind::kInvalidState);
}
