#ifndef GT_PADIC_QUANTUM_H_
#define GT_PADIC_QUANTUM_H_

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "gt/game.h"
#include "gt/padic.h"
#include "gt/padic_ext.h"

namespace gt::pq {

using padic::ExtElement;
using padic::NormValue;
using padic::PAdicNumber;
using padic::QuadraticExtension;

enum class InnerProduct { kSesquilinear, kBilinear };

using PAdicVector = std::vector<ExtElement>;

// Q_p(sqrt(mu))^n with a fixed inner-product convention. Every vector and
// operator used with a space must come from its field, so working precision
// is shared rather than mixed.
class PAdicHilbertSpace {
 public:
  PAdicHilbertSpace(std::size_t dimension, QuadraticExtension field,
                    InnerProduct convention = InnerProduct::kSesquilinear);

  std::size_t dimension() const { return n_; }
  const QuadraticExtension& field() const { return field_; }
  InnerProduct convention() const { return convention_; }

  PAdicVector basis(std::size_t i) const;
  PAdicVector zero_vector() const;

 private:
  std::size_t n_;
  QuadraticExtension field_;
  InnerProduct convention_;
};

class PAdicOperator {
 public:
  PAdicOperator(QuadraticExtension field, std::size_t n);  // zero operator
  PAdicOperator(QuadraticExtension field, std::vector<std::vector<ExtElement>> rows);

  static PAdicOperator identity(const QuadraticExtension& field, std::size_t n);
  // E_ij.
  static PAdicOperator unit(const QuadraticExtension& field, std::size_t n, std::size_t i,
                            std::size_t j);
  static PAdicOperator diagonal(const QuadraticExtension& field,
                                const std::vector<ExtElement>& entries);

  std::size_t dimension() const { return n_; }
  const QuadraticExtension& field() const { return field_; }
  const ExtElement& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  ExtElement& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }

  PAdicOperator adjoint() const;
  ExtElement trace() const;
  bool is_self_adjoint() const;

  friend PAdicOperator operator+(const PAdicOperator& a, const PAdicOperator& b);
  friend PAdicOperator operator-(const PAdicOperator& a, const PAdicOperator& b);
  friend PAdicOperator operator*(const PAdicOperator& a, const PAdicOperator& b);
  friend PAdicOperator operator*(const ExtElement& c, const PAdicOperator& a);
  PAdicVector apply(const PAdicVector& v) const;

  // Entrywise equality to working precision.
  friend bool operator==(const PAdicOperator& a, const PAdicOperator& b);

 private:
  QuadraticExtension field_;
  std::size_t n_;
  std::vector<ExtElement> a_;
};

// Self-adjoint with trace 1 to working precision; throws kInvalidState
// otherwise.
class StatisticalOperator {
 public:
  explicit StatisticalOperator(PAdicOperator rho);
  const PAdicOperator& op() const { return rho_; }

 private:
  PAdicOperator rho_;
};

// Self-adjoint members summing to the identity; throws kInvalidSOVM
// otherwise.
class SOVM {
 public:
  explicit SOVM(std::vector<PAdicOperator> members);
  const std::vector<PAdicOperator>& members() const { return members_; }

 private:
  std::vector<PAdicOperator> members_;
};

// Throws kInvalidArgument on a dimension or field mismatch.
ExtElement inner_product(const PAdicVector& u, const PAdicVector& v,
                         const PAdicHilbertSpace& space);

// max_i |v_i|.
NormValue ultranorm(const PAdicVector& v);

// v != 0 and <v, v> = 0 to working precision.
bool is_isotropic(const PAdicVector& v, const PAdicHilbertSpace& space);

// Deterministic Hensel search for an isotropic vector of the form
// (1, ..., 1, w, 0, ..., 0): integer seeds b = 0, 1, 2, ... for the sqrt(mu)
// part of w, with the rational part lifted by sqrt. nullopt when the space
// is one-dimensional or the search bound is exhausted.
std::optional<PAdicVector> find_isotropic_vector(const PAdicHilbertSpace& space);

// tr(rho sigma).
ExtElement omega(const StatisticalOperator& rho, const PAdicOperator& sigma);

struct Measurement {
  std::vector<PAdicNumber> values;  // omega_rho(M_i), in Q_p
  // The same values read back as rationals when every one is recognizable.
  std::optional<padic::PAdicDistribution> exact;
};

// {omega_rho(M_i)}; sums to 1 to working precision.
Measurement measurement_distribution(const StatisticalOperator& rho, const SOVM& m);

struct PQuantumResult {
  StatisticalOperator initial;
  StatisticalOperator final_state;
  Measurement distribution;  // over |OO>, |OF>, |FO>, |FF>
  std::array<PAdicNumber, 2> payoffs;
  std::array<std::optional<Rational>, 2> exact_payoffs;
};

// The I/X channel of the quantum module over Q_p(sqrt(mu)): psi =
// alpha|OO> + beta|FF>, rho = psi psi*, each player keeps the state with
// weight p_keep (resp. q_keep) and flips otherwise. Throws kUnsupportedShape
// unless the game is 2x2 and kInvalidState unless alpha conj(alpha) +
// beta conj(beta) = 1.
PQuantumResult padic_quantumize_2x2(const StrategicGame& game, const ExtElement& alpha,
                                    const ExtElement& beta, const Rational& p_keep,
                                    const Rational& q_keep);

// Exact gap between two payoff values with its p-adic norm and valuation.
padic::PAdicValue payoff_gap(const Rational& a, const Rational& b, std::uint32_t p);

}  // namespace gt::pq

#endif  // GT_PADIC_QUANTUM_H_
