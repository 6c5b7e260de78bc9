#include "gt/padic_quantum.h"

#include <algorithm>

#include "gt/error.h"

namespace gt::pq {
namespace {

void require_field(const QuadraticExtension& expected, const ExtElement& z) {
  GT_REQUIRE(z.field() == expected, ErrorKind::kInvalidArgument,
             "element does not belong to the space's field");
}

void require_compatible(const PAdicOperator& a, const PAdicOperator& b) {
  GT_REQUIRE(a.dimension() == b.dimension(), ErrorKind::kInvalidArgument,
             "operator dimensions differ");
  GT_REQUIRE(a.field() == b.field(), ErrorKind::kInvalidArgument,
             "operators over different fields");
}

}  // namespace

PAdicHilbertSpace::PAdicHilbertSpace(std::size_t dimension, QuadraticExtension field,
                                     InnerProduct convention)
    : n_(dimension), field_(std::move(field)), convention_(convention) {
  GT_REQUIRE(n_ >= 1, ErrorKind::kInvalidArgument, "dimension must be at least 1");
}

PAdicVector PAdicHilbertSpace::basis(std::size_t i) const {
  GT_REQUIRE(i < n_, ErrorKind::kInvalidArgument, "basis index out of range");
  PAdicVector v = zero_vector();
  v[i] = field_.one();
  return v;
}

PAdicVector PAdicHilbertSpace::zero_vector() const { return PAdicVector(n_, field_.zero()); }

PAdicOperator::PAdicOperator(QuadraticExtension field, std::size_t n)
    : field_(std::move(field)), n_(n), a_(n * n, field_.zero()) {
  GT_REQUIRE(n_ >= 1, ErrorKind::kInvalidArgument, "dimension must be at least 1");
}

PAdicOperator::PAdicOperator(QuadraticExtension field, std::vector<std::vector<ExtElement>> rows)
    : field_(std::move(field)), n_(rows.size()) {
  GT_REQUIRE(n_ >= 1, ErrorKind::kInvalidArgument, "dimension must be at least 1");
  for (auto& row : rows) {
    GT_REQUIRE(row.size() == n_, ErrorKind::kInvalidArgument, "operator matrix must be square");
    for (auto& z : row) {
      require_field(field_, z);
      a_.push_back(std::move(z));
    }
  }
}

PAdicOperator PAdicOperator::identity(const QuadraticExtension& field, std::size_t n) {
  PAdicOperator out(field, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = field.one();
  return out;
}

PAdicOperator PAdicOperator::unit(const QuadraticExtension& field, std::size_t n, std::size_t i,
                                  std::size_t j) {
  GT_REQUIRE(i < n && j < n, ErrorKind::kInvalidArgument, "matrix unit index out of range");
  PAdicOperator out(field, n);
  out(i, j) = field.one();
  return out;
}

PAdicOperator PAdicOperator::diagonal(const QuadraticExtension& field,
                                      const std::vector<ExtElement>& entries) {
  PAdicOperator out(field, entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    require_field(field, entries[i]);
    out(i, i) = entries[i];
  }
  return out;
}

PAdicOperator PAdicOperator::adjoint() const {
  PAdicOperator out(field_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) out(i, j) = (*this)(j, i).conj();
  }
  return out;
}

ExtElement PAdicOperator::trace() const {
  ExtElement t = field_.zero();
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

bool PAdicOperator::is_self_adjoint() const { return *this == adjoint(); }

PAdicOperator operator+(const PAdicOperator& a, const PAdicOperator& b) {
  require_compatible(a, b);
  PAdicOperator out = a;
  for (std::size_t k = 0; k < out.a_.size(); ++k) out.a_[k] += b.a_[k];
  return out;
}

PAdicOperator operator-(const PAdicOperator& a, const PAdicOperator& b) {
  require_compatible(a, b);
  PAdicOperator out = a;
  for (std::size_t k = 0; k < out.a_.size(); ++k) out.a_[k] = a.a_[k] - b.a_[k];
  return out;
}

PAdicOperator operator*(const PAdicOperator& a, const PAdicOperator& b) {
  require_compatible(a, b);
  const std::size_t n = a.n_;
  PAdicOperator out(a.field_, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

PAdicOperator operator*(const ExtElement& c, const PAdicOperator& a) {
  require_field(a.field_, c);
  PAdicOperator out = a;
  for (auto& z : out.a_) z = c * z;
  return out;
}

PAdicVector PAdicOperator::apply(const PAdicVector& v) const {
  GT_REQUIRE(v.size() == n_, ErrorKind::kInvalidArgument, "vector dimension differs");
  PAdicVector out(n_, field_.zero());
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) out[i] += (*this)(i, j) * v[j];
  }
  return out;
}

bool operator==(const PAdicOperator& a, const PAdicOperator& b) {
  if (a.n_ != b.n_ || !(a.field_ == b.field_)) return false;
  for (std::size_t k = 0; k < a.a_.size(); ++k) {
    if (!(a.a_[k] == b.a_[k])) return false;
  }
  return true;
}

StatisticalOperator::StatisticalOperator(PAdicOperator rho) : rho_(std::move(rho)) {
  GT_REQUIRE(rho_.is_self_adjoint(), ErrorKind::kInvalidState,
             "statistical operator is not self-adjoint");
  GT_REQUIRE(rho_.trace() == rho_.field().one(), ErrorKind::kInvalidState,
             "statistical operator trace is not 1");
}

SOVM::SOVM(std::vector<PAdicOperator> members) : members_(std::move(members)) {
  GT_REQUIRE(!members_.empty(), ErrorKind::kInvalidSOVM, "SOVM has no members");
  const auto& field = members_.front().field();
  const std::size_t n = members_.front().dimension();
  PAdicOperator total(field, n);
  for (const auto& m : members_) {
    GT_REQUIRE(m.dimension() == n && m.field() == field, ErrorKind::kInvalidSOVM,
               "SOVM members differ in shape or field");
    GT_REQUIRE(m.is_self_adjoint(), ErrorKind::kInvalidSOVM, "SOVM member is not self-adjoint");
    total = total + m;
  }
  GT_REQUIRE(total == PAdicOperator::identity(field, n), ErrorKind::kInvalidSOVM,
             "SOVM members do not sum to the identity");
}

ExtElement inner_product(const PAdicVector& u, const PAdicVector& v,
                         const PAdicHilbertSpace& space) {
  GT_REQUIRE(u.size() == space.dimension() && v.size() == space.dimension(),
             ErrorKind::kInvalidArgument, "vector dimension differs from the space");
  ExtElement out = space.field().zero();
  for (std::size_t i = 0; i < u.size(); ++i) {
    require_field(space.field(), u[i]);
    require_field(space.field(), v[i]);
    const ExtElement left = space.convention() == InnerProduct::kSesquilinear ? u[i].conj() : u[i];
    out += left * v[i];
  }
  return out;
}

NormValue ultranorm(const PAdicVector& v) {
  GT_REQUIRE(!v.empty(), ErrorKind::kInvalidArgument, "empty vector");
  NormValue best = v.front().norm();
  for (const auto& z : v) best = std::max(best, z.norm());
  return best;
}

bool is_isotropic(const PAdicVector& v, const PAdicHilbertSpace& space) {
  bool nonzero = std::any_of(v.begin(), v.end(), [](const ExtElement& z) { return !z.is_zero(); });
  return nonzero && inner_product(v, v, space).is_zero();
}

std::optional<PAdicVector> find_isotropic_vector(const PAdicHilbertSpace& space) {
  const QuadraticExtension& f = space.field();
  const std::size_t n = space.dimension();
  const std::int64_t bound = 4 * static_cast<std::int64_t>(f.prime()) + 8;
  auto candidate = [&](std::size_t ones, const ExtElement& w) -> std::optional<PAdicVector> {
    PAdicVector v = space.zero_vector();
    for (std::size_t i = 0; i < ones; ++i) v[i] = f.one();
    v[ones] = w;
    if (is_isotropic(v, space)) return v;
    return std::nullopt;
  };
  // `ones` leading entries contribute `ones` to <v, v>; w must supply -ones.
  for (std::size_t ones = 1; ones < n; ++ones) {
    const PAdicNumber target = f.embed(-Rational(static_cast<std::int64_t>(ones)));
    if (space.convention() == InnerProduct::kSesquilinear) {
      // w conj(w) = a^2 - mu b^2 = -ones.
      for (std::int64_t b = 0; b <= bound; ++b) {
        PAdicNumber bb = f.embed(b);
        PAdicNumber a2 = target + f.mu_value() * bb * bb;
        if (!padic::is_square(a2)) continue;
        if (auto v = candidate(ones, f.element(padic::sqrt(a2), bb))) return v;
      }
    } else {
      // w^2 = -ones with w = a (a^2 = -ones) or w = b sqrt(mu) (mu b^2 = -ones).
      if (padic::is_square(target)) {
        if (auto v = candidate(ones, f.lift(padic::sqrt(target)))) return v;
      }
      PAdicNumber b2 = target / f.mu_value();
      if (padic::is_square(b2)) {
        if (auto v = candidate(ones, f.element(PAdicNumber(f.prime()), padic::sqrt(b2)))) return v;
      }
    }
  }
  return std::nullopt;
}

ExtElement omega(const StatisticalOperator& rho, const PAdicOperator& sigma) {
  return (rho.op() * sigma).trace();
}

Measurement measurement_distribution(const StatisticalOperator& rho, const SOVM& m) {
  GT_REQUIRE(m.members().front().dimension() == rho.op().dimension() &&
                 m.members().front().field() == rho.op().field(),
             ErrorKind::kInvalidArgument, "SOVM and statistical operator are incompatible");
  Measurement out;
  padic::PAdicDistribution exact{rho.op().field().prime(), {}};
  bool recognized = true;
  for (const auto& member : m.members()) {
    ExtElement w = omega(rho, member);
    // Both operators are self-adjoint, so tr(rho M) = conj(tr(rho M)).
    GT_REQUIRE(w.y().is_zero(), ErrorKind::kInvalidState, "measurement value left Q_p");
    out.values.push_back(w.x());
    if (auto r = padic::recognize_rational(w.x())) {
      exact.weights.push_back(*r);
    } else {
      recognized = false;
    }
  }
  if (recognized && padic::distribution_check(exact)) out.exact = std::move(exact);
  return out;
}

PQuantumResult padic_quantumize_2x2(const StrategicGame& game, const ExtElement& alpha,
                                    const ExtElement& beta, const Rational& p_keep,
                                    const Rational& q_keep) {
  GT_REQUIRE(game.is_two_by_two(), ErrorKind::kUnsupportedShape,
             "p-adic quantumization needs a 2x2 game");
  const QuadraticExtension f = alpha.field();
  GT_REQUIRE(beta.field() == f, ErrorKind::kInvalidArgument,
             "alpha and beta from different fields");
  GT_REQUIRE(alpha * alpha.conj() + beta * beta.conj() == f.one(), ErrorKind::kInvalidState,
             "alpha conj(alpha) + beta conj(beta) must be 1");

  const PAdicVector psi{alpha, f.zero(), f.zero(), beta};
  PAdicOperator rho(f, 4);
  for (std::size_t s = 0; s < 4; ++s) {
    for (std::size_t t = 0; t < 4; ++t) rho(s, t) = psi[s] * psi[t].conj();
  }
  // Weight index doubles as the flip mask: I(x)I, I(x)X, X(x)I, X(x)X.
  const std::array<Rational, 4> w{p_keep * q_keep, p_keep * (1 - q_keep), (1 - p_keep) * q_keep,
                                  (1 - p_keep) * (1 - q_keep)};
  PAdicOperator out(f, 4);
  for (std::size_t k = 0; k < 4; ++k) {
    if (w[k] == 0) continue;
    const ExtElement wk = f.element(w[k]);
    for (std::size_t s = 0; s < 4; ++s) {
      for (std::size_t t = 0; t < 4; ++t) out(s, t) += wk * rho(s ^ k, t ^ k);
    }
  }

  std::vector<PAdicOperator> projectors;
  for (std::size_t s = 0; s < 4; ++s) projectors.push_back(PAdicOperator::unit(f, 4, s, s));
  StatisticalOperator initial(rho);
  StatisticalOperator final_state(out);
  Measurement dist = measurement_distribution(final_state, SOVM(std::move(projectors)));

  std::array<std::vector<Rational>, 2> u;
  for (std::size_t s = 0; s < 4; ++s) {
    PayoffVector v = payoff(game, {s >> 1, s & 1});
    u[0].push_back(v[0]);
    u[1].push_back(v[1]);
  }
  std::array<PAdicNumber, 2> payoffs{padic::padic_expected_payoff(u[0], dist.values),
                                     padic::padic_expected_payoff(u[1], dist.values)};
  std::array<std::optional<Rational>, 2> exact;
  for (std::size_t i = 0; i < 2; ++i) {
    if (dist.exact) {
      exact[i] = padic::padic_expected_payoff(u[i], *dist.exact).value;
    } else {
      exact[i] = padic::recognize_rational(payoffs[i]);
    }
  }
  return PQuantumResult{std::move(initial), std::move(final_state), std::move(dist), payoffs,
                        exact};
}

padic::PAdicValue payoff_gap(const Rational& a, const Rational& b, std::uint32_t p) {
  Rational gap = a - b;
  return {gap, padic::norm(gap, p), padic::valuation(gap, p)};
}

}  // namespace gt::pq
