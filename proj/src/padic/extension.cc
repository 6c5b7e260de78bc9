#include "gt/padic_ext.h"

#include "gt/error.h"

namespace gt::padic {
namespace {

void require_same_field(const ExtElement& a, const ExtElement& b) {
  GT_REQUIRE(a.x().prime() == b.x().prime(), ErrorKind::kPrimeMismatch,
             "extension elements over different primes");
  GT_REQUIRE(a.field() == b.field(), ErrorKind::kInvalidArgument,
             "extension elements from different fields");
}

}  // namespace

QuadraticExtension::QuadraticExtension(std::uint32_t p, std::int64_t mu, std::size_t precision) {
  require_prime(p);
  GT_REQUIRE(precision >= 3, ErrorKind::kInvalidArgument, "working precision must be at least 3");
  GT_REQUIRE(mu != 0, ErrorKind::kInvalidArgument, "mu must be nonzero");
  PAdicNumber value = PAdicNumber::from_rational(Rational(mu), p, precision);
  GT_REQUIRE(!is_square(value), ErrorKind::kInvalidArgument,
             std::to_string(mu) + " is a square in Q_" + std::to_string(p));
  data_ = std::make_shared<const Data>(Data{p, mu, precision, std::move(value)});
}

PAdicNumber QuadraticExtension::embed(const Rational& x) const {
  return PAdicNumber::from_rational(x, prime(), precision());
}

ExtElement QuadraticExtension::element(const Rational& x, const Rational& y) const {
  return ExtElement(data_, embed(x), embed(y));
}

ExtElement QuadraticExtension::element(PAdicNumber x, PAdicNumber y) const {
  GT_REQUIRE(x.prime() == prime() && y.prime() == prime(), ErrorKind::kPrimeMismatch,
             "component prime differs from the field prime");
  return ExtElement(data_, std::move(x), std::move(y));
}

ExtElement QuadraticExtension::lift(const PAdicNumber& x) const {
  return element(x, PAdicNumber(prime()));
}

ExtElement QuadraticExtension::zero() const { return element(0, 0); }
ExtElement QuadraticExtension::one() const { return element(1, 0); }
ExtElement QuadraticExtension::sqrt_mu() const { return element(0, 1); }

ExtElement QuadraticExtension::parse(std::string_view text) const {
  auto bar = text.find('|');
  if (bar == std::string_view::npos) return lift(PAdicNumber::parse_literal(text));
  return element(PAdicNumber::parse_literal(text.substr(0, bar)),
                 PAdicNumber::parse_literal(text.substr(bar + 1)));
}

PAdicNumber ExtElement::norm_form() const { return x_ * x_ - field_->mu_value * y_ * y_; }

NormValue ExtElement::norm() const {
  PAdicNumber n = norm_form();
  if (n.is_zero()) {
    // mu is a non-square, so x^2 - mu y^2 vanishes only with x = y = 0;
    // anything else is a precision collapse.
    GT_REQUIRE(is_zero(), ErrorKind::kInvalidArgument,
               "norm lost all precision for " + to_literal());
    return NormValue{x_.prime(), true, 0};
  }
  return NormValue{x_.prime(), false, -n.valuation()};
}

ExtElement ExtElement::inverse() const {
  PAdicNumber n = norm_form();
  GT_REQUIRE(!n.is_zero(), ErrorKind::kDivisionByZero, "inverse of zero in Q_p(sqrt(mu))");
  return ExtElement(field_, x_ / n, -(y_ / n));
}

ExtElement operator+(const ExtElement& a, const ExtElement& b) {
  require_same_field(a, b);
  return ExtElement(a.field_, a.x_ + b.x_, a.y_ + b.y_);
}

ExtElement operator-(const ExtElement& a, const ExtElement& b) {
  require_same_field(a, b);
  return ExtElement(a.field_, a.x_ - b.x_, a.y_ - b.y_);
}

ExtElement operator*(const ExtElement& a, const ExtElement& b) {
  require_same_field(a, b);
  return ExtElement(a.field_, a.x_ * b.x_ + a.field_->mu_value * a.y_ * b.y_,
                    a.x_ * b.y_ + a.y_ * b.x_);
}

ExtElement operator/(const ExtElement& a, const ExtElement& b) {
  require_same_field(a, b);
  return a * b.inverse();
}

std::string ExtElement::to_literal() const { return x_.to_literal() + "|" + y_.to_literal(); }

}  // namespace gt::padic
