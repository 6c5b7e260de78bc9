#ifndef GT_PADIC_EXT_H_
#define GT_PADIC_EXT_H_

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include "gt/padic.h"

namespace gt::padic {

class ExtElement;

// Q_p(sqrt(mu)) for a non-square mu, at a fixed working precision.
class QuadraticExtension {
 public:
  // Throws kInvalidArgument when mu is a square (or zero) in Q_p.
  QuadraticExtension(std::uint32_t p, std::int64_t mu, std::size_t precision = kDefaultPrecision);

  std::uint32_t prime() const { return data_->p; }
  std::int64_t mu() const { return data_->mu; }
  std::size_t precision() const { return data_->precision; }
  const PAdicNumber& mu_value() const { return data_->mu_value; }

  ExtElement element(const Rational& x, const Rational& y = 0) const;
  ExtElement element(PAdicNumber x, PAdicNumber y) const;
  ExtElement lift(const PAdicNumber& x) const;
  PAdicNumber embed(const Rational& x) const;
  ExtElement zero() const;
  ExtElement one() const;
  ExtElement sqrt_mu() const;

  // Parses "x|y" (each a p-adic literal) or a bare p-adic literal.
  ExtElement parse(std::string_view text) const;

  friend bool operator==(const QuadraticExtension& a, const QuadraticExtension& b) {
    return a.prime() == b.prime() && a.mu() == b.mu() && a.precision() == b.precision();
  }

 private:
  friend class ExtElement;
  struct Data {
    std::uint32_t p;
    std::int64_t mu;
    std::size_t precision;
    PAdicNumber mu_value;
  };
  explicit QuadraticExtension(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;
};

// x + y sqrt(mu).
class ExtElement {
 public:
  const PAdicNumber& x() const { return x_; }
  const PAdicNumber& y() const { return y_; }
  QuadraticExtension field() const { return QuadraticExtension(field_); }

  bool is_zero() const { return x_.is_zero() && y_.is_zero(); }
  bool in_base_field() const { return y_.is_zero(); }

  ExtElement conj() const { return ExtElement(field_, x_, -y_); }
  // z conj(z) = x^2 - mu y^2, an element of Q_p.
  PAdicNumber norm_form() const;
  // |z| = sqrt(|z conj(z)|_p); extends the p-adic norm of Q_p.
  NormValue norm() const;
  ExtElement inverse() const;

  ExtElement operator-() const { return ExtElement(field_, -x_, -y_); }
  friend ExtElement operator+(const ExtElement& a, const ExtElement& b);
  friend ExtElement operator-(const ExtElement& a, const ExtElement& b);
  friend ExtElement operator*(const ExtElement& a, const ExtElement& b);
  friend ExtElement operator/(const ExtElement& a, const ExtElement& b);
  ExtElement& operator+=(const ExtElement& b) { return *this = *this + b; }
  ExtElement& operator*=(const ExtElement& b) { return *this = *this * b; }

  // Equal to working precision.
  friend bool operator==(const ExtElement& a, const ExtElement& b) { return (a - b).is_zero(); }

  // "x|y" with p-adic literals.
  std::string to_literal() const;

 private:
  friend class QuadraticExtension;
  ExtElement(std::shared_ptr<const QuadraticExtension::Data> field, PAdicNumber x, PAdicNumber y)
      : field_(std::move(field)), x_(std::move(x)), y_(std::move(y)) {}
  std::shared_ptr<const QuadraticExtension::Data> field_;
  PAdicNumber x_;
  PAdicNumber y_;
};

}  // namespace gt::padic

#endif  // GT_PADIC_EXT_H_
