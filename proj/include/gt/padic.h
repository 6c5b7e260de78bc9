#ifndef GT_PADIC_H_
#define GT_PADIC_H_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gt/rational.h"

namespace gt::padic {

inline constexpr std::size_t kDefaultPrecision = 32;
inline constexpr std::int64_t kInfinity = std::numeric_limits<std::int64_t>::max();

bool is_prime(std::uint64_t n);

// Throws kInvalidPrime unless p is a prime below 2^31.
void require_prime(std::uint64_t p);

// nu_p of a rational; kInfinity for zero.
std::int64_t valuation(const Rational& value, std::uint32_t p);

// |value|_p = p^-nu_p(value), 0 for zero.
Rational norm(const Rational& value, std::uint32_t p);

// Element of Q_p known to finite precision: p^valuation * (d0 + d1 p + ...),
// d0 != 0, with one stored digit per known unit digit (relative precision).
// Zero has no digits and carries the absolute precision to which it is
// known (kInfinity for an exact zero).
class PAdicNumber {
 public:
  // Exact zero in Q_p.
  explicit PAdicNumber(std::uint32_t p);

  static PAdicNumber zero(std::uint32_t p, std::int64_t absolute_precision = kInfinity);
  // Expansion of `value` to relative precision `precision`.
  static PAdicNumber from_rational(const Rational& value, std::uint32_t p,
                                   std::size_t precision = kDefaultPrecision);
  // Builds from explicit unit digits; throws kInvalidArgument on a leading
  // zero digit or a digit out of range.
  static PAdicNumber from_digits(std::uint32_t p, std::int64_t valuation,
                                 std::vector<std::uint32_t> digits);

  std::uint32_t prime() const { return p_; }
  bool is_zero() const { return digits_.empty(); }
  // kInfinity for zero.
  std::int64_t valuation() const { return is_zero() ? kInfinity : valuation_; }
  // Number of known unit digits; 0 for zero.
  std::size_t precision() const { return digits_.size(); }
  // The value is known modulo p^absolute_precision().
  std::int64_t absolute_precision() const;
  const std::vector<std::uint32_t>& digits() const { return digits_; }

  // |x|_p.
  Rational norm() const;
  // sum d_k p^(valuation + k): the rational the digits spell out.
  Rational truncation() const;

  // Drops digits beyond the given absolute precision.
  PAdicNumber with_absolute_precision(std::int64_t absolute) const;

  PAdicNumber operator-() const;
  friend PAdicNumber operator+(const PAdicNumber& a, const PAdicNumber& b);
  friend PAdicNumber operator-(const PAdicNumber& a, const PAdicNumber& b);
  friend PAdicNumber operator*(const PAdicNumber& a, const PAdicNumber& b);
  friend PAdicNumber operator/(const PAdicNumber& a, const PAdicNumber& b);
  PAdicNumber& operator+=(const PAdicNumber& b) { return *this = *this + b; }
  PAdicNumber& operator-=(const PAdicNumber& b) { return *this = *this - b; }
  PAdicNumber& operator*=(const PAdicNumber& b) { return *this = *this * b; }

  // Equal to working precision: the difference is zero.
  friend bool operator==(const PAdicNumber& a, const PAdicNumber& b) { return (a - b).is_zero(); }

  // Same prime, valuation, digits and absolute precision.
  bool identical(const PAdicNumber& other) const;

  // "valuation:d0.d1.d2@p^N"; zero prints as "inf@p^A" (A = absolute
  // precision) or "inf@p" when exact.
  std::string to_literal() const;
  static PAdicNumber parse_literal(std::string_view text);

 private:
  PAdicNumber(std::uint32_t p, std::int64_t valuation, std::vector<std::uint32_t> digits,
              std::int64_t zero_precision);
  // Strips low zero digits; collapses to zero at absolute precision `absolute`.
  static PAdicNumber normalized(std::uint32_t p, std::int64_t valuation,
                                std::vector<std::uint32_t> digits, std::int64_t absolute);

  std::uint32_t p_;
  std::int64_t valuation_ = 0;
  std::vector<std::uint32_t> digits_;
  std::int64_t zero_precision_ = kInfinity;
};

// a/b in Q_p to relative precision n. Throws kDivisionByZero for b = 0.
PAdicNumber padic_from_rational(const Integer& a, const Integer& b, std::uint32_t p,
                                std::size_t n = kDefaultPrecision);

// d_p(x, y) = |x - y|_p.
Rational distance(const PAdicNumber& x, const PAdicNumber& y);

// Smallest-height rational a/b (|a|, |b| <= sqrt(p^N / 2), N = known unit
// digits) agreeing with x to its precision; nullopt when none exists. Used
// to read exact values back out of p-adic computations.
std::optional<Rational> recognize_rational(const PAdicNumber& x);

// Square test via Hensel's lemma. Zero counts as a square (0 = 0^2). For
// p = 2 at least three unit digits are required.
bool is_square(const PAdicNumber& x);

// Hensel-lifted square root; the root whose first unit digit is the smaller
// of the two candidates. Throws kInvalidArgument if x is not a square. For
// p = 2 the result carries one digit less than x.
PAdicNumber sqrt(const PAdicNumber& x);

// A non-square of Q_p: -1 when p = 3 mod 4, 3 when p = 2, otherwise the
// smallest positive integer that is not a square.
std::int64_t find_nonresidue(std::uint32_t p);

// p^(half_exponent / 2), or zero.
struct NormValue {
  std::uint32_t prime = 2;
  bool zero = true;
  std::int64_t half_exponent = 0;

  double to_double() const;
  // "0", "1/49", "7", "7^(-1/2)".
  std::string to_string() const;

  friend bool operator==(const NormValue&, const NormValue&) = default;
  friend bool operator<(const NormValue& a, const NormValue& b);
  friend NormValue operator*(const NormValue& a, const NormValue& b);
};

NormValue norm_value(const PAdicNumber& x);

// Non-canonical total preorder on Q_p for ranking p-adic payoffs: smaller
// norm first, then lexicographic on (valuation, digits). Q_p has no order
// compatible with its field structure.
bool norm_then_digits_less(const PAdicNumber& a, const PAdicNumber& b);

// Finite sequence of rationals read in Q_p; a distribution when it sums to 1.
struct PAdicDistribution {
  std::uint32_t prime = 2;
  std::vector<Rational> weights;
};

// Exact sum equals 1; signs and magnitudes are unrestricted.
bool distribution_check(const PAdicDistribution& d);

struct PAdicValue {
  Rational value;
  Rational norm;
  std::int64_t valuation = kInfinity;
};

// sum_i d_i u_i, with its p-adic norm and valuation. Throws kInvalidArgument
// on a length mismatch or when d is not a distribution.
PAdicValue padic_expected_payoff(const std::vector<Rational>& payoffs, const PAdicDistribution& d);

// Same pairing with p-adic weights (for distributions produced by p-adic
// measurements).
PAdicNumber padic_expected_payoff(const std::vector<Rational>& payoffs,
                                  const std::vector<PAdicNumber>& weights);

}  // namespace gt::padic

#endif  // GT_PADIC_H_
