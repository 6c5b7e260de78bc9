#include "gt/padic.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <optional>

#include "gt/error.h"

namespace gt::padic {
namespace {

using Digits = std::vector<std::uint32_t>;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) { return a * b % m; }

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t inverse_mod_p(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

// Strips factors of p, returning how many were removed.
std::int64_t strip(Integer& n, std::uint32_t p) {
  std::int64_t v = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

// Base-p digits of u mod p^n (u may be negative).
Digits residue_digits(Integer u, std::uint32_t p, std::size_t n) {
  Integer modulus = boost::multiprecision::pow(Integer(p), static_cast<unsigned>(n));
  u %= modulus;
  if (u < 0) u += modulus;
  Digits out(n);
  for (auto& d : out) {
    d = static_cast<std::uint32_t>(u % p);
    u /= p;
  }
  return out;
}

Digits mul_digits(const Digits& a, const Digits& b, std::uint32_t p, std::size_t n) {
  Digits r(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; i + j < n; ++j) {
      std::uint64_t t = r[i + j] + std::uint64_t{a[i]} * b[j] + carry;
      r[i + j] = static_cast<std::uint32_t>(t % p);
      carry = t / p;
    }
  }
  return r;
}

// a / b mod p^n for b a unit.
Digits div_digits(const Digits& a, const Digits& b, std::uint32_t p, std::size_t n) {
  Digits r(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(n));
  Digits q(n, 0);
  std::uint64_t inv = inverse_mod_p(b[0], p);
  for (std::size_t k = 0; k < n; ++k) {
    std::uint64_t qk = mul_mod(r[k], inv, p);
    q[k] = static_cast<std::uint32_t>(qk);
    if (qk == 0) continue;
    std::uint64_t borrow = 0;
    for (std::size_t j = 0; k + j < n; ++j) {
      std::uint64_t sub = qk * b[j] + borrow;
      std::int64_t digit = static_cast<std::int64_t>(r[k + j]) - static_cast<std::int64_t>(sub % p);
      borrow = sub / p;
      if (digit < 0) {
        digit += p;
        ++borrow;
      }
      r[k + j] = static_cast<std::uint32_t>(digit);
    }
  }
  return q;
}

// Square root of a quadratic residue a mod p (odd p), Tonelli-Shanks.
std::uint64_t sqrt_mod_p(std::uint64_t a, std::uint64_t p) {
  if (p % 4 == 3) return pow_mod(a, (p + 1) / 4, p);
  std::uint64_t q = p - 1;
  std::uint64_t s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  std::uint64_t z = 2;
  while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;
  std::uint64_t m = s;
  std::uint64_t c = pow_mod(z, q, p);
  std::uint64_t t = pow_mod(a, q, p);
  std::uint64_t r = pow_mod(a, (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t i = 0;
    std::uint64_t tt = t;
    while (tt != 1) {
      tt = mul_mod(tt, tt, p);
      ++i;
    }
    std::uint64_t b = c;
    for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = mul_mod(b, b, p);
    m = i;
    c = mul_mod(b, b, p);
    t = mul_mod(t, c, p);
    r = mul_mod(r, b, p);
  }
  return r;
}

void require_same_prime(const PAdicNumber& a, const PAdicNumber& b) {
  GT_REQUIRE(a.prime() == b.prime(), ErrorKind::kPrimeMismatch,
             "operands live in Q_" + std::to_string(a.prime()) + " and Q_" +
                 std::to_string(b.prime()));
}

std::int64_t add_sat(std::int64_t a, std::int64_t b) {
  if (a == kInfinity || b == kInfinity) return kInfinity;
  return a + b;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

void require_prime(std::uint64_t p) {
  GT_REQUIRE(p < (1ULL << 31) && is_prime(p), ErrorKind::kInvalidPrime,
             std::to_string(p) + " is not a supported prime");
}

std::int64_t valuation(const Rational& value, std::uint32_t p) {
  require_prime(p);
  if (value == 0) return kInfinity;
  Integer num = boost::multiprecision::numerator(value);
  Integer den = boost::multiprecision::denominator(value);
  return strip(num, p) - strip(den, p);
}

Rational norm(const Rational& value, std::uint32_t p) {
  std::int64_t v = valuation(value, p);
  if (v == kInfinity) return 0;
  Integer pw = boost::multiprecision::pow(Integer(p), static_cast<unsigned>(v < 0 ? -v : v));
  return v < 0 ? Rational(pw) : Rational(Integer(1), pw);
}

PAdicNumber::PAdicNumber(std::uint32_t p) : p_(p) { require_prime(p); }

PAdicNumber::PAdicNumber(std::uint32_t p, std::int64_t valuation, Digits digits,
                         std::int64_t zero_precision)
    : p_(p), valuation_(valuation), digits_(std::move(digits)), zero_precision_(zero_precision) {}

PAdicNumber PAdicNumber::zero(std::uint32_t p, std::int64_t absolute_precision) {
  require_prime(p);
  return PAdicNumber(p, 0, {}, absolute_precision);
}

PAdicNumber PAdicNumber::normalized(std::uint32_t p, std::int64_t valuation, Digits digits,
                                    std::int64_t absolute) {
  auto first = std::find_if(digits.begin(), digits.end(), [](std::uint32_t d) { return d != 0; });
  if (first == digits.end()) return PAdicNumber(p, 0, {}, absolute);
  std::int64_t shift = first - digits.begin();
  digits.erase(digits.begin(), first);
  return PAdicNumber(p, valuation + shift, std::move(digits), kInfinity);
}

PAdicNumber PAdicNumber::from_rational(const Rational& value, std::uint32_t p,
                                       std::size_t precision) {
  require_prime(p);
  GT_REQUIRE(precision >= 1, ErrorKind::kInvalidArgument, "precision must be at least 1");
  if (value == 0) return PAdicNumber(p);
  Integer num = boost::multiprecision::numerator(value);
  Integer den = boost::multiprecision::denominator(value);
  std::int64_t v = strip(num, p) - strip(den, p);
  Digits a = residue_digits(num, p, precision);
  Digits b = residue_digits(den, p, precision);
  return PAdicNumber(p, v, div_digits(a, b, p, precision), kInfinity);
}

PAdicNumber PAdicNumber::from_digits(std::uint32_t p, std::int64_t valuation, Digits digits) {
  require_prime(p);
  for (auto d : digits) {
    GT_REQUIRE(d < p, ErrorKind::kInvalidArgument, "digit out of range");
  }
  GT_REQUIRE(digits.empty() || digits.front() != 0, ErrorKind::kInvalidArgument,
             "leading unit digit must be nonzero");
  GT_REQUIRE(!digits.empty(), ErrorKind::kInvalidArgument, "use zero() for zero");
  return PAdicNumber(p, valuation, std::move(digits), kInfinity);
}

std::int64_t PAdicNumber::absolute_precision() const {
  if (is_zero()) return zero_precision_;
  return valuation_ + static_cast<std::int64_t>(digits_.size());
}

Rational PAdicNumber::norm() const {
  if (is_zero()) return 0;
  Integer pw = boost::multiprecision::pow(
      Integer(p_), static_cast<unsigned>(valuation_ < 0 ? -valuation_ : valuation_));
  return valuation_ < 0 ? Rational(pw) : Rational(Integer(1), pw);
}

Rational PAdicNumber::truncation() const {
  if (is_zero()) return 0;
  Integer unit = 0;
  for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) unit = unit * p_ + *it;
  Integer pw = boost::multiprecision::pow(
      Integer(p_), static_cast<unsigned>(valuation_ < 0 ? -valuation_ : valuation_));
  return valuation_ < 0 ? Rational(unit, pw) : Rational(unit * pw);
}

PAdicNumber PAdicNumber::with_absolute_precision(std::int64_t absolute) const {
  if (is_zero()) return PAdicNumber(p_, 0, {}, std::min(zero_precision_, absolute));
  if (absolute >= absolute_precision()) return *this;
  if (absolute <= valuation_) return PAdicNumber(p_, 0, {}, absolute);
  Digits kept(digits_.begin(), digits_.begin() + (absolute - valuation_));
  return PAdicNumber(p_, valuation_, std::move(kept), kInfinity);
}

PAdicNumber PAdicNumber::operator-() const {
  if (is_zero()) return *this;
  Digits out(digits_.size());
  out[0] = p_ - digits_[0];
  for (std::size_t k = 1; k < digits_.size(); ++k) out[k] = p_ - 1 - digits_[k];
  return PAdicNumber(p_, valuation_, std::move(out), kInfinity);
}

PAdicNumber operator+(const PAdicNumber& a, const PAdicNumber& b) {
  require_same_prime(a, b);
  const std::uint32_t p = a.p_;
  std::int64_t absolute = std::min(a.absolute_precision(), b.absolute_precision());
  if (a.is_zero() && a.zero_precision_ == kInfinity) return b;
  if (b.is_zero() && b.zero_precision_ == kInfinity) return a;
  std::int64_t low = std::min(a.valuation(), b.valuation());
  if (absolute <= low) return PAdicNumber(p, 0, {}, absolute);
  auto len = static_cast<std::size_t>(absolute - low);
  Digits out(len);
  std::uint64_t carry = 0;
  auto digit_at = [low](const PAdicNumber& x, std::size_t k) -> std::uint64_t {
    if (x.is_zero()) return 0;
    std::int64_t idx = low + static_cast<std::int64_t>(k) - x.valuation_;
    if (idx < 0 || idx >= static_cast<std::int64_t>(x.digits_.size())) return 0;
    return x.digits_[static_cast<std::size_t>(idx)];
  };
  for (std::size_t k = 0; k < len; ++k) {
    std::uint64_t t = digit_at(a, k) + digit_at(b, k) + carry;
    out[k] = static_cast<std::uint32_t>(t % p);
    carry = t / p;
  }
  return PAdicNumber::normalized(p, low, std::move(out), absolute);
}

PAdicNumber operator-(const PAdicNumber& a, const PAdicNumber& b) {
  require_same_prime(a, b);
  return a + (-b);
}

PAdicNumber operator*(const PAdicNumber& a, const PAdicNumber& b) {
  require_same_prime(a, b);
  const std::uint32_t p = a.p_;
  if (a.is_zero() || b.is_zero()) {
    // O(p^A) * y is O(p^(A + v(y))).
    std::int64_t absolute;
    if (a.is_zero() && b.is_zero()) {
      absolute = add_sat(a.zero_precision_, b.zero_precision_);
    } else if (a.is_zero()) {
      absolute = add_sat(a.zero_precision_, b.valuation_);
    } else {
      absolute = add_sat(b.zero_precision_, a.valuation_);
    }
    return PAdicNumber(p, 0, {}, absolute);
  }
  std::size_t n = std::min(a.digits_.size(), b.digits_.size());
  return PAdicNumber(p, a.valuation_ + b.valuation_, mul_digits(a.digits_, b.digits_, p, n),
                     kInfinity);
}

PAdicNumber operator/(const PAdicNumber& a, const PAdicNumber& b) {
  require_same_prime(a, b);
  GT_REQUIRE(!b.is_zero(), ErrorKind::kDivisionByZero, "division by a p-adic zero");
  if (a.is_zero()) {
    std::int64_t absolute =
        a.zero_precision_ == kInfinity ? kInfinity : a.zero_precision_ - b.valuation_;
    return PAdicNumber(a.p_, 0, {}, absolute);
  }
  std::size_t n = std::min(a.digits_.size(), b.digits_.size());
  return PAdicNumber(a.p_, a.valuation_ - b.valuation_, div_digits(a.digits_, b.digits_, a.p_, n),
                     kInfinity);
}

bool PAdicNumber::identical(const PAdicNumber& other) const {
  return p_ == other.p_ && digits_ == other.digits_ && valuation() == other.valuation() &&
         absolute_precision() == other.absolute_precision();
}

std::string PAdicNumber::to_literal() const {
  std::string p = std::to_string(p_);
  if (is_zero()) {
    if (zero_precision_ == kInfinity) return "inf@" + p;
    return "inf@" + p + "^" + std::to_string(zero_precision_);
  }
  std::string out = std::to_string(valuation_) + ":";
  for (std::size_t k = 0; k < digits_.size(); ++k) {
    if (k > 0) out += '.';
    out += std::to_string(digits_[k]);
  }
  return out + "@" + p + "^" + std::to_string(digits_.size());
}

namespace {

template <class T>
T parse_number(std::string_view text, std::string_view literal) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  GT_REQUIRE(ec == std::errc() && ptr == text.data() + text.size() && !text.empty(),
             ErrorKind::kParseError, "bad p-adic literal '" + std::string(literal) + "'");
  return value;
}

}  // namespace

PAdicNumber PAdicNumber::parse_literal(std::string_view text) {
  auto at = text.find('@');
  GT_REQUIRE(at != std::string_view::npos, ErrorKind::kParseError,
             "bad p-adic literal '" + std::string(text) + "': missing '@'");
  std::string_view head = text.substr(0, at);
  std::string_view tail = text.substr(at + 1);
  auto caret = tail.find('^');
  auto p = parse_number<std::uint32_t>(tail.substr(0, caret), text);
  require_prime(p);
  std::optional<std::int64_t> n;
  if (caret != std::string_view::npos) n = parse_number<std::int64_t>(tail.substr(caret + 1), text);
  if (head == "inf") return PAdicNumber(p, 0, {}, n.value_or(kInfinity));
  auto colon = head.find(':');
  GT_REQUIRE(colon != std::string_view::npos && n, ErrorKind::kParseError,
             "bad p-adic literal '" + std::string(text) + "'");
  auto v = parse_number<std::int64_t>(head.substr(0, colon), text);
  Digits digits;
  std::string_view rest = head.substr(colon + 1);
  while (true) {
    auto dot = rest.find('.');
    digits.push_back(parse_number<std::uint32_t>(rest.substr(0, dot), text));
    if (dot == std::string_view::npos) break;
    rest = rest.substr(dot + 1);
  }
  GT_REQUIRE(static_cast<std::int64_t>(digits.size()) == *n, ErrorKind::kParseError,
             "p-adic literal '" + std::string(text) + "' has the wrong digit count");
  for (auto d : digits) {
    GT_REQUIRE(d < p, ErrorKind::kParseError,
               "digit out of range in p-adic literal '" + std::string(text) + "'");
  }
  GT_REQUIRE(digits.front() != 0, ErrorKind::kParseError,
             "p-adic literal '" + std::string(text) + "' has a zero leading unit digit");
  return PAdicNumber(p, v, std::move(digits), kInfinity);
}

PAdicNumber padic_from_rational(const Integer& a, const Integer& b, std::uint32_t p,
                                std::size_t n) {
  GT_REQUIRE(b != 0, ErrorKind::kDivisionByZero, "zero denominator");
  require_prime(p);
  return PAdicNumber::from_rational(Rational(a, b), p, n);
}

Rational distance(const PAdicNumber& x, const PAdicNumber& y) { return (x - y).norm(); }

std::optional<Rational> recognize_rational(const PAdicNumber& x) {
  if (x.is_zero()) return Rational(0);
  const std::uint32_t p = x.prime();
  Integer modulus = boost::multiprecision::pow(Integer(p), static_cast<unsigned>(x.precision()));
  Integer unit = 0;
  for (auto it = x.digits().rbegin(); it != x.digits().rend(); ++it) unit = unit * p + *it;
  Integer bound = boost::multiprecision::sqrt(Integer(modulus / 2));
  // Extended Euclid on (modulus, unit), stopped at the first small remainder.
  Integer r0 = modulus, r1 = unit, s0 = 0, s1 = 1;
  while (r1 > bound) {
    Integer quotient = r0 / r1;
    Integer r2 = r0 - quotient * r1;
    Integer s2 = s0 - quotient * s1;
    r0 = r1, r1 = r2, s0 = s1, s1 = s2;
  }
  if (s1 == 0 || abs(s1) > bound || gcd(r1, s1) != 1) return std::nullopt;
  if (s1 < 0) r1 = -r1, s1 = -s1;
  Rational out(r1, s1);
  std::int64_t v = x.valuation();
  Integer pw = boost::multiprecision::pow(Integer(p), static_cast<unsigned>(v < 0 ? -v : v));
  return v < 0 ? Rational(out / pw) : Rational(out * pw);
}

bool is_square(const PAdicNumber& x) {
  if (x.is_zero()) return true;
  if (x.valuation() % 2 != 0) return false;
  const auto& d = x.digits();
  if (x.prime() == 2) {
    GT_REQUIRE(d.size() >= 3, ErrorKind::kInvalidArgument,
               "square test in Q_2 needs three known unit digits");
    return d[1] == 0 && d[2] == 0;
  }
  return pow_mod(d[0], (x.prime() - 1) / 2, x.prime()) == 1;
}

PAdicNumber sqrt(const PAdicNumber& x) {
  GT_REQUIRE(is_square(x), ErrorKind::kInvalidArgument,
             "no square root of " + x.to_literal() + " in Q_" + std::to_string(x.prime()));
  if (x.is_zero()) {
    std::int64_t a = x.absolute_precision();
    return PAdicNumber::zero(x.prime(), a == kInfinity ? kInfinity : a / 2);
  }
  const std::uint32_t p = x.prime();
  const std::size_t n = x.precision();
  const std::int64_t half = x.valuation() / 2;
  if (p == 2) {
    Integer u = 0;
    for (auto it = x.digits().rbegin(); it != x.digits().rend(); ++it) u = u * 2 + *it;
    Integer r = 1;
    for (std::size_t k = 3; k < n; ++k) {
      Integer mod = Integer(1) << (k + 1);
      Integer diff = r * r - u;
      if (diff % mod != 0) r += Integer(1) << (k - 1);
    }
    return PAdicNumber::from_digits(2, half, residue_digits(r, 2, n - 1));
  }
  PAdicNumber unit = PAdicNumber::from_digits(p, 0, x.digits());
  std::uint64_t r0 = sqrt_mod_p(x.digits()[0], p);
  r0 = std::min(r0, p - r0);
  PAdicNumber r = PAdicNumber::from_rational(Rational(r0), p, n);
  PAdicNumber two = PAdicNumber::from_rational(2, p, n);
  // Newton doubles the number of correct digits each round.
  for (std::size_t correct = 1; correct < n; correct *= 2) r = (r + unit / r) / two;
  return PAdicNumber::from_digits(p, half, r.digits());
}

std::int64_t find_nonresidue(std::uint32_t p) {
  require_prime(p);
  if (p == 2) return 3;
  if (p % 4 == 3) return -1;
  for (std::int64_t n = 2;; ++n) {
    if (!is_square(PAdicNumber::from_rational(Rational(n), p, 3))) return n;
  }
}

double NormValue::to_double() const {
  if (zero) return 0.0;
  return std::pow(static_cast<double>(prime), static_cast<double>(half_exponent) / 2.0);
}

std::string NormValue::to_string() const {
  if (zero) return "0";
  std::string p = std::to_string(prime);
  if (half_exponent % 2 != 0) return p + "^(" + std::to_string(half_exponent) + "/2)";
  std::int64_t e = half_exponent / 2;
  Integer pw = boost::multiprecision::pow(Integer(prime), static_cast<unsigned>(e < 0 ? -e : e));
  return e < 0 ? "1/" + pw.str() : pw.str();
}

bool operator<(const NormValue& a, const NormValue& b) {
  if (a.zero || b.zero) return a.zero && !b.zero;
  return a.half_exponent < b.half_exponent;
}

NormValue operator*(const NormValue& a, const NormValue& b) {
  if (a.zero || b.zero) return NormValue{a.prime, true, 0};
  return NormValue{a.prime, false, a.half_exponent + b.half_exponent};
}

NormValue norm_value(const PAdicNumber& x) {
  if (x.is_zero()) return NormValue{x.prime(), true, 0};
  return NormValue{x.prime(), false, -2 * x.valuation()};
}

bool norm_then_digits_less(const PAdicNumber& a, const PAdicNumber& b) {
  require_same_prime(a, b);
  NormValue na = norm_value(a);
  NormValue nb = norm_value(b);
  if (na < nb) return true;
  if (nb < na) return false;
  if (a.digits() != b.digits()) return a.digits() < b.digits();
  return a.absolute_precision() < b.absolute_precision();
}

bool distribution_check(const PAdicDistribution& d) {
  require_prime(d.prime);
  Rational total = 0;
  for (const auto& w : d.weights) total += w;
  return total == 1;
}

PAdicValue padic_expected_payoff(const std::vector<Rational>& payoffs,
                                 const PAdicDistribution& d) {
  GT_REQUIRE(payoffs.size() == d.weights.size(), ErrorKind::kInvalidArgument,
             "payoff and distribution lengths differ");
  GT_REQUIRE(distribution_check(d), ErrorKind::kInvalidArgument, "weights do not sum to 1");
  PAdicValue out;
  for (std::size_t i = 0; i < payoffs.size(); ++i) out.value += payoffs[i] * d.weights[i];
  out.norm = norm(out.value, d.prime);
  out.valuation = valuation(out.value, d.prime);
  return out;
}

PAdicNumber padic_expected_payoff(const std::vector<Rational>& payoffs,
                                  const std::vector<PAdicNumber>& weights) {
  GT_REQUIRE(payoffs.size() == weights.size() && !weights.empty(), ErrorKind::kInvalidArgument,
             "payoff and weight lengths differ");
  const std::uint32_t p = weights.front().prime();
  PAdicNumber total(p);
  for (std::size_t i = 0; i < payoffs.size(); ++i) {
    std::size_t n = std::max<std::size_t>(weights[i].precision(), kDefaultPrecision);
    total += PAdicNumber::from_rational(payoffs[i], p, n) * weights[i];
  }
  return total;
}

}  // namespace gt::padic
