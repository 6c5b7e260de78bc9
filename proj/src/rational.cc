#include "gt/rational.h"

#include <cctype>
#include <cmath>

#include "gt/error.h"

namespace gt {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidProfile: return "InvalidProfile";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kUnsupportedShape: return "UnsupportedShape";
    case ErrorKind::kDegenerateGame: return "DegenerateGame";
    case ErrorKind::kNoEquilibrium: return "NoEquilibrium";
    case ErrorKind::kUndefinedRatio: return "UndefinedRatio";
    case ErrorKind::kInfeasibleBargain: return "InfeasibleBargain";
    case ErrorKind::kStepLimit: return "StepLimit";
    case ErrorKind::kInvalidState: return "InvalidState";
    case ErrorKind::kIntegrationDiverged: return "IntegrationDiverged";
    case ErrorKind::kUnsupportedMatrix: return "UnsupportedMatrix";
    case ErrorKind::kInsufficientData: return "InsufficientData";
    case ErrorKind::kInvalidBasis: return "InvalidBasis";
    case ErrorKind::kDivisionByZero: return "DivisionByZero";
    case ErrorKind::kInvalidPrime: return "InvalidPrime";
    case ErrorKind::kPrimeMismatch: return "PrimeMismatch";
    case ErrorKind::kInvalidSOVM: return "InvalidSOVM";
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kSizeLimit: return "SizeLimit";
  }
  return "Unknown";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  s = trim(s);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) {
    throw Error(ErrorKind::kParseError, "not a rational: '" + std::string(whole) + "'");
  }
  Integer value = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw Error(ErrorKind::kParseError, "not a rational: '" + std::string(whole) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return negative ? Integer(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  Integer num = parse_integer(text.substr(0, slash), text);
  Integer den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) {
    throw Error(ErrorKind::kParseError, "zero denominator in '" + std::string(text) + "'");
  }
  if (den < 0) num = -num, den = -den;
  return Rational(num, den);
}

std::string to_string(const Rational& value) {
  const Integer& den = boost::multiprecision::denominator(value);
  if (den == 1) return boost::multiprecision::numerator(value).str();
  return boost::multiprecision::numerator(value).str() + "/" + den.str();
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

Rational from_double(double value) {
  GT_REQUIRE(std::isfinite(value), ErrorKind::kInvalidArgument, "non-finite value");
  int exponent = 0;
  double mantissa = std::frexp(value, &exponent);
  // 53 significant bits become an exact integer.
  const auto scaled = static_cast<long long>(std::ldexp(mantissa, 53));
  exponent -= 53;
  Rational result(scaled);
  Integer power = 1;
  power <<= std::abs(exponent);
  return exponent >= 0 ? Rational(result * power) : Rational(result / power);
}

std::vector<double> to_doubles(const std::vector<Rational>& values) {
  std::vector<double> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(to_double(v));
  return out;
}

}  // namespace gt
