#ifndef GT_RATIONAL_H_
#define GT_RATIONAL_H_

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gt {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "3", "-2/5", " 7 / 4 ". Throws Error(kParseError) otherwise.
Rational parse_rational(std::string_view text);

// "a" for integers, "a/b" otherwise; always in lowest terms.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

// Exact conversion of a finite binary64 value.
Rational from_double(double value);

std::vector<double> to_doubles(const std::vector<Rational>& values);

}  // namespace gt

#endif  // GT_RATIONAL_H_
