#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace highgenus {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;

/// "p/q" in lowest terms, or "p" for integers.
std::string to_string(const Rational& x);

/// Accepts "p", "p/q" and decimals such as "-0.25" or "1.5e-3". Throws ParseError.
Rational parse_rational(std::string_view text);

/// Fixed-point decimal with the given number of places, rounded half away from zero.
std::string to_decimal(const Rational& x, int places);

double to_double(const Rational& x);

Rational dot(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);

/// Rational power with integer exponent (negative allowed for nonzero base).
Rational rpow(const Rational& base, int exponent);

}  // namespace highgenus
