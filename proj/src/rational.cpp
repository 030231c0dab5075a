#include "highgenus/rational.hpp"

#include <cctype>

#include "highgenus/errors.hpp"

namespace highgenus {

std::string to_string(const Rational& x) {
  const Integer num = numerator(x);
  const Integer den = denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

Integer parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw Error(ErrorCode::ParseError, "malformed number \"" + std::string(whole) + "\"");
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw Error(ErrorCode::ParseError, "malformed number \"" + std::string(whole) + "\"");
  const auto first = digits.find_first_not_of('0');
  // leading zeros would select octal
  return first == std::string_view::npos ? Integer(0) : Integer(std::string(digits.substr(first)));
}

Integer ten_to(int e) {
  Integer out = 1;
  for (int i = 0; i < e; ++i) out *= 10;
  return out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view whole = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational value;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const Integer num = parse_integer(text.substr(0, slash), whole);
    const Integer den = parse_integer(text.substr(slash + 1), whole);
    if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in \"" + std::string(whole) + "\"");
    value = Rational(num, den);
  } else {
    int exponent = 0;
    if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
      std::string_view exp_text = text.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      if (exp_text.size() > 6) throw Error(ErrorCode::ParseError, "exponent too large in \"" + std::string(whole) + "\"");
      exponent = static_cast<int>(parse_integer(exp_text, whole).convert_to<long>());
      if (exp_negative) exponent = -exponent;
      text = text.substr(0, e);
    }
    std::string digits;
    int scale = 0;
    if (const auto dot = text.find('.'); dot != std::string_view::npos) {
      digits = std::string(text.substr(0, dot)) + std::string(text.substr(dot + 1));
      scale = static_cast<int>(text.size() - dot - 1);
      if (digits.empty()) throw Error(ErrorCode::ParseError, "malformed number \"" + std::string(whole) + "\"");
    } else {
      digits = std::string(text);
    }
    const Integer mantissa = parse_integer(digits, whole);
    exponent -= scale;
    value = exponent >= 0 ? Rational(mantissa * ten_to(exponent)) : Rational(mantissa, ten_to(-exponent));
  }
  return negative ? Rational(-value) : value;
}

std::string to_decimal(const Rational& x, int places) {
  const Integer scale = ten_to(places);
  const Rational scaled = abs(x) * scale;
  // round half away from zero
  const Integer rounded = (2 * numerator(scaled) + denominator(scaled)) / (2 * denominator(scaled));
  std::string digits = rounded.str();
  if (static_cast<int>(digits.size()) <= places) digits.insert(0, places + 1 - digits.size(), '0');
  std::string out = (x < 0 && rounded != 0) ? "-" : "";
  out += digits.substr(0, digits.size() - places);
  if (places > 0) out += "." + digits.substr(digits.size() - places);
  return out;
}

double to_double(const Rational& x) { return x.convert_to<double>(); }

Rational dot(const Vec& a, const Vec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Rational rpow(const Rational& base, int exponent) {
  if (exponent < 0) {
    if (base == 0) throw Error(ErrorCode::DomainError, "zero to a negative power");
    return 1 / rpow(base, -exponent);
  }
  Rational out = 1;
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

}  // namespace highgenus
