#include "nefcone/numeric.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace nefcone {

Integer floor_div(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("floor_div: division by zero");
  Integer q = num / den;
  Integer r = num % den;
  if (r != 0 && ((r < 0) != (den < 0))) --q;
  return q;
}

Integer ceil_div(const Integer& num, const Integer& den) { return -floor_div(-num, den); }

Integer floor(const Rational& q) { return floor_div(numerator(q), denominator(q)); }

Integer ceil(const Rational& q) { return ceil_div(numerator(q), denominator(q)); }

Integer isqrt(const Integer& v) {
  if (v < 0) throw std::domain_error("isqrt: negative argument");
  return boost::multiprecision::sqrt(v);
}

bool is_perfect_square(const Integer& v) {
  if (v < 0) return false;
  Integer r = isqrt(v);
  return r * r == v;
}

std::int64_t to_int64(const Integer& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("integer does not fit in 64 bits: " + to_string(v));
  return v.convert_to<std::int64_t>();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (!all_digits(body))
    throw std::invalid_argument("not an integer literal: '" + std::string(text) + "'");
  Integer v{std::string(body)};
  return negative ? Integer(-v) : v;
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!all_digits(den_text))
    throw std::invalid_argument("bad denominator in rational '" + std::string(text) + "'");
  Integer den{std::string(den_text)};
  if (den == 0) throw std::invalid_argument("zero denominator in rational '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string to_string(const Integer& v) { return v.str(); }

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

std::string to_decimal(const Rational& q, int places) {
  Integer scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  // round half up: floor(q*scale + 1/2)
  Integer scaled = floor(q * Rational(scale) + Rational(1, 2));
  bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  Integer whole = scaled / scale;
  Integer frac = scaled % scale;
  std::string out = (negative ? "-" : "") + whole.str();
  if (places > 0) {
    std::string digits = frac.str();
    out += "." + std::string(static_cast<std::size_t>(places) - digits.size(), '0') + digits;
  }
  return out;
}

}  // namespace nefcone
