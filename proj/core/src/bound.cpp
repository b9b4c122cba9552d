#include "nefcone/bound.hpp"

#include "nefcone/errors.hpp"

namespace nefcone {

namespace {

std::strong_ordering compare_rational(const Rational& a, const Rational& b) {
  if (a < b) return std::strong_ordering::less;
  if (b < a) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace

Bound Bound::rational(Rational value, std::string provenance) {
  if (value < 0) throw PreconditionError("bound value must be non-negative, got " + to_string(value), "bounds on tau and Seshadri constants are non-negative");
  return {Kind::rational, std::move(value), std::move(provenance)};
}

Bound Bound::sqrt(Rational radicand, std::string provenance) {
  if (radicand < 0) throw PreconditionError("sqrt radicand must be non-negative, got " + to_string(radicand), "bounds on tau and Seshadri constants are non-negative");
  const Integer num = numerator(radicand);
  const Integer den = denominator(radicand);
  if (is_perfect_square(num) && is_perfect_square(den))
    return {Kind::rational, Rational(isqrt(num), isqrt(den)), std::move(provenance)};
  return {Kind::sqrt, std::move(radicand), std::move(provenance)};
}

Bound Bound::with_provenance(std::string p) const {
  Bound b = *this;
  b.provenance_ = std::move(p);
  return b;
}

std::string Bound::exact() const {
  if (kind_ == Kind::rational) return to_string(payload_);
  return "sqrt(" + to_string(payload_) + ")";
}

std::string Bound::approx(int places) const {
  if (kind_ == Kind::rational) return to_decimal(payload_, places);
  // round(sqrt(q) * 10^p) = floor((floor(2 sqrt(q) 10^p) + 1) / 2)
  Integer scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  const Integer twice = isqrt(floor(payload_ * Rational(4 * scale * scale)));
  const Integer scaled = (twice + 1) / 2;
  Rational value(scaled, scale);
  return to_decimal(value, places);
}

std::strong_ordering operator<=>(const Bound& a, const Bound& b) {
  return compare_rational(a.squared(), b.squared());
}

std::strong_ordering operator<=>(const Bound& a, const Rational& q) {
  if (q < 0) return std::strong_ordering::greater;
  return compare_rational(a.squared(), q * q);
}

}  // namespace nefcone
