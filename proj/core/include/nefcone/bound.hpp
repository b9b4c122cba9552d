#pragma once

#include "nefcone/numeric.hpp"

#include <compare>
#include <string>

namespace nefcone {

/// A non-negative exact real of the form q or sqrt(q), q rational.
///
/// sqrt(q) with q a rational square is stored as the rational root, so the
/// kind reports whether the value is actually irrational. Comparisons square
/// both sides, which is exact since every value is non-negative. Provenance
/// is carried along but ignored by comparisons.
class Bound {
 public:
  enum class Kind { rational, sqrt };

  static Bound rational(Rational value, std::string provenance = {});
  static Bound sqrt(Rational radicand, std::string provenance = {});

  Kind kind() const noexcept { return kind_; }
  bool is_rational() const noexcept { return kind_ == Kind::rational; }

  /// For rational bounds the value itself, for sqrt bounds the radicand.
  const Rational& payload() const noexcept { return payload_; }
  Rational squared() const { return kind_ == Kind::rational ? payload_ * payload_ : payload_; }

  const std::string& provenance() const noexcept { return provenance_; }
  Bound with_provenance(std::string p) const;

  /// "16/7" or "sqrt(5)".
  std::string exact() const;
  /// Six-place decimal for display, exact rounding.
  std::string approx(int places = 6) const;

  friend std::strong_ordering operator<=>(const Bound& a, const Bound& b);
  friend bool operator==(const Bound& a, const Bound& b) { return (a <=> b) == 0; }

  friend std::strong_ordering operator<=>(const Bound& a, const Rational& q);
  friend bool operator==(const Bound& a, const Rational& q) { return (a <=> q) == 0; }

 private:
  Bound(Kind k, Rational payload, std::string provenance)
      : kind_(k), payload_(std::move(payload)), provenance_(std::move(provenance)) {}

  Kind kind_;
  Rational payload_;
  std::string provenance_;
};

}  // namespace nefcone
