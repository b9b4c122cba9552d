#pragma once

// Finiteness of the possible values of tau >= alpha in genus g.
//
// For rational s in (sqrt(g), alpha) and F = (s+1)x - delta/2, some multiple
// kF (ks integral) is effective on every C^(2): Riemann-Roch gives
// chi(kF) = p(k) with positive leading coefficient, and h^2(kF) = 0 once
// x.(K - kF) < 0. A curve computing tau >= alpha sits inside that divisor,
// which bounds n <= N = ks and gamma <= M = k(s+1).

#include "nefcone/bound.hpp"
#include "nefcone/numeric.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace nefcone {

/// Smallest-denominator (then smallest-numerator) rational strictly inside
/// (lo, hi). Throws PreconditionError if the interval is empty.
Rational simplest_rational_in(const Bound& lo, const Bound& hi);

/// p(k) = c2 k^2 + c1 k + c0.
struct Quadratic {
  Rational c0;
  Rational c1;
  Rational c2;

  Rational operator()(const Rational& k) const { return (c2 * k + c1) * k + c0; }
};

/// chi(O(kF)) with F = (s,1) in (n, gamma) form: chi(O) + (k^2 F^2 - k F.K)/2,
/// where chi(O_{C^(2)}) = (g-1)(g-2)/2. Requires s > sqrt(g).
Quadratic euler_char_polynomial(std::int64_t genus, const Rational& s);

/// Least k >= 1 with ks integral, (2g-3) - ks < 0 and p(k) > 0.
Integer min_k(std::int64_t genus, const Rational& s);

struct FinitenessReport {
  std::int64_t genus = 0;
  Rational alpha;
  Rational s;
  Integer k;
  Integer n_max;      // N = k s
  Integer gamma_max;  // M = k (s+1)
  std::vector<Rational> candidates;  // sorted, distinct, all >= alpha
};

/// Requires g >= 2 and alpha > sqrt(g); s defaults to the simplest rational
/// in (sqrt(g), alpha) and must lie strictly inside that interval.
FinitenessReport candidate_taus(std::int64_t genus, const Rational& alpha, const std::optional<Rational>& s = std::nullopt);

}  // namespace nefcone
