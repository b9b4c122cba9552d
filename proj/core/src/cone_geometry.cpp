#include "nefcone/cone_geometry.hpp"

#include "nefcone/errors.hpp"

#include <array>
#include <optional>

namespace nefcone {

Bound tau_lower_bound(Genus genus) {
  return Bound::sqrt(Rational(genus.value()), "universal lower bound tau >= sqrt(g) (nef boundary class has non-negative square)");
}

bool nef_against(const QClass& l, std::span<const DivClass> generators) {
  for (const DivClass& e : generators)
    if (intersect(l, QClass(e)) < 0) return false;
  return true;
}

bool negative_pair_coexist(const DivClass& d, const DivClass& e) {
  constexpr const char* rule = "uniqueness of a second negative curve (distinct negative curves meet non-negatively)";
  if (d.genus() != e.genus()) throw GenusMismatch(d.genus().value(), e.genus().value());
  if (d == e) throw PreconditionError("negative_pair_coexist needs two distinct classes", rule);
  if (self_intersection(d) >= 0 || self_intersection(e) >= 0)
    throw PreconditionError("negative_pair_coexist needs D^2 < 0 and E^2 < 0", rule);
  if (d.gamma() <= 0 || e.gamma() <= 0)
    throw PreconditionError("negative_pair_coexist needs gamma > 0 for both classes", rule);
  return intersect(d, e) >= 0;
}

namespace {

// Exact k-th root of a non-negative integer, if any.
std::optional<Integer> exact_root(const Integer& v, std::int64_t k) {
  Integer lo = 0;
  Integer hi = 1;
  while (boost::multiprecision::pow(hi, static_cast<unsigned>(k)) < v) hi *= 2;
  while (lo < hi) {
    Integer mid = (lo + hi) / 2;
    if (boost::multiprecision::pow(mid, static_cast<unsigned>(k)) < v)
      lo = mid + 1;
    else
      hi = mid;
  }
  if (boost::multiprecision::pow(lo, static_cast<unsigned>(k)) == v) return lo;
  return std::nullopt;
}

}  // namespace

Bound seshadri_upper_bound(const Rational& l_self, std::int64_t points, std::int64_t dim) {
  constexpr const char* rule = "Seshadri upper bound (pi^*L - cE)^n >= 0";
  if (points <= 0) throw PreconditionError("number of points m must be positive", rule);
  if (dim <= 0) throw PreconditionError("dimension must be positive", rule);
  if (l_self < 0) throw PreconditionError("L^n must be non-negative for nef L", rule);
  const Rational ratio = l_self / Rational(points);
  const std::string provenance = "Seshadri upper bound (L^" + std::to_string(dim) + "/" + std::to_string(points) + ")^(1/" +
                                 std::to_string(dim) + ")";
  if (dim == 1) return Bound::rational(ratio, provenance);
  if (dim == 2) return Bound::sqrt(ratio, provenance);
  auto num = exact_root(numerator(ratio), dim);
  auto den = exact_root(denominator(ratio), dim);
  if (!num || !den)
    throw PreconditionError("the " + std::to_string(dim) + "-th root of " + to_string(ratio) + " is not representable exactly", rule);
  return Bound::rational(Rational(*num, *den), provenance);
}

Bound low_genus_tau(Genus genus) {
  static const std::array<Rational, 5> table = {Rational(0), Rational(1), Rational(2), Rational(9, 5), Rational(2)};
  static const std::array<const char*, 5> sources = {
      "g=0: C^(2) = P^2, (s+1)x - delta/2 = s h",
      "g=1: closed effective cone equals nef cone (circular cone)",
      "g=2: hyperelliptic curve of class 2x - delta/2",
      "g=3: curve of class 16x - 6(delta/2), self-intersection -8",
      "g=4: Gamma_3 of a g^1_3, class 3x - delta/2",
  };
  const auto g = genus.value();
  if (g > 4)
    throw PreconditionError("tau is not tabulated for g = " + std::to_string(g) + "; use the bound propagation rules",
                            "low-genus table covers g <= 4 only");
  return Bound::rational(table[static_cast<std::size_t>(g)], std::string("low-genus table, ") + sources[static_cast<std::size_t>(g)]);
}

}  // namespace nefcone
