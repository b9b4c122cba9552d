#include "nefcone/finiteness.hpp"

#include "nefcone/errors.hpp"
#include "nefcone/ns_lattice.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

namespace nefcone {

namespace {

constexpr const char* kFinitenessRule = "finiteness of tau values >= alpha needs s in (sqrt(g), alpha)";

struct Frac {
  Integer p;
  Integer q;
  Rational value() const { return Rational(p, q); }
};

// Largest k >= 0 with pred(k), given pred(0) holds and pred is monotone
// (true then false).
template <class Pred>
Integer last_true(Pred pred) {
  Integer hi = 1;
  while (pred(hi)) hi *= 2;
  Integer lo = hi / 2;  // pred(lo) holds
  while (hi - lo > 1) {
    Integer mid = (lo + hi) / 2;
    if (pred(mid))
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

}  // namespace

Rational simplest_rational_in(const Bound& lo, const Bound& hi) {
  if (!(lo < hi))
    throw PreconditionError("empty interval (" + lo.exact() + ", " + hi.exact() + ")", "simplest rational needs lo < hi");

  // Stern-Brocot descent between left = 0/1 and right = 1/0. Runs of moves in
  // the same direction are taken in one jump.
  Frac left{0, 1};
  Frac right{1, 0};
  auto at_or_below_lo = [&](const Frac& f) { return Bound::rational(f.value()) <= lo; };
  auto at_or_above_hi = [&](const Frac& f) { return f.q == 0 || Bound::rational(f.value()) >= hi; };

  for (;;) {
    Frac mid{left.p + right.p, left.q + right.q};
    if (at_or_below_lo(mid)) {
      // move right: left + k*right stays <= lo
      Integer k = last_true([&](const Integer& j) {
        return at_or_below_lo(Frac{left.p + j * right.p, left.q + j * right.q});
      });
      left = {left.p + k * right.p, left.q + k * right.q};
    } else if (at_or_above_hi(mid)) {
      Integer k = last_true([&](const Integer& j) {
        return at_or_above_hi(Frac{j * left.p + right.p, j * left.q + right.q});
      });
      right = {k * left.p + right.p, k * left.q + right.q};
    } else {
      return mid.value();
    }
  }
}

Quadratic euler_char_polynomial(std::int64_t genus, const Rational& s) {
  const Genus g(genus);
  if (s <= 0 || s * s <= Rational(genus))
    throw PreconditionError("s = " + to_string(s) + " must exceed sqrt(g)", kFinitenessRule);
  const QClass f = tau_class(g, s);
  const Rational f_self = intersect(f, f);
  const Rational f_dot_k = intersect(f, QClass(canonical_class(g)));
  const Rational chi_o = Rational((genus - 1) * (genus - 2), 2);
  return {chi_o, -f_dot_k / 2, f_self / 2};
}

Integer min_k(std::int64_t genus, const Rational& s) {
  const Quadratic p = euler_char_polynomial(genus, s);
  const Integer step = denominator(s);  // ks is integral iff step | k
  for (Integer k = step;; k += step) {
    const Rational ks = Rational(k) * s;
    if (Rational(2 * genus - 3) - ks < 0 && p(Rational(k)) > 0) return k;
  }
}

FinitenessReport candidate_taus(std::int64_t genus, const Rational& alpha, const std::optional<Rational>& s) {
  if (genus < 2) throw PreconditionError("finiteness of tau values is stated for g >= 2", kFinitenessRule);
  const Bound root_g = Bound::sqrt(Rational(genus));
  if (alpha <= 0 || !(root_g < Bound::rational(alpha)))
    throw PreconditionError("alpha = " + to_string(alpha) + " must exceed sqrt(" + std::to_string(genus) + ")", kFinitenessRule);

  FinitenessReport r;
  r.genus = genus;
  r.alpha = alpha;
  if (s) {
    if (*s <= 0 || !(root_g < Bound::rational(*s)) || !(*s < alpha))
      throw PreconditionError("s = " + to_string(*s) + " must lie in (sqrt(" + std::to_string(genus) + "), " + to_string(alpha) + ")",
                              kFinitenessRule);
    r.s = *s;
  } else {
    r.s = simplest_rational_in(root_g, Bound::rational(alpha));
  }
  r.k = min_k(genus, r.s);
  r.n_max = numerator(Rational(r.k) * r.s);
  r.gamma_max = numerator(Rational(r.k) * (r.s + 1));

  const bool small = r.n_max < (Integer(1) << 31) && r.gamma_max * genus < (Integer(1) << 62);
  if (small) {
    // Reduced (p, q) pairs in int64, ordered by cross-multiplication.
    const auto n_max = to_int64(r.n_max), gamma_max = to_int64(r.gamma_max);
    const Integer a_num = numerator(alpha), a_den = denominator(alpha);
    std::vector<std::pair<std::int64_t, std::int64_t>> found;
    for (std::int64_t n = 1; n <= n_max; ++n) {
      const std::int64_t lo = std::max<std::int64_t>(1, to_int64(ceil_div(a_num * n, a_den * genus)));
      for (std::int64_t gamma = lo; gamma <= gamma_max; ++gamma) {
        const std::int64_t p = gamma * genus, d = std::gcd(p, n);
        found.emplace_back(p / d, n / d);
      }
    }
    auto less = [](const auto& x, const auto& y) {
      return static_cast<__int128>(x.first) * y.second < static_cast<__int128>(y.first) * x.second;
    };
    std::sort(found.begin(), found.end(), less);
    found.erase(std::unique(found.begin(), found.end()), found.end());
    r.candidates.reserve(found.size());
    for (const auto& [p, q] : found) r.candidates.emplace_back(p, q);
    return r;
  }

  std::set<Rational> found;
  for (Integer n = 1; n <= r.n_max; ++n) {
    // g gamma / n >= alpha  <=>  gamma >= alpha n / g
    for (Integer gamma = std::max(Integer(1), ceil(alpha * Rational(n) / Rational(genus))); gamma <= r.gamma_max; ++gamma)
      found.insert(Rational(gamma * genus, n));
  }
  r.candidates.assign(found.begin(), found.end());
  return r;
}

}  // namespace nefcone
