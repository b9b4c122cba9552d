#pragma once

// The rank-2 lattice of numerical classes on the second symmetric product
// C^(2), spanned by x and delta/2. A class is written in (n, gamma) form,
//
//     (n + gamma) x - gamma (delta/2),
//
// so that the pairing is n n' - gamma gamma' g. The basis coefficients
// (c_x, c_d) = (n + gamma, -gamma) are only an I/O convenience.
//
// At genus 0 the surface is P^2 and x = delta/2 = h. Classes at g = 0 are
// allowed here but the two basis vectors are NOT identified; the pairing is
// still the formal one with Gram matrix [[1,1],[1,1]].

#include "nefcone/numeric.hpp"

#include <compare>
#include <cstdint>
#include <utility>

namespace nefcone {

class Genus {
 public:
  Genus() = default;
  explicit Genus(std::int64_t g);

  std::int64_t value() const noexcept { return g_; }
  friend auto operator<=>(const Genus&, const Genus&) = default;

 private:
  std::int64_t g_ = 0;
};

/// Integral class (n + gamma) x - gamma (delta/2).
class DivClass {
 public:
  DivClass(Genus genus, Integer n, Integer gamma)
      : genus_(genus), n_(std::move(n)), gamma_(std::move(gamma)) {}

  Genus genus() const noexcept { return genus_; }
  const Integer& n() const noexcept { return n_; }
  const Integer& gamma() const noexcept { return gamma_; }

  Integer coeff_x() const { return n_ + gamma_; }
  Integer coeff_half_delta() const { return -gamma_; }

  DivClass operator+(const DivClass& other) const;
  DivClass operator-() const { return {genus_, -n_, -gamma_}; }
  friend DivClass operator*(const Integer& k, const DivClass& d) { return {d.genus_, k * d.n_, k * d.gamma_}; }

  friend bool operator==(const DivClass& a, const DivClass& b) {
    return a.genus_ == b.genus_ && a.n_ == b.n_ && a.gamma_ == b.gamma_;
  }

 private:
  Genus genus_;
  Integer n_;
  Integer gamma_;
};

/// Rational class in the same plane; DivClass converts implicitly.
class QClass {
 public:
  QClass(Genus genus, Rational n, Rational gamma)
      : genus_(genus), n_(std::move(n)), gamma_(std::move(gamma)) {}
  QClass(const DivClass& d)  // NOLINT(google-explicit-constructor)
      : genus_(d.genus()), n_(d.n()), gamma_(d.gamma()) {}

  Genus genus() const noexcept { return genus_; }
  const Rational& n() const noexcept { return n_; }
  const Rational& gamma() const noexcept { return gamma_; }

  Rational coeff_x() const { return n_ + gamma_; }
  Rational coeff_half_delta() const { return -gamma_; }

  QClass operator+(const QClass& other) const;
  friend QClass operator*(const Rational& k, const QClass& q) { return {q.genus_, k * q.n_, k * q.gamma_}; }

  friend bool operator==(const QClass& a, const QClass& b) {
    return a.genus_ == b.genus_ && a.n_ == b.n_ && a.gamma_ == b.gamma_;
  }

 private:
  Genus genus_;
  Rational n_;
  Rational gamma_;
};

/// n n' - gamma gamma' g. Throws GenusMismatch.
Integer intersect(const DivClass& d, const DivClass& e);
Rational intersect(const QClass& d, const QClass& e);

inline Integer self_intersection(const DivClass& d) { return intersect(d, d); }
inline Rational self_intersection(const QClass& d) { return intersect(d, d); }

/// Class with x-coefficient c_x and (delta/2)-coefficient c_d.
QClass from_basis(Genus genus, const Rational& c_x, const Rational& c_d);
DivClass from_basis(Genus genus, const Integer& c_x, const Integer& c_d);

/// x . D, which is n.
inline const Integer& x_degree(const DivClass& d) { return d.n(); }
inline const Rational& x_degree(const QClass& d) { return d.n(); }

DivClass x_class(Genus genus);
DivClass half_diagonal(Genus genus);
/// The diagonal Delta = 2 (delta/2), i.e. (n, gamma) = (2, -2).
DivClass diagonal(Genus genus);

/// K = (2g-2) x - delta/2.
DivClass canonical_class(Genus genus);

/// G = (g-1) x + delta/2, the nef class orthogonal to the diagonal. g >= 1.
DivClass diagonal_dual(Genus genus);

/// The class (s+1) x - delta/2 whose nefness defines tau.
QClass tau_class(Genus genus, const Rational& s);

/// g gamma / n for the class of a curve computing tau. Requires n, gamma > 0.
Rational tau_from_class(const DivClass& e);

}  // namespace nefcone
