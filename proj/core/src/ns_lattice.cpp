#include "nefcone/ns_lattice.hpp"

#include "nefcone/errors.hpp"

namespace nefcone {

Genus::Genus(std::int64_t g) : g_(g) {
  if (g < 0) throw PreconditionError("genus must be non-negative, got " + std::to_string(g), "genus g >= 0");
}

namespace {

void require_same_genus(Genus a, Genus b) {
  if (a != b) throw GenusMismatch(a.value(), b.value());
}

}  // namespace

DivClass DivClass::operator+(const DivClass& other) const {
  require_same_genus(genus_, other.genus_);
  return {genus_, n_ + other.n_, gamma_ + other.gamma_};
}

QClass QClass::operator+(const QClass& other) const {
  require_same_genus(genus_, other.genus_);
  return {genus_, n_ + other.n_, gamma_ + other.gamma_};
}

Integer intersect(const DivClass& d, const DivClass& e) {
  require_same_genus(d.genus(), e.genus());
  return d.n() * e.n() - d.gamma() * e.gamma() * d.genus().value();
}

Rational intersect(const QClass& d, const QClass& e) {
  require_same_genus(d.genus(), e.genus());
  return d.n() * e.n() - d.gamma() * e.gamma() * Rational(d.genus().value());
}

QClass from_basis(Genus genus, const Rational& c_x, const Rational& c_d) {
  return {genus, c_x + c_d, -c_d};
}

DivClass from_basis(Genus genus, const Integer& c_x, const Integer& c_d) {
  return {genus, c_x + c_d, -c_d};
}

DivClass x_class(Genus genus) { return {genus, 1, 0}; }

DivClass half_diagonal(Genus genus) { return {genus, 1, -1}; }

DivClass diagonal(Genus genus) { return {genus, 2, -2}; }

DivClass canonical_class(Genus genus) { return {genus, 2 * genus.value() - 3, 1}; }

DivClass diagonal_dual(Genus genus) {
  if (genus.value() < 1)
    throw PreconditionError("diagonal dual requires g >= 1", "G = (g-1)x + delta/2 is dual to the diagonal only for g >= 1");
  return {genus, genus.value(), -1};
}

QClass tau_class(Genus genus, const Rational& s) { return {genus, s, 1}; }

Rational tau_from_class(const DivClass& e) {
  if (e.n() <= 0 || e.gamma() <= 0)
    throw PreconditionError("tau_from_class needs n > 0 and gamma > 0, got (" + to_string(e.n()) + "," +
                                to_string(e.gamma()) + ")",
                            "exceptional class formula tau = g*gamma/n");
  return Rational(e.gamma() * e.genus().value(), e.n());
}

}  // namespace nefcone
