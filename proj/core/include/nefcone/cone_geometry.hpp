#pragma once

// Cone predicates in the (x, delta/2) plane and the universal bounds on tau.

#include "nefcone/bound.hpp"
#include "nefcone/ns_lattice.hpp"

#include <cstdint>
#include <span>

namespace nefcone {

/// tau(C) >= sqrt(g): a nef (tau+1)x - delta/2 has non-negative square.
Bound tau_lower_bound(Genus genus);

/// True iff L . E >= 0 for every supplied generator. This is nefness relative
/// to the list, not a statement about the full nef cone.
bool nef_against(const QClass& l, std::span<const DivClass> generators);

/// Two distinct negative classes with gamma > 0 can both be reduced
/// irreducible curves only if they meet non-negatively. Returns D . E >= 0.
/// Throws PreconditionError unless D^2 < 0, E^2 < 0, D != E, gamma > 0 for both.
bool negative_pair_coexist(const DivClass& d, const DivClass& e);

/// Upper bound (L^dim / m)^(1/dim) on the m-point Seshadri constant, from
/// (pi^*L - cE)^dim >= 0. Only dim = 1, dim = 2, and exact rational roots for
/// higher dim are representable as a Bound; anything else throws.
Bound seshadri_upper_bound(const Rational& l_self, std::int64_t points, std::int64_t dim);

/// Known tau for a very general curve of genus 0..4: 0, 1, 2, 9/5, 2.
Bound low_genus_tau(Genus genus);

}  // namespace nefcone
