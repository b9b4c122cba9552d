#pragma once

// Upper bounds on tau(C) for a very general curve, assembled from the
// available inference rules, plus a registry of citable plane Seshadri data
// and cached exclusion certificates.

#include "nefcone/bound.hpp"
#include "nefcone/exclusion_prover.hpp"
#include "nefcone/ns_lattice.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nefcone {

/// Certified lower bound for the Seshadri constant of m very general points
/// of P^2 with respect to O(1). Invariant: 0 < lower <= 1.
struct SeshadriDatum {
  std::int64_t m = 0;
  Rational lower;
  std::string source;

  void validate() const;
};

class Registry {
 public:
  /// Entries that ship with the library: m = 5 with 2/5, the Nagata values
  /// 1/k for m = k^2 (k >= 3), and the genus-4 certificate (16, 7).
  static Registry builtin();
  static Registry empty() { return Registry{}; }

  void add(SeshadriDatum datum);
  void add_certificate(CertificateProblem problem);
  void set_nagata_perfect_squares(bool enabled) { nagata_perfect_squares_ = enabled; }

  bool nagata_perfect_squares() const noexcept { return nagata_perfect_squares_; }
  const std::vector<SeshadriDatum>& entries() const noexcept { return entries_; }
  const std::vector<CertificateProblem>& certificates() const noexcept { return certificates_; }

  /// Best (largest) lower bound on file for m points, if any.
  std::optional<SeshadriDatum> lookup(std::int64_t m) const;

 private:
  std::vector<SeshadriDatum> entries_;
  std::vector<CertificateProblem> certificates_;
  bool nagata_perfect_squares_ = false;
};

struct UpperBound {
  Bound value;
  std::string rule;
  std::string provenance;
};

struct TauReport {
  Genus genus;
  Bound lower;
  std::vector<UpperBound> uppers;
  std::optional<Bound> best_upper;  // empty only if no rule applies
  std::vector<std::string> notes;   // rejected cached certificates and similar
};

/// tau <= 1 / eps_g(P^2, O(1)). Requires datum.m == g >= 1.
Bound corollary_bound(Genus genus, const SeshadriDatum& datum);

/// sqrt(g) / sqrt(1 - 1/(g+1)) = sqrt(g+1), valid for g >= 10.
Bound nagata_style_bound(Genus genus);

/// g / floor(sqrt(g)), g >= 1.
Bound kouvidakis_bound(Genus genus);

/// One application of the ample-cone transfer rule: if a/b > tau(D) and the
/// Seshadri hypothesis at a very general point of D^(2) holds, then
/// tau(C) <= a/b for very general C of genus g.
Bound propagate_step(Genus genus, const Integer& a, const Integer& b, const Bound& tau_upper_prev,
                     bool seshadri_hypothesis_holds);

struct ChainStep {
  std::int64_t genus;  // genus reached by this step
  Rational ratio;      // a/b = 1/eps
};

/// Walks the multipoint recursion from the genus-0 base P^2 up to `genus`,
/// checking at every step that 1/eps > sqrt(genus - 1). Returns the same
/// value as corollary_bound.
Bound chain_from_plane(Genus genus, const SeshadriDatum& datum, std::vector<ChainStep>* steps = nullptr);

TauReport tau_report(Genus genus, const Registry& registry);

/// One report per genus 0..max_genus.
std::vector<TauReport> emit_table(std::int64_t max_genus, const Registry& registry);

}  // namespace nefcone
