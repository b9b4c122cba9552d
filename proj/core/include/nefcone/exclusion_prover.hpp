#pragma once

// Exclusion certificates for the Seshadri hypothesis
//
//     eps(p; D^(2), L) >= b,   L = (a+b) x - b (delta/2),   p very general,
//
// on the symmetric square of a curve D of genus h, given a certified upper
// bound tau_D >= tau(D). A curve E = (n+gamma)x - gamma(delta/2) through p
// with multiplicity m violates the bound when L.E <= b m - 1. The prover
// rules out every such E:
//
//  * m = 1 is impossible once L.E >= b on the whole feasible region (M1).
//  * For m >= 2 the curves move in a family, so m(m-1) <= E^2, and the Hodge
//    index theorem gives E^2 L^2 <= (L.E)^2. Past a threshold m0 these are
//    incompatible with L.E <= b m - 1 (TAIL), so only classes with
//    L.E <= b (m0 - 1) - 1 remain, and there are finitely many (CASE).
//
// The feasible region is n >= 1, and for gamma > 0 also tau_D n - h gamma >= 0
// (nefness of (tau_D+1)x - delta/2), skipping the isotropic class n^2 = h gamma^2.
// Negative and isotropic classes are dismissed by very-generality of p; those
// are assumptions, and the transcript marks each place they are used.

#include "nefcone/numeric.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nefcone {

struct CertificateProblem {
  std::int64_t genus_d = 0;  // h; the target curve has genus h + 1
  Rational tau_d;
  Integer a;
  Integer b;

  /// L^2 = a^2 - h b^2.
  Integer l_self() const;
  /// L . E = a n - b h gamma.
  Integer l_dot(const Integer& n, const Integer& gamma) const;

  /// Throws PreconditionError unless h >= 1, a, b > 0, tau_d^2 >= h and
  /// a/b > tau_d. The tail condition a^2 > (h+1) b^2 is checked separately
  /// by tail_threshold.
  void validate() const;
};

struct ClassCoord {
  Integer n;
  Integer gamma;
  friend bool operator==(const ClassCoord&, const ClassCoord&) = default;
};

struct ExceptionCase {
  enum class Verdict { excluded, violating };

  Integer n;
  Integer gamma;
  Integer l_dot_e;
  Integer e_self;
  Integer hodge_cap;  // floor((L.E)^2 / L^2); only meaningful when E^2 > 0
  Integer m_max;      // 0 for classes dismissed by very-generality
  std::optional<Rational> ratio_floor;  // L.E / m_max when m_max > 0
  Verdict verdict = Verdict::excluded;
  std::string reason;
  std::vector<Integer> violating_m;
};

struct M1Check {
  bool passed = false;
  Integer minimum;  // min L.E over the feasible region
  ClassCoord argmin;
  Integer positive_branch_minimum;  // min over gamma > 0
  ClassCoord positive_branch_argmin;
};

struct Witness {
  Integer n;
  Integer gamma;
  Integer m;
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct CertificateResult {
  enum class Outcome { proved, failed };

  CertificateProblem problem;
  Outcome outcome = Outcome::failed;
  Integer m0;
  Integer threshold;  // largest L.E that still needs a case: b (m0 - 1) - 1
  M1Check m1;
  std::vector<ExceptionCase> exceptions;
  std::vector<ClassCoord> isotropic_skipped;
  std::vector<Witness> witnesses;
  std::vector<std::string> transcript;

  bool proved() const noexcept { return outcome == Outcome::proved; }
  /// Transcript lines joined with '\n', trailing newline included.
  std::string transcript_text() const;
};

/// Least m0 >= 2 with L^2 m (m-1) > (b m - 1)^2 for every m >= m0.
/// Throws PreconditionError("tail cannot close") when L^2 <= b^2.
Integer tail_threshold(const CertificateProblem& problem);

/// Smallest admissible n for a given gamma > 0.
Integer min_n_positive_branch(const CertificateProblem& problem, const Integer& gamma);

/// Every class of the feasible region with L.E <= b (m0 - 1) - 1, sorted by
/// (gamma, n). Throws std::length_error past `max_cases` classes.
std::vector<ClassCoord> enumerate_exceptions(const CertificateProblem& problem, const Integer& m0,
                                             std::size_t max_cases = 1'000'000);

/// Isotropic classes n^2 = h gamma^2 (gamma > 0) that satisfy the nef
/// constraint and lie below the threshold but were skipped by very-generality.
std::vector<ClassCoord> isotropic_below_threshold(const CertificateProblem& problem, const Integer& m0);

ExceptionCase exclude_class(const CertificateProblem& problem, const Integer& n, const Integer& gamma);

M1Check global_m1_check(const CertificateProblem& problem);

CertificateResult certify(const CertificateProblem& problem, std::size_t max_cases = 1'000'000);

struct SearchResult {
  std::int64_t genus_d = 0;
  Rational tau_d;
  std::int64_t max_b = 0;
  std::optional<CertificateResult> best;  // empty: nothing proved in the grid
  /// (a, b) pairs with ratio below the reported best that were too large to
  /// enumerate under max_cases.
  std::vector<std::pair<Integer, Integer>> skipped;
};

/// Minimal a/b over b <= max_b for which certify proves the hypothesis.
/// Ties go to the smaller b, then the smaller a. b values are evaluated
/// concurrently; the reduction is deterministic.
SearchResult search_best_ratio(std::int64_t genus_d, const Rational& tau_d, std::int64_t max_b,
                               std::size_t max_cases = 1'000'000);

}  // namespace nefcone
