#include "nefcone/bound_propagation.hpp"

#include "nefcone/cone_geometry.hpp"
#include "nefcone/errors.hpp"

#include <algorithm>

namespace nefcone {

namespace {

constexpr const char* kCorollaryRule = "tau <= 1/eps_g(P^2, O(1)) by iterating the multipoint recursion from P^2";
constexpr const char* kTransferRule = "ample-cone transfer: a/b > tau(D) and eps(p; D^(2), (a+b)x - b(delta/2)) >= b";

}  // namespace

void SeshadriDatum::validate() const {
  if (m < 1) throw PreconditionError("Seshadri datum needs m >= 1, got " + std::to_string(m), "m very general points, m >= 1");
  if (lower <= 0 || lower > 1)
    throw PreconditionError("Seshadri lower bound must lie in (0, 1], got " + to_string(lower),
                            "eps_m(P^2, O(1)) <= 1 and a certified lower bound is positive");
}

Registry Registry::builtin() {
  Registry r;
  r.add({5, Rational(2, 5), "eps_5(P^2, O(1)) = 2/5 (Strycharz-Szemberg, Szemberg)"});
  r.set_nagata_perfect_squares(true);
  r.add_certificate({4, Rational(2), 16, 7});
  return r;
}

void Registry::add(SeshadriDatum datum) {
  datum.validate();
  entries_.push_back(std::move(datum));
}

void Registry::add_certificate(CertificateProblem problem) {
  problem.validate();
  certificates_.push_back(std::move(problem));
}

std::optional<SeshadriDatum> Registry::lookup(std::int64_t m) const {
  std::optional<SeshadriDatum> best;
  for (const auto& e : entries_)
    if (e.m == m && (!best || e.lower > best->lower)) best = e;
  if (nagata_perfect_squares_ && m >= 9 && is_perfect_square(Integer(m))) {
    const Integer k = isqrt(Integer(m));
    SeshadriDatum nagata{m, Rational(1, k), "Nagata, perfect-square case: eps_{k^2}(P^2, O(1)) = 1/k"};
    if (!best || nagata.lower > best->lower) best = std::move(nagata);
  }
  return best;
}

Bound corollary_bound(Genus genus, const SeshadriDatum& datum) {
  datum.validate();
  if (genus.value() < 1) throw PreconditionError("corollary bound needs g >= 1", kCorollaryRule);
  if (datum.m != genus.value())
    throw PreconditionError("Seshadri datum is for m = " + std::to_string(datum.m) + " points but g = " +
                                std::to_string(genus.value()),
                            kCorollaryRule);
  return Bound::rational(1 / datum.lower, "1/eps_" + std::to_string(datum.m) + "(P^2,O(1)) with eps >= " +
                                              to_string(datum.lower) + " [" + datum.source + "]");
}

Bound nagata_style_bound(Genus genus) {
  const auto g = genus.value();
  if (g < 10)
    throw PreconditionError("the sqrt(g)/sqrt(1 - 1/(g+1)) bound is only asserted for g >= 10, got g = " + std::to_string(g),
                            "plane Seshadri bound eps_g >= sqrt(1 - 1/(g+1))/sqrt(g) for g >= 10");
  return Bound::sqrt(Rational(g + 1), "sqrt(g)/sqrt(1-1/(g+1)) = sqrt(g+1) at g=" + std::to_string(g));
}

Bound kouvidakis_bound(Genus genus) {
  const auto g = genus.value();
  if (g < 1) throw PreconditionError("the g/floor(sqrt(g)) bound needs g >= 1", "Kouvidakis bound tau <= g/[sqrt g]");
  const Integer root = isqrt(Integer(g));
  return Bound::rational(Rational(Integer(g), root), "Kouvidakis: g/floor(sqrt(g)) = " + std::to_string(g) + "/" + to_string(root));
}

Bound propagate_step(Genus genus, const Integer& a, const Integer& b, const Bound& tau_upper_prev,
                     bool seshadri_hypothesis_holds) {
  if (a <= 0 || b <= 0) throw PreconditionError("a and b must be positive", kTransferRule);
  const Rational ratio(a, b);
  if (!(tau_upper_prev < Bound::rational(ratio)))
    throw PreconditionError("a/b = " + to_string(ratio) + " does not exceed the previous tau bound " + tau_upper_prev.exact(),
                            kTransferRule);
  if (!seshadri_hypothesis_holds)
    throw PreconditionError("the Seshadri hypothesis eps >= b is not certified", kTransferRule);
  return Bound::rational(ratio, "transfer rule at g=" + std::to_string(genus.value()) + " with a=" + to_string(a) +
                                    ", b=" + to_string(b) + ", tau(D) <= " + tau_upper_prev.exact());
}

Bound chain_from_plane(Genus genus, const SeshadriDatum& datum, std::vector<ChainStep>* steps) {
  datum.validate();
  const auto g = genus.value();
  if (g < 1) throw PreconditionError("chain needs g >= 1", kCorollaryRule);
  if (datum.m != g)
    throw PreconditionError("chain from P^2 to genus " + std::to_string(g) + " needs eps for m = g points, got m = " +
                                std::to_string(datum.m),
                            kCorollaryRule);
  const Rational ratio = 1 / datum.lower;
  // Base: on P^2 = (P^1)^(2), x = delta/2 = h and eps_g(P^2, (1+b)x - b(delta/2)) = eps_g(P^2, h).
  for (std::int64_t step = 1; step <= g; ++step) {
    // The step from genus step-1 to genus step needs a/b > tau(D) >= sqrt(step-1).
    if (ratio * ratio <= Rational(step - 1))
      throw PreconditionError("chain step " + std::to_string(step) + " (genus " + std::to_string(step - 1) + " -> " +
                                  std::to_string(step) + "): ratio " + to_string(ratio) + " <= sqrt(" +
                                  std::to_string(step - 1) + ")",
                              "multipoint recursion eps_{m,g}(s) >= eps_{m+1,g-1}(s) needs a/b > tau(D)");
    if (steps) steps->push_back({step, ratio});
  }
  return Bound::rational(ratio, "chain of " + std::to_string(g) + " recursion steps from P^2 with eps_" +
                                    std::to_string(g) + " >= " + to_string(datum.lower) + " [" + datum.source + "]");
}

TauReport tau_report(Genus genus, const Registry& registry) {
  const auto g = genus.value();
  TauReport report{genus, tau_lower_bound(genus), {}, std::nullopt, {}};

  if (g <= 4) {
    Bound b = low_genus_tau(genus);
    report.uppers.push_back({b, "low_genus_table", b.provenance()});
  }

  for (const auto& cert : registry.certificates()) {
    if (cert.genus_d + 1 != g) continue;
    const std::string tag = "certificate (h=" + std::to_string(cert.genus_d) + ", tau_D=" + to_string(cert.tau_d) +
                            ", a=" + to_string(cert.a) + ", b=" + to_string(cert.b) + ")";
    // tau_D must itself be a certified bound for genus h.
    const TauReport below = tau_report(Genus(cert.genus_d), registry);
    if (!below.best_upper || *below.best_upper > cert.tau_d) {
      report.notes.push_back(tag + " rejected: tau_D is not backed by a certified upper bound at genus " +
                             std::to_string(cert.genus_d));
      continue;
    }
    try {
      const CertificateResult result = certify(cert);
      if (!result.proved()) {
        report.notes.push_back(tag + " rejected: certificate does not close");
        continue;
      }
      Bound b = propagate_step(genus, cert.a, cert.b, Bound::rational(cert.tau_d), true);
      report.uppers.push_back({b, "exclusion_certificate", tag + ", re-verified"});
    } catch (const std::exception& e) {
      report.notes.push_back(tag + " rejected: " + e.what());
    }
  }

  if (g >= 1) {
    if (auto datum = registry.lookup(g)) {
      Bound b = corollary_bound(genus, *datum);
      report.uppers.push_back({b, "plane_seshadri_corollary", b.provenance()});
    }
  }
  if (g >= 10) {
    Bound b = nagata_style_bound(genus);
    report.uppers.push_back({b, "nagata_style", b.provenance()});
  }
  if (g >= 1) {
    Bound b = kouvidakis_bound(genus);
    report.uppers.push_back({b, "kouvidakis", b.provenance()});
  }

  for (const auto& u : report.uppers)
    if (!report.best_upper || u.value < *report.best_upper) report.best_upper = u.value;
  return report;
}

std::vector<TauReport> emit_table(std::int64_t max_genus, const Registry& registry) {
  std::vector<TauReport> rows;
  for (std::int64_t g = 0; g <= max_genus; ++g) rows.push_back(tau_report(Genus(g), registry));
  return rows;
}

}  // namespace nefcone
