#include "nefcone/exclusion_prover.hpp"

#include "nefcone/errors.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace nefcone {

namespace {

constexpr const char* kTransferRule = "ample-cone transfer: a/b > tau(D) and eps(p; D^(2), (a+b)x - b(delta/2)) >= b";
constexpr const char* kTailRule = "tail closure needs L^2 > b^2, i.e. (a/b)^2 > h+1";

std::string coord(const Integer& n, const Integer& gamma) {
  return "(" + to_string(n) + "," + to_string(gamma) + ")";
}

// L.E lower bound over gamma' >= gamma on the gamma > 0 branch:
// a n - b h gamma >= (a - b tau) n >= (a - b tau) h gamma / tau.
Rational positive_branch_floor(const CertificateProblem& p, const Integer& gamma) {
  return (Rational(p.a) - Rational(p.b) * p.tau_d) * Rational(gamma * p.genus_d) / p.tau_d;
}

Integer threshold_for(const CertificateProblem& p, const Integer& m0) { return p.b * (m0 - 1) - 1; }

Integer tail_poly(const Integer& l2, const Integer& b, const Integer& m) {
  return (l2 - b * b) * m * m - (l2 - 2 * b) * m - 1;
}

}  // namespace

Integer CertificateProblem::l_self() const { return a * a - Integer(genus_d) * b * b; }

Integer CertificateProblem::l_dot(const Integer& n, const Integer& gamma) const {
  return a * n - b * genus_d * gamma;
}

void CertificateProblem::validate() const {
  if (genus_d < 1)
    throw PreconditionError("genus of D must be at least 1, got " + std::to_string(genus_d),
                            "the (x, delta/2) lattice degenerates at genus 0");
  if (a <= 0 || b <= 0) throw PreconditionError("a and b must be positive", kTransferRule);
  if (tau_d < 0 || tau_d * tau_d < Rational(genus_d))
    throw PreconditionError("tau_D = " + to_string(tau_d) + " is below sqrt(h) = sqrt(" + std::to_string(genus_d) +
                                "), so it cannot be an upper bound for tau(D)",
                            "universal lower bound tau(D) >= sqrt(h)");
  if (Rational(a, b) <= tau_d)
    throw PreconditionError("a/b = " + to_string(Rational(a, b)) + " does not exceed tau_D = " + to_string(tau_d),
                            kTransferRule);
}

Integer tail_threshold(const CertificateProblem& problem) {
  const Integer l2 = problem.l_self();
  const Integer& b = problem.b;
  if (l2 <= b * b)
    throw PreconditionError("tail cannot close: L^2 = " + to_string(l2) + " <= b^2 = " + to_string(b * b), kTailRule);
  // f is an upward parabola with f(0) = -1, so f <= 0 up to its positive root
  // and f > 0 after it.
  Integer hi = 1;
  while (tail_poly(l2, b, hi) <= 0) hi *= 2;
  Integer lo = 1;
  while (lo < hi) {
    Integer mid = (lo + hi) / 2;
    if (tail_poly(l2, b, mid) > 0)
      hi = mid;
    else
      lo = mid + 1;
  }
  return std::max(Integer(2), lo);
}

Integer min_n_positive_branch(const CertificateProblem& problem, const Integer& gamma) {
  const Integer h = problem.genus_d;
  Integer n = std::max(Integer(1), ceil(Rational(h * gamma) / problem.tau_d));
  if (n * n == h * gamma * gamma) ++n;
  return n;
}

std::vector<ClassCoord> enumerate_exceptions(const CertificateProblem& problem, const Integer& m0,
                                             std::size_t max_cases) {
  const Integer threshold = threshold_for(problem, m0);
  const Integer h = problem.genus_d;
  std::vector<ClassCoord> out;
  auto push = [&](Integer n, Integer gamma) {
    if (out.size() >= max_cases)
      throw std::length_error("exception region exceeds " + std::to_string(max_cases) + " classes");
    out.push_back({std::move(n), std::move(gamma)});
  };

  // gamma <= 0: L.E = a n + b h |gamma| with n >= 1.
  for (Integer gamma = 0; problem.a - problem.b * h * gamma <= threshold; --gamma)
    for (Integer n = 1; problem.l_dot(n, gamma) <= threshold; ++n) push(n, gamma);

  // gamma > 0: n from the nef constraint upward.
  for (Integer gamma = 1; positive_branch_floor(problem, gamma) <= Rational(threshold); ++gamma)
    for (Integer n = min_n_positive_branch(problem, gamma); problem.l_dot(n, gamma) <= threshold; ++n)
      push(n, gamma);

  std::sort(out.begin(), out.end(), [](const ClassCoord& l, const ClassCoord& r) {
    return l.gamma != r.gamma ? l.gamma < r.gamma : l.n < r.n;
  });
  return out;
}

std::vector<ClassCoord> isotropic_below_threshold(const CertificateProblem& problem, const Integer& m0) {
  std::vector<ClassCoord> out;
  const Integer h = problem.genus_d;
  if (!is_perfect_square(h)) return out;
  const Integer root = isqrt(h);
  const Integer threshold = threshold_for(problem, m0);
  for (Integer gamma = 1; positive_branch_floor(problem, gamma) <= Rational(threshold); ++gamma) {
    const Integer n = root * gamma;
    if (problem.tau_d * Rational(n) - Rational(h * gamma) < 0) continue;
    if (problem.l_dot(n, gamma) <= threshold) out.push_back({n, gamma});
  }
  return out;
}

ExceptionCase exclude_class(const CertificateProblem& problem, const Integer& n, const Integer& gamma) {
  ExceptionCase c;
  c.n = n;
  c.gamma = gamma;
  c.l_dot_e = problem.l_dot(n, gamma);
  c.e_self = n * n - Integer(problem.genus_d) * gamma * gamma;
  c.m_max = 0;

  if (c.e_self < 0) {
    c.verdict = ExceptionCase::Verdict::excluded;
    c.reason = "negative class is rigid and misses a very general point (assumption)";
    return c;
  }
  if (c.e_self == 0) {
    c.verdict = ExceptionCase::Verdict::excluded;
    c.reason = "finitely many isotropic curves per gamma avoid a very general point (assumption)";
    return c;
  }

  const Integer l2 = problem.l_self();
  c.hodge_cap = (c.l_dot_e * c.l_dot_e) / l2;  // floor, both non-negative
  const Integer cap = std::min(c.e_self, c.hodge_cap);
  Integer m = (1 + isqrt(1 + 4 * cap)) / 2;
  while ((m + 1) * m <= cap) ++m;
  while (m > 1 && m * (m - 1) > cap) --m;
  c.m_max = m;
  c.ratio_floor = Rational(c.l_dot_e, c.m_max);

  const Integer first_bad = std::max(Integer(1), floor_div(c.l_dot_e, problem.b) + 1);
  for (Integer k = first_bad; k <= c.m_max; ++k) c.violating_m.push_back(k);

  if (c.violating_m.empty()) {
    c.verdict = ExceptionCase::Verdict::excluded;
    c.reason = "L.E/m >= " + to_string(*c.ratio_floor) + " >= b for every m <= m_max";
  } else {
    c.verdict = ExceptionCase::Verdict::violating;
    c.reason = "b m > L.E for m in [" + to_string(first_bad) + "," + to_string(c.m_max) + "]";
  }
  return c;
}

M1Check global_m1_check(const CertificateProblem& problem) {
  M1Check out;
  const Integer h = problem.genus_d;
  // gamma > 0: for fixed gamma, L.E increases with n.
  std::optional<Integer> best;
  ClassCoord best_at;
  for (Integer gamma = 1; !best || positive_branch_floor(problem, gamma) <= Rational(*best); ++gamma) {
    const Integer n = min_n_positive_branch(problem, gamma);
    const Integer value = problem.l_dot(n, gamma);
    if (!best || value < *best) {
      best = value;
      best_at = {n, gamma};
    }
  }
  out.positive_branch_minimum = *best;
  out.positive_branch_argmin = best_at;

  // gamma <= 0 attains its minimum a at (1,0).
  if (problem.a <= *best) {
    out.minimum = problem.a;
    out.argmin = {1, 0};
  } else {
    out.minimum = *best;
    out.argmin = best_at;
  }
  out.passed = out.minimum >= problem.b;
  return out;
}

std::string CertificateResult::transcript_text() const {
  std::string s;
  for (const auto& line : transcript) s += line + "\n";
  return s;
}

CertificateResult certify(const CertificateProblem& problem, std::size_t max_cases) {
  problem.validate();
  CertificateResult r;
  r.problem = problem;
  const Integer l2 = problem.l_self();
  const Integer& b = problem.b;
  r.m0 = tail_threshold(problem);
  r.threshold = threshold_for(problem, r.m0);

  std::ostringstream line;
  auto emit = [&] {
    r.transcript.push_back(line.str());
    line.str({});
  };

  line << "PROBLEM h=" << problem.genus_d << " tau_D=" << to_string(problem.tau_d) << " a=" << problem.a
       << " b=" << b << " L=(" << (problem.a + b) << ")x-" << b << "(delta/2) L^2=" << l2
       << " claim: eps(p;D^(2),L)>=" << b;
  emit();

  line << "TAIL f(m)=" << (l2 - b * b) << "m^2-" << (l2 - 2 * b) << "m-1 > 0 for m>=" << r.m0
       << "; L.E>=" << (r.threshold + 1) << " with L.E<=" << b << "m-1 forces m>=" << r.m0
       << " and m(m-1)<=E^2<=(L.E)^2/L^2<=(" << b << "m-1)^2/" << l2 << " fails";
  emit();

  line << "NOTE m>=2: curves with a very general m-fold point move in a non-trivial family, so E^2>=m(m-1) "
          "(Ein-Lazarsfeld)";
  emit();

  r.m1 = global_m1_check(problem);
  line << "M1 min L.E=" << r.m1.minimum << " at " << coord(r.m1.argmin.n, r.m1.argmin.gamma)
       << "; gamma>0 branch min=" << r.m1.positive_branch_minimum << " at "
       << coord(r.m1.positive_branch_argmin.n, r.m1.positive_branch_argmin.gamma) << "; b=" << b
       << (r.m1.passed ? " PASS" : " FAIL");
  emit();

  r.isotropic_skipped = isotropic_below_threshold(problem, r.m0);
  if (!r.isotropic_skipped.empty()) {
    line << "ASSUME isotropic classes n^2=h*gamma^2 avoid a very general point, skipped:";
    for (const auto& c : r.isotropic_skipped) line << " " << coord(c.n, c.gamma);
    emit();
  }

  bool all_excluded = true;
  for (const auto& cls : enumerate_exceptions(problem, r.m0, max_cases)) {
    ExceptionCase c = exclude_class(problem, cls.n, cls.gamma);
    line << "CASE " << coord(c.n, c.gamma) << " L.E=" << c.l_dot_e << " E^2=" << c.e_self;
    if (c.m_max > 0)
      line << " hodge_cap=" << c.hodge_cap << " m_max=" << c.m_max << " L.E/m>=" << to_string(*c.ratio_floor);
    if (c.verdict == ExceptionCase::Verdict::excluded) {
      line << " EXCLUDED " << c.reason;
      if (c.e_self <= 0) {
        emit();
        line << "ASSUME " << (c.e_self < 0 ? "rigid negative class " : "isotropic class ") << coord(c.n, c.gamma)
             << " does not pass through a very general point";
      }
    } else {
      all_excluded = false;
      line << " VIOLATING m=";
      for (std::size_t i = 0; i < c.violating_m.size(); ++i) line << (i ? "," : "") << c.violating_m[i];
      for (const auto& m : c.violating_m) r.witnesses.push_back({c.n, c.gamma, m});
    }
    emit();
    r.exceptions.push_back(std::move(c));
  }

  r.outcome = (all_excluded && r.m1.passed) ? CertificateResult::Outcome::proved : CertificateResult::Outcome::failed;
  if (r.proved()) {
    line << "VERDICT PROVED eps(p;D^(2),L)>=" << b << ", hence tau(C)<=" << to_string(Rational(problem.a, b))
         << " for a very general curve of genus " << (problem.genus_d + 1);
  } else {
    line << "VERDICT FAILED";
    if (!r.m1.passed) line << " m=1 check (min L.E=" << r.m1.minimum << " < b=" << b << ")";
    if (!r.witnesses.empty()) {
      line << " witnesses";
      for (const auto& w : r.witnesses) line << " (" << w.n << "," << w.gamma << "," << w.m << ")";
    }
  }
  emit();
  return r;
}

namespace {

Integer least_a(const Rational& tau_d, std::int64_t genus_d, const Integer& b) {
  const Integer by_tau = floor(tau_d * Rational(b)) + 1;
  const Integer by_tail = isqrt(Integer(genus_d + 1) * b * b) + 1;
  return std::max(by_tau, by_tail);
}

struct ColumnResult {
  std::optional<CertificateResult> proved;
  std::vector<std::pair<Integer, Integer>> skipped;
};

ColumnResult scan_column(std::int64_t genus_d, const Rational& tau_d, const Integer& b,
                         const std::optional<Rational>& ratio_cap, std::size_t max_cases) {
  ColumnResult out;
  // With no cap this only runs for b = 1, where L.E >= 1 = b everywhere and
  // every a past least_a proves; the loop is bounded by that.
  for (Integer a = least_a(tau_d, genus_d, b); !ratio_cap || Rational(a, b) < *ratio_cap; ++a) {
    CertificateProblem p{genus_d, tau_d, a, b};
    try {
      CertificateResult r = certify(p, max_cases);
      if (r.proved()) {
        out.proved = std::move(r);
        break;
      }
    } catch (const std::length_error&) {
      out.skipped.emplace_back(a, b);
    }
  }
  return out;
}

}  // namespace

SearchResult search_best_ratio(std::int64_t genus_d, const Rational& tau_d, std::int64_t max_b, std::size_t max_cases) {
  if (max_b < 1) throw PreconditionError("max_b must be at least 1", "search grid b = 1..max_b");
  // Any a large enough yields a valid problem; this checks h and tau_D.
  CertificateProblem{genus_d, tau_d, least_a(tau_d, genus_d, 1), 1}.validate();

  SearchResult result;
  result.genus_d = genus_d;
  result.tau_d = tau_d;
  result.max_b = max_b;

  ColumnResult first = scan_column(genus_d, tau_d, 1, std::nullopt, max_cases);
  if (!first.proved) {
    result.skipped = std::move(first.skipped);
    return result;
  }
  const Rational cap(first.proved->problem.a, first.proved->problem.b);

  std::vector<ColumnResult> columns(static_cast<std::size_t>(max_b));
  columns[0] = std::move(first);
  std::atomic<std::int64_t> next{2};
  auto worker = [&] {
    for (std::int64_t b = next++; b <= max_b; b = next++)
      columns[static_cast<std::size_t>(b - 1)] = scan_column(genus_d, tau_d, b, cap, max_cases);
  };
  const auto threads = std::clamp<std::int64_t>(std::thread::hardware_concurrency(), 1, std::max<std::int64_t>(1, max_b - 1));
  std::vector<std::jthread> pool;
  for (std::int64_t i = 0; i < threads; ++i) pool.emplace_back(worker);
  pool.clear();

  // Columns are visited in increasing b, so only a strictly smaller ratio
  // replaces the incumbent.
  for (auto& col : columns) {
    if (!col.proved) continue;
    const Rational ratio(col.proved->problem.a, col.proved->problem.b);
    if (!result.best || ratio < Rational(result.best->problem.a, result.best->problem.b)) result.best = std::move(col.proved);
  }
  const Rational best_ratio(result.best->problem.a, result.best->problem.b);
  for (auto& col : columns)
    for (auto& ab : col.skipped)
      if (Rational(ab.first, ab.second) < best_ratio) result.skipped.push_back(ab);
  return result;
}

}  // namespace nefcone
