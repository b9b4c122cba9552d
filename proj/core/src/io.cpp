#include "nefcone/io.hpp"

#include "nefcone/errors.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace nefcone::io {

json integer_to_json(const Integer& v) {
  if (v <= std::numeric_limits<std::int64_t>::max() && v >= std::numeric_limits<std::int64_t>::min())
    return v.convert_to<std::int64_t>();
  return v.str();
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

namespace {

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("expected a rational \"P/Q\", got " + j.dump());
}

json coord_json(const Integer& n, const Integer& gamma) { return {{"n", integer_to_json(n)}, {"gamma", integer_to_json(gamma)}}; }

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

json to_json(const DivClass& d) {
  return {{"genus", d.genus().value()}, {"n", integer_to_json(d.n())}, {"gamma", integer_to_json(d.gamma())}};
}

json to_json(const QClass& q) { return {{"genus", q.genus().value()}, {"n", to_string(q.n())}, {"gamma", to_string(q.gamma())}}; }

json to_json(const Bound& b) {
  return {{"kind", b.is_rational() ? "rational" : "sqrt"},
          {"num", integer_to_json(numerator(b.payload()))},
          {"den", integer_to_json(denominator(b.payload()))},
          {"provenance", b.provenance()},
          {"exact", b.exact()},
          {"approx", b.approx()}};
}

json to_json(const TauReport& r) {
  json uppers = json::array();
  for (const auto& u : r.uppers) uppers.push_back({{"rule", u.rule}, {"bound", to_json(u.value)}, {"provenance", u.provenance}});
  json out = {{"genus", r.genus.value()}, {"lower", to_json(r.lower)}, {"uppers", uppers}};
  out["best_upper"] = r.best_upper ? to_json(*r.best_upper) : json(nullptr);
  if (!r.notes.empty()) out["notes"] = r.notes;
  return out;
}

json to_json(const ExceptionCase& c) {
  json out = coord_json(c.n, c.gamma);
  out["L_dot_E"] = integer_to_json(c.l_dot_e);
  out["E_self"] = integer_to_json(c.e_self);
  out["m_max"] = integer_to_json(c.m_max);
  if (c.e_self > 0) out["hodge_cap"] = integer_to_json(c.hodge_cap);
  if (c.ratio_floor) out["ratio_floor"] = to_string(*c.ratio_floor);
  out["verdict"] = c.verdict == ExceptionCase::Verdict::excluded ? "excluded" : "violating";
  out["reason"] = c.reason;
  json ms = json::array();
  for (const auto& m : c.violating_m) ms.push_back(integer_to_json(m));
  out["violating_m"] = ms;
  return out;
}

json to_json(const CertificateResult& r) {
  json exceptions = json::array();
  for (const auto& c : r.exceptions) exceptions.push_back(to_json(c));
  json witnesses = json::array();
  for (const auto& w : r.witnesses)
    witnesses.push_back({{"n", integer_to_json(w.n)}, {"gamma", integer_to_json(w.gamma)}, {"m", integer_to_json(w.m)}});
  json skipped = json::array();
  for (const auto& c : r.isotropic_skipped) skipped.push_back(coord_json(c.n, c.gamma));
  return {{"problem",
           {{"genus_d", r.problem.genus_d},
            {"tau_d", to_string(r.problem.tau_d)},
            {"a", integer_to_json(r.problem.a)},
            {"b", integer_to_json(r.problem.b)},
            {"L_self", integer_to_json(r.problem.l_self())}}},
          {"outcome", r.proved() ? "proved" : "failed"},
          {"ratio", to_string(Rational(r.problem.a, r.problem.b))},
          {"m0", integer_to_json(r.m0)},
          {"threshold", integer_to_json(r.threshold)},
          {"m1",
           {{"passed", r.m1.passed},
            {"minimum", integer_to_json(r.m1.minimum)},
            {"argmin", coord_json(r.m1.argmin.n, r.m1.argmin.gamma)},
            {"positive_branch_minimum", integer_to_json(r.m1.positive_branch_minimum)},
            {"positive_branch_argmin", coord_json(r.m1.positive_branch_argmin.n, r.m1.positive_branch_argmin.gamma)}}},
          {"isotropic_skipped", skipped},
          {"exceptions", exceptions},
          {"witnesses", witnesses},
          {"transcript", r.transcript}};
}

json to_json(const SearchResult& r) {
  json out = {{"genus_d", r.genus_d}, {"tau_d", to_string(r.tau_d)}, {"max_b", r.max_b}};
  if (r.best) {
    out["found"] = true;
    out["a"] = integer_to_json(r.best->problem.a);
    out["b"] = integer_to_json(r.best->problem.b);
    out["ratio"] = to_string(Rational(r.best->problem.a, r.best->problem.b));
    out["ratio_approx"] = to_decimal(Rational(r.best->problem.a, r.best->problem.b));
    out["certificate"] = to_json(*r.best);
  } else {
    out["found"] = false;
  }
  json skipped = json::array();
  for (const auto& [a, b] : r.skipped) skipped.push_back({{"a", integer_to_json(a)}, {"b", integer_to_json(b)}});
  out["skipped"] = skipped;
  return out;
}

json to_json(const FinitenessReport& r) {
  json candidates = json::array();
  for (const auto& c : r.candidates) candidates.push_back(to_string(c));
  return {{"g", r.genus},
          {"alpha", to_string(r.alpha)},
          {"s", to_string(r.s)},
          {"k", integer_to_json(r.k)},
          {"N", integer_to_json(r.n_max)},
          {"M", integer_to_json(r.gamma_max)},
          {"candidates", candidates}};
}

DivClass div_class_from_json(const json& j) {
  return {Genus(j.at("genus").get<std::int64_t>()), integer_from_json(j.at("n")), integer_from_json(j.at("gamma"))};
}

Bound bound_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  const Rational payload(integer_from_json(j.at("num")), integer_from_json(j.at("den")));
  std::string provenance = j.value("provenance", "");
  if (kind == "rational") return Bound::rational(payload, std::move(provenance));
  if (kind == "sqrt") return Bound::sqrt(payload, std::move(provenance));
  throw std::invalid_argument("unknown bound kind '" + kind + "'");
}

TauReport tau_report_from_json(const json& j) {
  TauReport r{Genus(j.at("genus").get<std::int64_t>()), bound_from_json(j.at("lower")), {}, std::nullopt, {}};
  for (const auto& u : j.at("uppers"))
    r.uppers.push_back({bound_from_json(u.at("bound")), u.at("rule").get<std::string>(), u.value("provenance", "")});
  if (!j.at("best_upper").is_null()) r.best_upper = bound_from_json(j.at("best_upper"));
  if (j.contains("notes")) r.notes = j.at("notes").get<std::vector<std::string>>();
  return r;
}

FinitenessReport finiteness_from_json(const json& j) {
  FinitenessReport r;
  r.genus = j.at("g").get<std::int64_t>();
  r.alpha = rational_from_json(j.at("alpha"));
  r.s = rational_from_json(j.at("s"));
  r.k = integer_from_json(j.at("k"));
  r.n_max = integer_from_json(j.at("N"));
  r.gamma_max = integer_from_json(j.at("M"));
  for (const auto& c : j.at("candidates")) r.candidates.push_back(rational_from_json(c));
  return r;
}

DivClass parse_class(Genus genus, std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos)
    throw std::invalid_argument("class must be written \"n,gamma\", got '" + std::string(text) + "'");
  auto trim = [](std::string_view t) {
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
    return t;
  };
  return {genus, parse_integer(trim(text.substr(0, comma))), parse_integer(trim(text.substr(comma + 1)))};
}

Registry registry_from_json(const json& j) {
  Registry r = Registry::empty();
  r.set_nagata_perfect_squares(j.value("nagata_perfect_squares", false));
  if (j.contains("seshadri")) {
    for (const auto& e : j.at("seshadri")) {
      const std::string source = e.value("source", "");
      if (source.empty()) throw std::invalid_argument("registry entry without a source citation: " + e.dump());
      r.add({e.at("m").get<std::int64_t>(), Rational(integer_from_json(e.at("num")), integer_from_json(e.at("den"))), source});
    }
  }
  if (j.contains("certificates")) {
    for (const auto& c : j.at("certificates"))
      r.add_certificate({c.at("genus_d").get<std::int64_t>(), rational_from_json(c.at("tau_d")), integer_from_json(c.at("a")),
                         integer_from_json(c.at("b"))});
  }
  return r;
}

Registry load_registry(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open registry file " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::runtime_error("registry " + path.string() + " is not valid JSON: " + e.what());
  }
  return registry_from_json(j);
}

std::string tau_reports_csv(const std::vector<TauReport>& rows) {
  std::ostringstream out;
  out << "genus,lower,lower_approx,best_upper,best_upper_approx,uppers\n";
  for (const auto& r : rows) {
    std::string uppers;
    for (const auto& u : r.uppers) uppers += (uppers.empty() ? "" : ";") + u.rule + "=" + u.value.exact();
    out << r.genus.value() << "," << r.lower.exact() << "," << r.lower.approx() << ","
        << (r.best_upper ? r.best_upper->exact() : "") << "," << (r.best_upper ? r.best_upper->approx() : "") << ","
        << csv_quote(uppers) << "\n";
  }
  return out.str();
}

std::string finiteness_csv(const FinitenessReport& r) {
  std::ostringstream out;
  out << "g,alpha,s,k,N,M,candidate,candidate_approx\n";
  for (const auto& c : r.candidates)
    out << r.genus << "," << to_string(r.alpha) << "," << to_string(r.s) << "," << r.k << "," << r.n_max << "," << r.gamma_max
        << "," << to_string(c) << "," << to_decimal(c) << "\n";
  return out.str();
}

}  // namespace nefcone::io
