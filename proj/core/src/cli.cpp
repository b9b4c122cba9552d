#include "nefcone/cli.hpp"

#include "nefcone/bound_propagation.hpp"
#include "nefcone/errors.hpp"
#include "nefcone/exclusion_prover.hpp"
#include "nefcone/finiteness.hpp"
#include "nefcone/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

namespace nefcone::cli {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::int64_t int_flag(const std::string& name, const std::string& text) {
  try {
    return to_int64(parse_integer(text));
  } catch (const std::exception& e) {
    throw UsageError("--" + name + ": " + e.what());
  }
}

Rational rational_flag(const std::string& name, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::exception& e) {
    throw UsageError("--" + name + ": " + e.what());
  }
}

Registry registry_for(const std::string& path) { return path.empty() ? Registry::builtin() : io::load_registry(path); }

void print_bound_line(std::ostream& out, const std::string& label, const Bound& b, const std::string& extra = {}) {
  out << label << " " << b.exact() << " ~ " << b.approx();
  if (!extra.empty()) out << "  " << extra;
  out << "\n";
}

void print_report_text(std::ostream& out, const TauReport& r) {
  out << "genus " << r.genus.value() << "\n";
  print_bound_line(out, "lower", r.lower, "[" + r.lower.provenance() + "]");
  for (const auto& u : r.uppers) print_bound_line(out, "upper", u.value, u.rule + " [" + u.provenance + "]");
  if (r.best_upper) print_bound_line(out, "best ", *r.best_upper);
  for (const auto& n : r.notes) out << "note  " << n << "\n";
}

void add_format(CLI::App* cmd, std::string& format, const std::vector<std::string>& allowed) {
  cmd->add_option("--format", format, "Output format")->check(CLI::IsMember(allowed));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact bounds on the nef cone of the second symmetric product of a very general curve", "nefcone"};
  app.require_subcommand(1);

  std::string genus_text, class_text, class2_text, registry_path, format, max_genus_text;
  std::string genus_d_text, tau_d_text, a_text, b_text, transcript_path, max_b_text, alpha_text, s_text;
  std::string max_cases_text = "1000000";

  auto* pair = app.add_subcommand("pair", "Intersection number of two classes given as n,gamma");
  pair->add_option("--genus", genus_text, "Genus g")->required();
  pair->add_option("--class", class_text, "First class n,gamma")->required();
  pair->add_option("--class2", class2_text, "Second class n,gamma (defaults to the first)");
  add_format(pair, format, {"text", "json"});

  auto* tau = app.add_subcommand("tau", "Lower and upper bounds on tau for a very general curve");
  tau->add_option("--genus", genus_text, "Genus g")->required();
  tau->add_option("--registry", registry_path, "Registry JSON file (default: built-in entries)");
  add_format(tau, format, {"json", "csv", "text"});

  auto* table = app.add_subcommand("table", "Bounds on tau for every genus up to --max-genus");
  table->add_option("--max-genus", max_genus_text, "Largest genus")->required();
  table->add_option("--registry", registry_path, "Registry JSON file (default: built-in entries)");
  add_format(table, format, {"json", "csv", "text"});

  auto* certify_cmd = app.add_subcommand("certify", "Prove eps(p; D^(2), (a+b)x - b(delta/2)) >= b by exclusion");
  certify_cmd->add_option("--genus-d", genus_d_text, "Genus h of D")->required();
  certify_cmd->add_option("--tau-d", tau_d_text, "Certified upper bound on tau(D), P/Q")->required();
  certify_cmd->add_option("--a", a_text, "a")->required();
  certify_cmd->add_option("--b", b_text, "b")->required();
  certify_cmd->add_option("--transcript", transcript_path, "Also write the transcript to FILE");
  certify_cmd->add_option("--max-cases", max_cases_text, "Refuse exception regions larger than this");
  add_format(certify_cmd, format, {"text", "json"});

  auto* search = app.add_subcommand("search", "Smallest certifiable a/b with b <= --max-b");
  search->add_option("--genus-d", genus_d_text, "Genus h of D")->required();
  search->add_option("--tau-d", tau_d_text, "Certified upper bound on tau(D), P/Q")->required();
  search->add_option("--max-b", max_b_text, "Largest b in the grid")->required();
  search->add_option("--max-cases", max_cases_text, "Skip problems with larger exception regions");
  add_format(search, format, {"text", "json"});

  auto* finiteness = app.add_subcommand("finiteness", "Finite superset of the possible tau values >= alpha");
  finiteness->add_option("--genus", genus_text, "Genus g >= 2")->required();
  finiteness->add_option("--alpha", alpha_text, "alpha > sqrt(g), P/Q")->required();
  finiteness->add_option("--s", s_text, "Override s in (sqrt(g), alpha), P/Q");
  add_format(finiteness, format, {"json", "csv"});

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  if (!argv_rev.empty()) argv_rev.pop_back();
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    if (pair->parsed()) {
      const Genus g(int_flag("genus", genus_text));
      const DivClass d = io::parse_class(g, class_text);
      const DivClass e = class2_text.empty() ? d : io::parse_class(g, class2_text);
      const Integer value = intersect(d, e);
      if (format == "json")
        out << io::json{{"lhs", io::to_json(d)}, {"rhs", io::to_json(e)}, {"intersection", io::integer_to_json(value)}}.dump(2)
            << "\n";
      else
        out << value << "\n";
      return kSuccess;
    }

    if (tau->parsed() || table->parsed()) {
      const Registry registry = registry_for(registry_path);
      std::vector<TauReport> rows;
      if (tau->parsed())
        rows.push_back(tau_report(Genus(int_flag("genus", genus_text)), registry));
      else
        rows = emit_table(int_flag("max-genus", max_genus_text), registry);
      if (format.empty()) format = tau->parsed() ? "json" : "csv";
      if (format == "csv") {
        out << io::tau_reports_csv(rows);
      } else if (format == "text") {
        for (const auto& r : rows) print_report_text(out, r);
      } else if (tau->parsed()) {
        out << io::to_json(rows.front()).dump(2) << "\n";
      } else {
        io::json arr = io::json::array();
        for (const auto& r : rows) arr.push_back(io::to_json(r));
        out << arr.dump(2) << "\n";
      }
      return kSuccess;
    }

    if (certify_cmd->parsed()) {
      const CertificateProblem problem{int_flag("genus-d", genus_d_text), rational_flag("tau-d", tau_d_text),
                                       Integer(int_flag("a", a_text)), Integer(int_flag("b", b_text))};
      const auto max_cases = static_cast<std::size_t>(int_flag("max-cases", max_cases_text));
      const CertificateResult result = certify(problem, max_cases);
      if (!transcript_path.empty()) {
        std::ofstream file(transcript_path, std::ios::binary);
        if (!file) throw UsageError("cannot write transcript file " + transcript_path);
        file << result.transcript_text();
      }
      if (format == "json")
        out << io::to_json(result).dump(2) << "\n";
      else
        out << result.transcript_text();
      return result.proved() ? kSuccess : kCertificateFailed;
    }

    if (search->parsed()) {
      const SearchResult result = search_best_ratio(int_flag("genus-d", genus_d_text), rational_flag("tau-d", tau_d_text),
                                                    int_flag("max-b", max_b_text),
                                                    static_cast<std::size_t>(int_flag("max-cases", max_cases_text)));
      if (format == "json") {
        out << io::to_json(result).dump(2) << "\n";
      } else if (result.best) {
        const Rational ratio(result.best->problem.a, result.best->problem.b);
        out << "best a=" << result.best->problem.a << " b=" << result.best->problem.b << " ratio=" << to_string(ratio)
            << " ~ " << to_decimal(ratio) << "\n"
            << result.best->transcript_text();
      } else {
        out << "none found for b <= " << result.max_b << "\n";
      }
      for (const auto& [a, b] : result.skipped)
        err << "warning: skipped a=" << a << " b=" << b << " (exception region exceeds --max-cases)\n";
      return kSuccess;
    }

    if (finiteness->parsed()) {
      std::optional<Rational> s;
      if (!s_text.empty()) s = rational_flag("s", s_text);
      const FinitenessReport report = candidate_taus(int_flag("genus", genus_text), rational_flag("alpha", alpha_text), s);
      if (format == "csv")
        out << io::finiteness_csv(report);
      else
        out << io::to_json(report).dump(2) << "\n";
      return kSuccess;
    }
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n  rule: " << e.rule() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  err << app.help();
  return kUsage;
}

}  // namespace nefcone::cli
