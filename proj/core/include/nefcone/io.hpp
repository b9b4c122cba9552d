#pragma once

// JSON and CSV renderings of the library's values, and the registry file.
//
// Exact values are always present: integers as JSON numbers (or decimal
// strings past 64 bits), rationals as "P/Q" strings, bounds as
// {"kind", "num", "den", "provenance"} with an "approx" display string.

#include "nefcone/bound_propagation.hpp"
#include "nefcone/exclusion_prover.hpp"
#include "nefcone/finiteness.hpp"
#include "nefcone/ns_lattice.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>
#include <string_view>

namespace nefcone::io {

using nlohmann::json;

json integer_to_json(const Integer& v);
Integer integer_from_json(const json& j);

json to_json(const DivClass& d);
json to_json(const QClass& q);
json to_json(const Bound& b);
json to_json(const TauReport& r);
json to_json(const ExceptionCase& c);
json to_json(const CertificateResult& r);
json to_json(const SearchResult& r);
json to_json(const FinitenessReport& r);

DivClass div_class_from_json(const json& j);
Bound bound_from_json(const json& j);
TauReport tau_report_from_json(const json& j);
FinitenessReport finiteness_from_json(const json& j);

/// "n,gamma" with integer entries.
DivClass parse_class(Genus genus, std::string_view text);

Registry registry_from_json(const json& j);
/// Throws std::runtime_error if the file cannot be read or parsed.
Registry load_registry(const std::filesystem::path& path);

std::string tau_reports_csv(const std::vector<TauReport>& rows);
std::string finiteness_csv(const FinitenessReport& r);

}  // namespace nefcone::io
