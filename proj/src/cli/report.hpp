#ifndef ABELPELL_CLI_REPORT_HPP
#define ABELPELL_CLI_REPORT_HPP

#include <string>
#include <string_view>

#include "json.hpp"

#include "abelpell/abel_map.hpp"
#include "abelpell/components.hpp"
#include "abelpell/pell.hpp"
#include "abelpell/ramspec.hpp"
#include "abelpell/strata.hpp"

namespace abel::cli {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& r);
Json poly_json(const UniPoly& p, std::string_view var);
Json triple_json(const PellTriple& t, std::string_view var);
Json partition_json(const Partition& p);
Json ramspec_json(const RamSpec& s);
Json verification_json(const VerificationReport& r);
Json hurwitz_json(const HurwitzReport& r);
Json tangent_json(const TangentRank& r);
Json certificate_json(const OrbitCertificate& c, bool with_tuples);

// {"name": ..., "ok": ...}
Json check(std::string_view name, bool ok);
bool all_checks_pass(const Json& checks);

// Indented key/value rendering of the same document.
std::string render_text(const Json& doc);

}  // namespace abel::cli

#endif  // ABELPELL_CLI_REPORT_HPP
