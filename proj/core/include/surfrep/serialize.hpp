#pragma once

#include "surfrep/certify.hpp"
#include "surfrep/repspace.hpp"
#include "surfrep/representation.hpp"
#include "surfrep/scc.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace surfrep {

/* JSON views of the core value types.  Insertion order is preserved
 * (nlohmann::ordered_json) so output is byte-stable and reads in the
 * natural field order.  Rationals and matrices serialize as their exact
 * text forms ("p/q", "x,y,det"). */

nlohmann::ordered_json to_json(const RepPoint& pt);
RepPoint rep_point_from_json(const nlohmann::ordered_json& j);  // throws std::invalid_argument

nlohmann::ordered_json to_json(const GenAssignment& rep);

nlohmann::ordered_json to_json(const MembershipResult& m);

/* Catalog entries carry the presentation so the word can be rendered. */
nlohmann::ordered_json to_json(const SccClass& cls, const Presentation& pres);

/* One-line text form:  kind=<tag>[:<index>] one_sided=<0|1> [k=<k> l=<l>] <word> */
std::string scc_line(const SccClass& cls, const Presentation& pres);

nlohmann::ordered_json to_json(const Certificate& cert);
Certificate certificate_from_json(const nlohmann::ordered_json& j);  // throws std::invalid_argument

nlohmann::ordered_json to_json(const ScanResult& result, const Presentation& pres);

nlohmann::ordered_json to_json(const TwoSidedReport& report);

}  // namespace surfrep
