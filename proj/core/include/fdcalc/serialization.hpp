#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "fdcalc/extnat.hpp"
#include "fdcalc/formulas.hpp"
#include "fdcalc/func_table.hpp"
#include "fdcalc/group_ring.hpp"
#include "fdcalc/verify.hpp"

namespace fdcalc {

using Json = nlohmann::ordered_json;

/// Numbers stay JSON numbers; the infinities are the strings "inf"/"-inf".
Json extnat_to_json(ExtNat v);
ExtNat extnat_from_json(const Json& j);

Json to_json(const DeltaResult& r);
DeltaResult delta_result_from_json(const Json& j);

Json to_json(const DegreeSet& s);
DegreeSet degree_set_from_json(const Json& j);

Json to_json(const SuiteReport& r);
SuiteReport suite_report_from_json(const Json& j);

/// {"modulus": m, "group": spec, "terms": [[[coords...], "coeff"], ...]}
/// with terms sorted by enumeration index and coefficients as decimal
/// strings.
Json to_json(const GroupRingElement& e);
GroupRingElement group_ring_from_json(const Json& j);

/// Map file: {"domain": spec, "codomain": spec, "values": [[coords...], ...]}
/// dense in the domain's enumeration order. The group spec is read term by
/// term, so a non-canonical factor list round-trips bit-exactly.
Json map_to_json(const FuncTable& f);
FuncTable map_from_json(const Json& j);
std::string map_to_string(const FuncTable& f);
FuncTable map_from_string(std::string_view text);

/// Concrete group from a spec string, keeping the written factor order and
/// expanding finite multiplicities in place. Rejects infinite terms.
FiniteAbelianGroup finite_group_from_spec(std::string_view text);

} // namespace fdcalc
