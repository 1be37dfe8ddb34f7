#include "fdcalc/serialization.hpp"

#include <cctype>
#include <stdexcept>

#include "fdcalc/descriptor.hpp"
#include "fdcalc/errors.hpp"

namespace fdcalc {

Json extnat_to_json(ExtNat v) {
    if (v.is_finite()) return v.finite_value();
    return v.is_infinity() ? "inf" : "-inf";
}

ExtNat extnat_from_json(const Json& j) {
    if (j.is_number_unsigned()) return ExtNat::finite(j.get<std::uint64_t>());
    if (j.is_string()) {
        auto v = ExtNat::parse(j.get<std::string>());
        if (v) return *v;
    }
    throw std::invalid_argument("not an extended natural: " + j.dump());
}

Json to_json(const DeltaResult& r) {
    return Json{{"value", extnat_to_json(r.value)},
                {"case", std::string(to_string(r.case_tag))},
                {"all_maps_finite_degree", r.all_maps_finite_degree}};
}

DeltaResult delta_result_from_json(const Json& j) {
    auto c = delta_case_from_string(j.at("case").get<std::string>());
    if (!c) throw std::invalid_argument("unknown delta case tag");
    return DeltaResult{extnat_from_json(j.at("value")), *c,
                       j.at("all_maps_finite_degree").get<bool>()};
}

Json to_json(const DegreeSet& s) {
    return Json{{"finite_sup", extnat_to_json(s.finite_sup)}, {"contains_inf", s.contains_inf}};
}

DegreeSet degree_set_from_json(const Json& j) {
    return DegreeSet{extnat_from_json(j.at("finite_sup")), j.at("contains_inf").get<bool>()};
}

Json to_json(const SuiteReport& r) {
    Json failures = Json::array();
    for (const SuiteFailure& f : r.failures)
        failures.push_back(Json{{"inputs", f.inputs},
                                {"expected", f.expected},
                                {"actual", f.actual},
                                {"citation", f.citation}});
    return Json{{"suite", r.suite},
                {"cases_run", r.cases_run},
                {"failures", std::move(failures)},
                {"wall_time_ms", r.wall_time_ms}};
}

SuiteReport suite_report_from_json(const Json& j) {
    SuiteReport r;
    r.suite = j.at("suite").get<std::string>();
    r.cases_run = j.at("cases_run").get<std::uint64_t>();
    for (const Json& f : j.at("failures"))
        r.failures.push_back(SuiteFailure{
            f.at("inputs").get<std::string>(), f.at("expected").get<std::string>(),
            f.at("actual").get<std::string>(), f.at("citation").get<std::string>()});
    r.wall_time_ms = j.at("wall_time_ms").get<double>();
    return r;
}

namespace {

Json coords_json(const GroupElement& e) {
    Json out = Json::array();
    for (std::uint64_t c : e.coords) out.push_back(c);
    return out;
}

GroupElement coords_from_json(const Json& j) {
    GroupElement e;
    for (const Json& c : j) e.coords.push_back(c.get<std::uint64_t>());
    return e;
}

} // namespace

FiniteAbelianGroup finite_group_from_spec(std::string_view text) {
    // Validate against the full grammar first so errors carry positions.
    GroupDescriptor parsed = GroupDescriptor::parse(text);
    if (!parsed.is_finite())
        throw NotFiniteError("map files require a finite domain and codomain");

    // Re-read term by term to keep the written factor order.
    std::string compact;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
    std::vector<std::uint64_t> factors;
    if (compact == "1") return FiniteAbelianGroup(std::move(factors));
    std::size_t pos = 0;
    while (pos < compact.size()) {
        ++pos; // leading 'Z' (validated above)
        std::uint64_t n = 0;
        while (pos < compact.size() && compact[pos] >= '0' && compact[pos] <= '9')
            n = n * 10 + static_cast<std::uint64_t>(compact[pos++] - '0');
        std::uint64_t mult = 1;
        if (pos < compact.size() && compact[pos] == '*') {
            ++pos;
            mult = 0;
            while (pos < compact.size() && compact[pos] >= '0' && compact[pos] <= '9')
                mult = mult * 10 + static_cast<std::uint64_t>(compact[pos++] - '0');
        }
        for (std::uint64_t i = 0; i < mult; ++i) factors.push_back(n);
        if (pos < compact.size()) ++pos; // 'x'
    }
    return FiniteAbelianGroup(std::move(factors));
}

Json to_json(const GroupRingElement& e) {
    Json terms = Json::array();
    for (const auto& [idx, c] : e.terms())
        terms.push_back(Json::array({coords_json(e.group().element_at(idx)), c.get_str()}));
    return Json{{"modulus", e.modulus()}, {"group", e.group().str()}, {"terms", std::move(terms)}};
}

GroupRingElement group_ring_from_json(const Json& j) {
    FiniteAbelianGroup group = finite_group_from_spec(j.at("group").get<std::string>());
    GroupRingElement out(j.at("modulus").get<std::uint64_t>(), group);
    for (const Json& t : j.at("terms")) {
        GroupElement a = coords_from_json(t.at(0));
        out.add_term(a, mpz_class(t.at(1).get<std::string>()));
    }
    return out;
}

Json map_to_json(const FuncTable& f) {
    Json values = Json::array();
    for (std::uint64_t i = 0; i < f.domain().order(); ++i)
        values.push_back(coords_json(f.codomain().element_at(f.value_index(i))));
    return Json{{"domain", f.domain().str()},
                {"codomain", f.codomain().str()},
                {"values", std::move(values)}};
}

FuncTable map_from_json(const Json& j) {
    FiniteAbelianGroup domain = finite_group_from_spec(j.at("domain").get<std::string>());
    FiniteAbelianGroup codomain = finite_group_from_spec(j.at("codomain").get<std::string>());
    const Json& values = j.at("values");
    if (values.size() != domain.order())
        throw std::invalid_argument("map file: need exactly one value per domain element");
    FuncTable out(std::move(domain), std::move(codomain));
    for (std::uint64_t i = 0; i < out.domain().order(); ++i) {
        GroupElement v = coords_from_json(values.at(i));
        out.codomain().require_element(v);
        out.set_value_index(i, out.codomain().index_of(v));
    }
    return out;
}

std::string map_to_string(const FuncTable& f) { return map_to_json(f).dump(); }

FuncTable map_from_string(std::string_view text) {
    return map_from_json(Json::parse(text));
}

} // namespace fdcalc
