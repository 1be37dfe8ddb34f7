// fdcalc: exact functional-degree calculus for finite abelian groups.
//
// Exit codes: 0 success, 1 domain error (bad spec, unsupported class,
// malformed input), 2 verification failure (a cross-check came out false).

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "fdcalc/arith.hpp"
#include "fdcalc/descriptor.hpp"
#include "fdcalc/errors.hpp"
#include "fdcalc/formulas.hpp"
#include "fdcalc/func_table.hpp"
#include "fdcalc/group_ring.hpp"
#include "fdcalc/serialization.hpp"
#include "fdcalc/verify.hpp"

using namespace fdcalc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomainError = 1;
constexpr int kExitVerificationFailure = 2;

struct GlobalOpts {
    bool json = false;
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::uint64_t budget_ms = 0; // 0 = unlimited
};

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string yesno(bool b) { return b ? "yes" : "no"; }

// Coefficients as a polynomial in t for rank-one group rings, index order.
std::string poly_str(const GroupRingElement& e) {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, c] : e.terms()) {
        if (!first) os << " + ";
        first = false;
        if (idx == 0)
            os << c.get_str();
        else if (c == 1)
            os << "t" << (idx == 1 ? "" : "^" + std::to_string(idx));
        else
            os << c.get_str() << "*t" << (idx == 1 ? "" : "^" + std::to_string(idx));
    }
    return os.str();
}

std::string delta_formula_text(const GroupDescriptor& a, const GroupDescriptor& b,
                               const DeltaResult& r) {
    switch (r.case_tag) {
    case DeltaCase::a_infinite:
        return "A is infinite, so delta functions already have unbounded degree";
    case DeltaCase::no_common_prime:
        return "no prime p makes A a finite p-group and B a p-group, so some delta "
               "function has infinite degree";
    case DeltaCase::unbounded_codomain:
        return "B has unbounded exponent: delta = inf although every single map has "
               "finite degree";
    case DeltaCase::p_group_formula: {
        std::uint64_t p = *a.stats().is_p_group;
        const PrimaryPart& ap = *a.part(p);
        std::uint32_t beta = b.part(p)->max_exponent();
        std::uint64_t sum = 0;
        std::ostringstream terms;
        bool first = true;
        for (const PrimaryFactor& f : ap.factors) {
            for (std::uint64_t i = 0; i < *f.multiplicity; ++i) {
                std::uint64_t v = checked_pow(p, f.exponent) - 1;
                sum += v;
                if (!first) terms << "+";
                first = false;
                terms << v;
            }
        }
        std::uint64_t top = (static_cast<std::uint64_t>(beta) - 1) * (p - 1) *
                            checked_pow(p, ap.max_exponent() - 1);
        std::ostringstream os;
        os << "p=" << p << ", beta=" << beta << ": sum_j (p^a_j - 1) = " << terms.str() << " = "
           << sum << "; (beta-1)(p-1)p^(a_1-1) = " << top << "; total " << (sum + top);
        return os.str();
    }
    }
    return "";
}

int cmd_parse(const GlobalOpts& g, const std::string& spec) {
    GroupDescriptor d = GroupDescriptor::parse(spec);
    StructureStats s = d.stats();
    Json order = "inf";
    if (s.is_finite) {
        try {
            order = d.to_finite_group().order();
        } catch (const std::overflow_error&) {
            order = "overflow";
        }
    }
    if (g.json) {
        Json j{{"input", spec},
               {"canonical", d.str()},
               {"order", order},
               {"exponent", extnat_to_json(s.exponent)},
               {"e", s.e_value},
               {"rank", extnat_to_json(s.rank)},
               {"is_finite", s.is_finite},
               {"is_torsion", s.is_torsion},
               {"is_trivial", s.is_trivial}};
        j["p_group"] = s.is_p_group ? Json(*s.is_p_group) : Json(nullptr);
        emit(j);
        return kExitOk;
    }
    std::cout << "canonical: " << d.str() << "\n";
    std::cout << "order    = " << (order.is_string() ? order.get<std::string>()
                                                     : std::to_string(order.get<std::uint64_t>()))
              << "\n";
    std::cout << "exponent = " << s.exponent.str() << " (e = " << s.e_value << ")\n";
    std::cout << "rank     = " << s.rank.str() << "\n";
    std::cout << "finite " << yesno(s.is_finite) << ", torsion " << yesno(s.is_torsion)
              << ", trivial " << yesno(s.is_trivial) << ", p-group "
              << (s.is_p_group ? "p=" + std::to_string(*s.is_p_group) : std::string("no"))
              << "\n";
    return kExitOk;
}

int cmd_delta(const GlobalOpts& g, const std::string& dom, const std::string& cod) {
    GroupDescriptor a = GroupDescriptor::parse(dom);
    GroupDescriptor b = GroupDescriptor::parse(cod);
    DeltaResult r = delta_sup(a, b);
    std::string formula = delta_formula_text(a, b, r);
    if (g.json) {
        Json j = to_json(r);
        j["domain"] = a.str();
        j["codomain"] = b.str();
        j["formula"] = formula;
        emit(j);
        return kExitOk;
    }
    std::cout << "delta = " << r.value.str() << "\n";
    std::cout << "case  = " << to_string(r.case_tag) << "\n";
    std::cout << "all maps finite degree: " << yesno(r.all_maps_finite_degree) << "\n";
    std::cout << "formula: " << formula << "\n";
    return kExitOk;
}

int cmd_degree_set(const GlobalOpts& g, const std::string& dom, const std::string& cod) {
    GroupDescriptor a = GroupDescriptor::parse(dom);
    GroupDescriptor b = GroupDescriptor::parse(cod);
    DegreeSet s = degree_set(a, b);
    if (g.json) {
        Json j = to_json(s);
        j["domain"] = a.str();
        j["codomain"] = b.str();
        j["rendered"] = s.str();
        emit(j);
        return kExitOk;
    }
    std::cout << "D(" << a.str() << ", " << b.str() << ") = " << s.str() << "\n";
    std::cout << "finite sup = " << s.finite_sup.str() << ", contains inf: "
              << yesno(s.contains_inf) << "\n";
    return kExitOk;
}

int cmd_fdeg(const GlobalOpts& g, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open map file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    FuncTable f = map_from_string(buf.str());
    ExtNat d = fdeg(f);
    if (g.json) {
        emit(Json{{"domain", f.domain().str()},
                  {"codomain", f.codomain().str()},
                  {"fdeg", extnat_to_json(d)}});
        return kExitOk;
    }
    std::cout << "fdeg = " << d.str() << "  (" << f.domain().str() << " -> "
              << f.codomain().str() << ", " << f.domain().order() << " entries)\n";
    return kExitOk;
}

int cmd_nilpotency(const GlobalOpts& g, std::uint64_t modulus, const std::string& spec,
                   std::uint64_t cap) {
    GroupDescriptor d = GroupDescriptor::parse(spec);
    FiniteAbelianGroup group = d.to_finite_group();
    ExtNat predicted = predicted_nu(modulus, d);
    ExtNat nu = nilpotency_index(modulus, group, cap);
    bool agree = nu == predicted;
    if (g.json) {
        emit(Json{{"modulus", modulus},
                  {"group", group.str()},
                  {"nu", extnat_to_json(nu)},
                  {"predicted", extnat_to_json(predicted)},
                  {"agree", agree},
                  {"cap", cap}});
    } else {
        std::cout << "nu = " << nu.str() << "  (Z_" << modulus << "[" << group.str() << "], "
                  << (nu.is_finite() ? "by scan" : "by structural test") << ")\n";
        std::cout << "predicted by closed form: " << predicted.str() << "\n";
    }
    if (!agree) {
        std::cerr << "error: scan and closed form disagree\n";
        return kExitVerificationFailure;
    }
    return kExitOk;
}

int cmd_weisman(const GlobalOpts& g, std::uint64_t p, std::uint32_t alpha, std::uint32_t beta,
                const std::optional<std::int64_t>& j, const std::optional<std::uint64_t>& n) {
    std::uint64_t k = checked_pow(p, alpha);
    std::uint64_t m = checked_pow(p, beta);
    if (j.has_value() != n.has_value())
        throw std::invalid_argument("--j and --n must be given together");
    if (j) {
        mpz_class exact = weisman_sum(k, *j, *n);
        std::uint64_t residue = weisman_sum_mod(k, *j, *n, m);
        if (g.json) {
            emit(Json{{"k", k}, {"j", *j},       {"n", *n},
                      {"value", exact.get_str()}, {"mod", m}, {"residue", residue}});
        } else {
            std::cout << "M_" << k << "(" << *j << ", " << *n << ") = " << exact.get_str()
                      << "\n";
            std::cout << "mod " << m << ": " << residue << "\n";
        }
        return kExitOk;
    }
    std::uint64_t thr = weisman_threshold(p, alpha, beta);
    std::uint64_t boundary = weisman_boundary_value(p, beta);
    bool holds = weisman_pair_holds(p, alpha, beta);
    if (g.json) {
        emit(Json{{"p", p},
                  {"alpha", alpha},
                  {"beta", beta},
                  {"threshold", thr},
                  {"boundary_value", boundary},
                  {"holds", holds}});
    } else {
        std::cout << "threshold = (beta(p-1)+1) p^(alpha-1) = " << thr << "\n";
        std::cout << "M_" << k << "(j, n) = 0 mod " << m << " for n in [" << thr << ", "
                  << (thr + 4) << "], and = " << boundary << " at n = " << (thr - 1) << ": "
                  << (holds ? "verified" : "FAILED") << "\n";
    }
    return holds ? kExitOk : kExitVerificationFailure;
}

int cmd_wilson(const GlobalOpts& g, std::uint64_t p, std::uint32_t alpha, std::uint32_t beta) {
    WilsonCheck w = wilson_check(p, alpha, beta);
    std::uint64_t thr = weisman_threshold(p, alpha, beta);
    if (g.json) {
        emit(Json{{"p", p},
                  {"alpha", alpha},
                  {"beta", beta},
                  {"threshold", thr},
                  {"equal", w.equal},
                  {"vanishes_at_threshold", w.vanishes_at_threshold},
                  {"lhs", to_json(w.lhs)},
                  {"rhs", to_json(w.rhs)}});
    } else {
        std::cout << "ring Z_" << checked_pow(p, beta) << "[Z_" << checked_pow(p, alpha)
                  << "]\n";
        std::cout << "(t-1)^" << (thr - 1) << " = " << poly_str(w.lhs) << "\n";
        std::cout << "(-p)^(beta-1) sum t^i = " << poly_str(w.rhs) << "\n";
        std::cout << "equal: " << yesno(w.equal) << "; (t-1)^" << thr
                  << " = 0: " << yesno(w.vanishes_at_threshold) << "\n";
    }
    return w.equal && w.vanishes_at_threshold ? kExitOk : kExitVerificationFailure;
}

int cmd_verify(const GlobalOpts& g, const std::string& suite, VerifyBudget budget,
               const std::string& out_path) {
    if (g.seed_set) budget.seed = g.seed;
    std::vector<std::string> names;
    if (suite == "all")
        names = suite_names();
    else
        names.push_back(suite);

    auto start = std::chrono::steady_clock::now();
    std::vector<SuiteReport> reports;
    bool budget_hit = false;
    for (const std::string& name : names) {
        if (g.budget_ms > 0) {
            double elapsed = std::chrono::duration<double, std::milli>(
                                 std::chrono::steady_clock::now() - start)
                                 .count();
            if (elapsed > static_cast<double>(g.budget_ms)) {
                budget_hit = true;
                break;
            }
        }
        reports.push_back(run_suite(name, budget));
    }

    std::uint64_t failed = 0;
    for (const SuiteReport& r : reports)
        if (!r.passed()) ++failed;

    if (!out_path.empty()) {
        Json out = Json::array();
        for (const SuiteReport& r : reports) out.push_back(to_json(r));
        std::ofstream file(out_path);
        if (!file) throw std::invalid_argument("cannot write report file: " + out_path);
        file << out.dump(2) << "\n";
    }
    if (g.json) {
        Json out = Json::array();
        for (const SuiteReport& r : reports) out.push_back(to_json(r));
        emit(out);
    } else {
        for (const SuiteReport& r : reports) {
            std::printf("[%s] %-18s %6llu cases  %8.1f ms\n", r.passed() ? "PASS" : "FAIL",
                        r.suite.c_str(), static_cast<unsigned long long>(r.cases_run),
                        r.wall_time_ms);
            if (!r.passed()) {
                const SuiteFailure& f = r.failures.front();
                std::printf("    law:      %s\n", f.citation.c_str());
                std::printf("    inputs:   %s\n", f.inputs.c_str());
                std::printf("    expected: %s\n    actual:   %s\n", f.expected.c_str(),
                            f.actual.c_str());
                if (r.failures.size() > 1)
                    std::printf("    (%zu further failures)\n", r.failures.size() - 1);
            }
        }
    }
    if (budget_hit) {
        std::cerr << "error: --budget-ms exhausted before all suites ran\n";
        return failed > 0 ? kExitVerificationFailure : kExitDomainError;
    }
    return failed > 0 ? kExitVerificationFailure : kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact functional-degree calculus for maps between abelian groups"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    app.add_flag("--json", g.json, "machine-readable JSON output");
    auto* seed_opt = app.add_option("--seed", g.seed, "seed for randomized verification");
    app.add_option("--budget-ms", g.budget_ms, "wall-time budget for verify (0 = unlimited)");

    std::string group_spec, domain_spec, codomain_spec, map_path;
    std::uint64_t modulus = 2, cap = 4096;
    std::uint64_t wp = 2;
    std::uint32_t walpha = 1, wbeta = 1;
    std::optional<std::int64_t> wj;
    std::optional<std::uint64_t> wn;
    std::string suite = "all";
    VerifyBudget budget;

    auto* parse_cmd = app.add_subcommand("parse", "parse and normalize a group spec");
    parse_cmd->add_option("--group", group_spec, "group spec, e.g. Z4xZ2")->required();

    auto* delta_cmd = app.add_subcommand("delta", "largest degree of any map A -> B");
    delta_cmd->add_option("--domain", domain_spec)->required();
    delta_cmd->add_option("--codomain", codomain_spec)->required();

    auto* ds_cmd = app.add_subcommand("degree-set", "the set of attained degrees D(A,B)");
    ds_cmd->add_option("--domain", domain_spec)->required();
    ds_cmd->add_option("--codomain", codomain_spec)->required();

    auto* fdeg_cmd = app.add_subcommand("fdeg", "functional degree of a map table");
    fdeg_cmd->add_option("--map", map_path, "JSON map file")->required();

    auto* nil_cmd = app.add_subcommand("nilpotency",
                                       "nilpotency index of the augmentation ideal of Z_m[A]");
    nil_cmd->add_option("--modulus", modulus, "coefficient modulus m (0 = integers)")->required();
    nil_cmd->add_option("--group", group_spec, "finite group spec")->required();
    nil_cmd->add_option("--cap", cap, "hard scan bound");

    auto* weis_cmd = app.add_subcommand("weisman", "alternating binomial sums M_{p^alpha}(j, n)");
    weis_cmd->add_option("--p", wp, "prime")->required();
    weis_cmd->add_option("--alpha", walpha)->required();
    weis_cmd->add_option("--beta", wbeta)->required();
    weis_cmd->add_option("--j", wj, "residue class (with --n: evaluate one sum)");
    weis_cmd->add_option("--n", wn, "upper index (with --j: evaluate one sum)");

    auto* wil_cmd = app.add_subcommand("wilson", "group-ring congruence for (t-1)^(threshold-1)");
    wil_cmd->add_option("--p", wp, "prime")->required();
    wil_cmd->add_option("--alpha", walpha)->required();
    wil_cmd->add_option("--beta", wbeta)->required();

    std::string report_path;
    auto* ver_cmd = app.add_subcommand("verify", "run cross-validation suites");
    ver_cmd->add_option("--suite", suite, "suite id or 'all'");
    ver_cmd->add_option("--max-group-order", budget.max_group_order);
    ver_cmd->add_option("--max-beta", budget.max_beta);
    ver_cmd->add_option("--corpus-size", budget.corpus_size);
    ver_cmd->add_option("--out", report_path, "also write the JSON report to a file");

    CLI11_PARSE(app, argc, argv);
    g.seed_set = seed_opt->count() > 0;

    try {
        if (*parse_cmd) return cmd_parse(g, group_spec);
        if (*delta_cmd) return cmd_delta(g, domain_spec, codomain_spec);
        if (*ds_cmd) return cmd_degree_set(g, domain_spec, codomain_spec);
        if (*fdeg_cmd) return cmd_fdeg(g, map_path);
        if (*nil_cmd) return cmd_nilpotency(g, modulus, group_spec, cap);
        if (*weis_cmd) return cmd_weisman(g, wp, walpha, wbeta, wj, wn);
        if (*wil_cmd) return cmd_wilson(g, wp, walpha, wbeta);
        if (*ver_cmd) return cmd_verify(g, suite, budget, report_path);
    } catch (const CapExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomainError;
    }
    return kExitDomainError;
}
