#include "fdcalc/formulas.hpp"

#include <algorithm>
#include <stdexcept>

#include "fdcalc/arith.hpp"
#include "fdcalc/errors.hpp"

namespace fdcalc {

namespace {

void require_prime(std::uint64_t p) {
    if (!is_prime_u64(p)) throw std::invalid_argument("p must be prime");
}

void require_positive(std::uint32_t v, const char* name) {
    if (v == 0) throw std::invalid_argument(std::string(name) + " must be >= 1");
}

} // namespace

mpz_class weisman_sum(std::uint64_t k, std::int64_t j, std::uint64_t n) {
    if (k == 0) throw std::invalid_argument("residue modulus k must be >= 1");
    std::int64_t km = static_cast<std::int64_t>(k);
    std::uint64_t j0 = static_cast<std::uint64_t>(((j % km) + km) % km);
    mpz_class sum = 0, binom;
    for (std::uint64_t i = j0; i <= n; i += k) {
        mpz_bin_uiui(binom.get_mpz_t(), n, i);
        if (i % 2 == 0)
            sum += binom;
        else
            sum -= binom;
    }
    return sum;
}

std::uint64_t weisman_sum_mod(std::uint64_t k, std::int64_t j, std::uint64_t n, std::uint64_t m) {
    if (k == 0) throw std::invalid_argument("residue modulus k must be >= 1");
    if (m < 2) throw std::invalid_argument("modulus m must be >= 2");
    std::int64_t km = static_cast<std::int64_t>(k);
    std::uint64_t j0 = static_cast<std::uint64_t>(((j % km) + km) % km);
    mpz_class sum = 0, binom;
    mpz_class mod(static_cast<unsigned long>(m));
    for (std::uint64_t i = j0; i <= n; i += k) {
        mpz_bin_uiui(binom.get_mpz_t(), n, i);
        if (i % 2 == 0)
            sum += binom;
        else
            sum -= binom;
        mpz_fdiv_r(sum.get_mpz_t(), sum.get_mpz_t(), mod.get_mpz_t());
    }
    return mpz_get_ui(sum.get_mpz_t());
}

std::uint64_t weisman_threshold(std::uint64_t p, std::uint32_t alpha, std::uint32_t beta) {
    require_prime(p);
    require_positive(alpha, "alpha");
    require_positive(beta, "beta");
    return checked_mul(static_cast<std::uint64_t>(beta) * (p - 1) + 1, checked_pow(p, alpha - 1));
}

std::uint64_t weisman_boundary_value(std::uint64_t p, std::uint32_t beta) {
    require_prime(p);
    require_positive(beta, "beta");
    std::uint64_t m = checked_pow(p, beta);
    mpz_class v;
    mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(p), beta - 1);
    if (beta % 2 == 0) v = -v; // (-p)^(beta-1)
    mpz_class mod(static_cast<unsigned long>(m));
    mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), mod.get_mpz_t());
    return mpz_get_ui(v.get_mpz_t());
}

bool weisman_pair_holds(std::uint64_t p, std::uint32_t alpha, std::uint32_t beta,
                        std::uint32_t window) {
    std::uint64_t k = checked_pow(p, alpha);
    std::uint64_t m = checked_pow(p, beta);
    std::uint64_t thr = weisman_threshold(p, alpha, beta);
    std::uint64_t boundary = weisman_boundary_value(p, beta);
    for (std::uint64_t j = 0; j < k; ++j) {
        for (std::uint64_t n = thr; n <= thr + window; ++n)
            if (weisman_sum_mod(k, static_cast<std::int64_t>(j), n, m) != 0) return false;
        if (weisman_sum_mod(k, static_cast<std::int64_t>(j), thr - 1, m) != boundary) return false;
    }
    return true;
}

std::uint64_t delta_cyclic(std::uint64_t p, std::uint32_t alpha, std::uint32_t beta) {
    return weisman_threshold(p, alpha, beta) - 1;
}

WilsonCheck wilson_check(std::uint64_t p, std::uint32_t alpha, std::uint32_t beta) {
    std::uint64_t k = checked_pow(p, alpha);
    std::uint64_t m = checked_pow(p, beta);
    if (k > 4096)
        throw BudgetExceededError("wilson_check: p^alpha too large for the dense power");
    std::uint64_t thr = weisman_threshold(p, alpha, beta);

    FiniteAbelianGroup group({k});
    GroupRingElement t_minus_1 = GroupRingElement::delta(m, group, group.generator(0));
    GroupRingElement lhs = t_minus_1.pow(thr - 1);

    GroupRingElement rhs(m, group);
    mpz_class scalar(static_cast<unsigned long>(weisman_boundary_value(p, beta)));
    for (std::uint64_t i = 0; i < k; ++i) rhs.add_term(group.element_at(i), scalar);

    WilsonCheck out{lhs, rhs, lhs == rhs, (lhs * t_minus_1).is_zero()};
    return out;
}

namespace {

std::uint64_t max_over_compositions(std::uint64_t p, std::span<const std::uint32_t> alphas,
                                    std::size_t i, std::uint32_t remaining) {
    if (i + 1 == alphas.size())
        return delta_cyclic(p, alphas[i], remaining + 1);
    std::uint64_t best = 0;
    for (std::uint32_t b = 0; b <= remaining; ++b) {
        std::uint64_t rest = max_over_compositions(p, alphas, i + 1, remaining - b);
        best = std::max(best, checked_add(delta_cyclic(p, alphas[i], b + 1), rest));
    }
    return best;
}

} // namespace

std::uint64_t sum_theorem_max(std::uint64_t p, std::span<const std::uint32_t> alphas,
                              std::uint32_t beta) {
    require_prime(p);
    require_positive(beta, "beta");
    if (alphas.empty()) throw std::invalid_argument("need at least one cyclic summand");
    for (std::uint32_t a : alphas) require_positive(a, "alpha");
    return max_over_compositions(p, alphas, 0, beta - 1);
}

std::string_view to_string(DeltaCase c) {
    switch (c) {
    case DeltaCase::a_infinite: return "A_infinite";
    case DeltaCase::no_common_prime: return "no_common_prime";
    case DeltaCase::p_group_formula: return "p_group_formula";
    case DeltaCase::unbounded_codomain: return "unbounded_codomain";
    }
    return "?";
}

std::optional<DeltaCase> delta_case_from_string(std::string_view s) {
    for (DeltaCase c : {DeltaCase::a_infinite, DeltaCase::no_common_prime,
                        DeltaCase::p_group_formula, DeltaCase::unbounded_codomain})
        if (to_string(c) == s) return c;
    return std::nullopt;
}

DeltaResult delta_sup(const GroupDescriptor& a, const GroupDescriptor& b) {
    if (a.is_trivial() || b.is_trivial())
        throw TrivialGroupError("delta_sup requires nontrivial groups");

    if (!a.is_finite())
        return DeltaResult{ExtNat::infinity(), DeltaCase::a_infinite, false};

    StructureStats sa = a.stats();
    StructureStats sb = b.stats();
    if (!sa.is_p_group || !sb.is_p_group || *sa.is_p_group != *sb.is_p_group)
        return DeltaResult{ExtNat::infinity(), DeltaCase::no_common_prime, false};

    std::uint64_t p = *sa.is_p_group;
    const PrimaryPart& bp = *b.part(p);
    if (bp.unbounded)
        return DeltaResult{ExtNat::infinity(), DeltaCase::unbounded_codomain, true};

    const PrimaryPart& ap = *a.part(p);
    std::uint32_t beta = bp.max_exponent();
    std::uint32_t alpha_max = ap.max_exponent();
    std::uint64_t value = 0;
    for (const PrimaryFactor& f : ap.factors)
        value = checked_add(value,
                            checked_mul(*f.multiplicity, checked_pow(p, f.exponent) - 1));
    value = checked_add(value, checked_mul(static_cast<std::uint64_t>(beta - 1) * (p - 1),
                                           checked_pow(p, alpha_max - 1)));
    return DeltaResult{ExtNat::finite(value), DeltaCase::p_group_formula, true};
}

ExtNat delta_circ(const GroupDescriptor& a, const GroupDescriptor& b) {
    if (a.is_trivial() || b.is_trivial())
        throw TrivialGroupError("delta_circ requires nontrivial groups");

    // A surjection onto Z realizes every finite degree.
    if (a.free_rank() > 0) return ExtNat::infinity();

    for (const auto& [p, part] : a.primary_parts())
        if (part.unbounded)
            throw UnsupportedError(
                "finite-degree supremum is not classified for a torsion domain with a "
                "primary part of unbounded exponent");

    if (b.primary_parts().empty()) return ExtNat::finite(0); // B torsion-free
    if (b.free_rank() > 0) {
        // Mixed codomain: the torsion-free part only contributes constants
        // and maps of infinite degree.
        return delta_circ(a, GroupDescriptor(0, b.primary_parts()));
    }

    ExtNat result = ExtNat::finite(0); // nonzero constants
    for (const auto& [p, ap] : a.primary_parts()) {
        const PrimaryPart* bp = b.part(p);
        if (bp == nullptr) continue;
        if (bp->unbounded || !ap.finite_set()) {
            result = ExtNat::infinity();
            continue;
        }
        GroupDescriptor ap_only = a.primary_component(p);
        GroupDescriptor bp_only = b.primary_component(p);
        result = ExtNat::max(result, delta_sup(ap_only, bp_only).value);
    }
    return result;
}

bool DegreeSet::contains(ExtNat d) const {
    if (d.is_neg_infinity()) return true;
    if (d.is_infinity()) return contains_inf;
    return d <= finite_sup;
}

std::string DegreeSet::str() const {
    std::string out = "{-inf}";
    if (finite_sup.is_infinity())
        out += " u N";
    else if (finite_sup == ExtNat::finite(0))
        out += " u {0}";
    else if (finite_sup.is_finite())
        out += " u {0.." + std::to_string(finite_sup.finite_value()) + "}";
    if (contains_inf) out += " u {inf}";
    return out;
}

DegreeSet degree_set(const GroupDescriptor& a, const GroupDescriptor& b) {
    if (b.is_trivial()) return DegreeSet{ExtNat::neg_infinity(), false};
    if (a.is_trivial()) return DegreeSet{ExtNat::finite(0), false};

    StructureStats sa = a.stats();
    StructureStats sb = b.stats();
    bool attained_inf = !(sa.is_finite && sa.is_p_group && sb.is_p_group &&
                          *sa.is_p_group == *sb.is_p_group);
    return DegreeSet{delta_circ(a, b), attained_inf};
}

ExtNat predicted_nu(std::uint64_t m, const GroupDescriptor& a) {
    if (m == 1) throw std::invalid_argument("coefficient ring Z_1 is the zero ring");
    if (a.is_trivial()) return ExtNat::finite(1);
    if (m == 0) return ExtNat::infinity();
    return delta_sup(a, GroupDescriptor::cyclic(m)).value.plus(1);
}

} // namespace fdcalc
