#include "fdcalc/func_table.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include <gmpxx.h>

#include "fdcalc/arith.hpp"
#include "fdcalc/descriptor.hpp"
#include "fdcalc/errors.hpp"
#include "fdcalc/formulas.hpp"

namespace fdcalc {

FuncTable::FuncTable(FiniteAbelianGroup domain, FiniteAbelianGroup codomain)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      values_(domain_.order(), 0) {}

FuncTable FuncTable::constant(FiniteAbelianGroup domain, FiniteAbelianGroup codomain,
                              const GroupElement& value) {
    codomain.require_element(value);
    FuncTable out(std::move(domain), std::move(codomain));
    std::uint64_t v = out.codomain_.index_of(value);
    std::fill(out.values_.begin(), out.values_.end(), v);
    return out;
}

FuncTable FuncTable::delta(FiniteAbelianGroup domain, FiniteAbelianGroup codomain,
                           const GroupElement& a, const GroupElement& b) {
    domain.require_element(a);
    codomain.require_element(b);
    FuncTable out(std::move(domain), std::move(codomain));
    out.values_[out.domain_.index_of(a)] = out.codomain_.index_of(b);
    return out;
}

FuncTable FuncTable::hom(FiniteAbelianGroup domain, FiniteAbelianGroup codomain,
                         const std::vector<GroupElement>& images) {
    if (images.size() != domain.arity())
        throw std::invalid_argument("need one generator image per domain factor");
    for (std::size_t i = 0; i < images.size(); ++i) {
        codomain.require_element(images[i]);
        if (domain.factors()[i] % codomain.order_of(images[i]) != 0)
            throw IllDefinedError("generator image order does not divide the factor order");
    }
    FuncTable out(std::move(domain), std::move(codomain));
    for (std::uint64_t i = 0; i < out.domain_.order(); ++i) {
        GroupElement x = out.domain_.element_at(i);
        std::uint64_t v = 0;
        for (std::size_t c = 0; c < images.size(); ++c) {
            std::uint64_t img = out.codomain_.index_of(images[c]);
            v = out.codomain_.index_add(v, out.codomain_.index_scalar_mul(x.coords[c], img));
        }
        out.values_[i] = v;
    }
    return out;
}

FuncTable FuncTable::identity(FiniteAbelianGroup group) {
    FuncTable out(group, group);
    for (std::uint64_t i = 0; i < out.domain_.order(); ++i) out.values_[i] = i;
    return out;
}

GroupElement FuncTable::value_at(const GroupElement& x) const {
    return codomain_.element_at(values_[domain_.index_of(x)]);
}

void FuncTable::set_value(const GroupElement& x, const GroupElement& b) {
    codomain_.require_element(b);
    values_[domain_.index_of(x)] = codomain_.index_of(b);
}

void FuncTable::set_value_index(std::uint64_t i, std::uint64_t value_index) {
    if (i >= values_.size() || value_index >= codomain_.order())
        throw std::out_of_range("table index out of range");
    values_[i] = value_index;
}

bool FuncTable::is_zero() const {
    return std::all_of(values_.begin(), values_.end(), [](std::uint64_t v) { return v == 0; });
}

bool FuncTable::is_constant() const {
    return std::all_of(values_.begin(), values_.end(),
                       [&](std::uint64_t v) { return v == values_[0]; });
}

FuncTable FuncTable::pointwise_add(const FuncTable& g) const {
    if (domain_ != g.domain_ || codomain_ != g.codomain_)
        throw std::invalid_argument("pointwise_add: table shape mismatch");
    FuncTable out(domain_, codomain_);
    for (std::size_t i = 0; i < values_.size(); ++i)
        out.values_[i] = codomain_.index_add(values_[i], g.values_[i]);
    return out;
}

FuncTable FuncTable::pointwise_neg() const {
    FuncTable out(domain_, codomain_);
    for (std::size_t i = 0; i < values_.size(); ++i)
        out.values_[i] = codomain_.index_neg(values_[i]);
    return out;
}

FuncTable FuncTable::shifted(const GroupElement& a) const {
    std::uint64_t ai = domain_.index_of(a);
    FuncTable out(domain_, codomain_);
    for (std::uint64_t i = 0; i < values_.size(); ++i)
        out.values_[i] = values_[domain_.index_add(i, ai)];
    return out;
}

FuncTable FuncTable::difference(const GroupElement& a) const {
    std::uint64_t ai = domain_.index_of(a);
    FuncTable out(domain_, codomain_);
    for (std::uint64_t i = 0; i < values_.size(); ++i)
        out.values_[i] = codomain_.index_add(values_[domain_.index_add(i, ai)],
                                             codomain_.index_neg(values_[i]));
    return out;
}

FuncTable FuncTable::iterated_difference_binomial(const GroupElement& a, std::uint64_t n) const {
    domain_.require_element(a);
    std::uint64_t exp = codomain_.exponent();
    FuncTable out(domain_, codomain_);
    for (std::uint64_t j = 0; j <= n; ++j) {
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), n, j);
        std::uint64_t w = mpz_fdiv_ui(binom.get_mpz_t(), exp);
        if ((n - j) % 2 == 1) w = (exp - w) % exp; // sign (-1)^(n-j)
        std::uint64_t ja = domain_.index_of(domain_.scalar_mul(j, a));
        for (std::uint64_t i = 0; i < values_.size(); ++i) {
            std::uint64_t term =
                codomain_.index_scalar_mul(w, values_[domain_.index_add(i, ja)]);
            out.values_[i] = codomain_.index_add(out.values_[i], term);
        }
    }
    return out;
}

FuncTable diagonal_join(std::span<const FuncTable> parts) {
    if (parts.empty()) throw std::invalid_argument("diagonal_join: need at least one part");
    std::vector<std::uint64_t> dom_factors, cod_factors;
    for (const FuncTable& f : parts) {
        dom_factors.insert(dom_factors.end(), f.domain().factors().begin(),
                           f.domain().factors().end());
        cod_factors.insert(cod_factors.end(), f.codomain().factors().begin(),
                           f.codomain().factors().end());
    }
    FuncTable out(FiniteAbelianGroup(std::move(dom_factors)),
                  FiniteAbelianGroup(std::move(cod_factors)));

    // Odometer over the part indices; enumeration order of a concatenated
    // factor list nests exactly this way.
    std::vector<std::uint64_t> idx(parts.size(), 0);
    while (true) {
        std::uint64_t in = 0, val = 0;
        for (std::size_t k = 0; k < parts.size(); ++k) {
            in = in * parts[k].domain().order() + idx[k];
            val = val * parts[k].codomain().order() + parts[k].value_index(idx[k]);
        }
        out.set_value_index(in, val);
        std::size_t k = parts.size();
        while (k-- > 0) {
            if (++idx[k] < parts[k].domain().order()) break;
            idx[k] = 0;
            if (k == 0) return out;
        }
    }
}

FuncTable compose_pre(const FuncTable& f, const FuncTable& eps) {
    if (eps.codomain() != f.domain())
        throw std::invalid_argument("compose_pre: codomain of eps must be the domain of f");
    FuncTable out(eps.domain(), f.codomain());
    for (std::uint64_t i = 0; i < eps.domain().order(); ++i)
        out.set_value_index(i, f.value_index(eps.value_index(i)));
    return out;
}

FuncTable compose_post(const FuncTable& mu, const FuncTable& f) {
    if (f.codomain() != mu.domain())
        throw std::invalid_argument("compose_post: domain of mu must be the codomain of f");
    FuncTable out(f.domain(), mu.codomain());
    for (std::uint64_t i = 0; i < f.domain().order(); ++i)
        out.set_value_index(i, mu.value_index(f.value_index(i)));
    return out;
}

namespace {

// Least n <= bound with every (n+1)-fold generator-multiset difference
// product killing f, as long as the frontier of nonzero products survives.
std::optional<std::uint64_t> generator_scan(const FuncTable& f, std::uint64_t bound,
                                            std::uint64_t* work, std::uint64_t budget) {
    const FiniteAbelianGroup& a = f.domain();
    std::size_t r = a.arity();
    // Frontier entries carry the largest generator index applied so far;
    // extending only with indices >= that visits each multiset once.
    std::vector<std::pair<std::size_t, FuncTable>> frontier;
    frontier.emplace_back(0, f);
    for (std::uint64_t n = 0; n <= bound; ++n) {
        std::vector<std::pair<std::size_t, FuncTable>> next;
        for (const auto& [min_gen, table] : frontier) {
            for (std::size_t g = min_gen; g < r; ++g) {
                if (work != nullptr) {
                    *work += a.order();
                    if (*work > budget) throw BudgetExceededError("generator scan work budget exceeded");
                }
                FuncTable d = table.difference(a.generator(g));
                if (!d.is_zero()) next.emplace_back(g, std::move(d));
            }
        }
        if (next.empty()) return n;
        frontier = std::move(next);
    }
    return std::nullopt;
}

} // namespace

ExtNat fdeg(const FuncTable& f) {
    if (f.is_zero()) return ExtNat::neg_infinity();
    if (f.is_constant()) return ExtNat::finite(0);

    // Split over the primary components of the codomain; the degree is the
    // max of the component degrees.
    ExtNat result = ExtNat::neg_infinity();
    for (std::uint64_t p : prime_divisors(f.codomain().order())) {
        PrimarySplit cod_split(f.codomain(), p);
        const FiniteAbelianGroup& bp = cod_split.part();

        FuncTable g(f.domain(), bp);
        for (std::uint64_t i = 0; i < f.domain().order(); ++i) {
            GroupElement v = cod_split.project_part(f.codomain().element_at(f.value_index(i)));
            g.set_value_index(i, bp.index_of(v));
        }
        if (g.is_zero()) continue;
        if (g.is_constant()) {
            result = ExtNat::max(result, ExtNat::finite(0));
            continue;
        }

        // A finite-degree map into a p-group is constant on cosets of the
        // coprime part of the domain; otherwise the component has infinite
        // degree, and so does f.
        PrimarySplit dom_split(f.domain(), p);
        const FiniteAbelianGroup& ap = dom_split.part();
        const FiniteAbelianGroup& ac = dom_split.complement();
        FuncTable reduced(ap, bp);
        for (std::uint64_t ip = 0; ip < ap.order(); ++ip) {
            GroupElement xp = ap.element_at(ip);
            std::uint64_t base = g.value_index(
                f.domain().index_of(dom_split.combine(xp, ac.zero())));
            for (std::uint64_t ic = 1; ic < ac.order(); ++ic) {
                GroupElement x = dom_split.combine(xp, ac.element_at(ic));
                if (g.value_index(f.domain().index_of(x)) != base) return ExtNat::infinity();
            }
            reduced.set_value_index(ip, base);
        }

        // g is nonconstant and factors through the projection onto the
        // p-part, so reduced is a nonconstant map between nontrivial
        // p-groups: the closed-form degree supremum is finite and bounds
        // the scan.
        DeltaResult bound = delta_sup(GroupDescriptor::of(ap), GroupDescriptor::of(bp));
        auto n = generator_scan(reduced, bound.value.finite_value(), nullptr, 0);
        if (!n.has_value())
            throw std::logic_error("functional degree scan exceeded its proven bound");
        result = ExtNat::max(result, ExtNat::finite(*n));
    }
    return result;
}

ScanResult fdeg_bruteforce(const FuncTable& f, std::uint64_t cap, std::uint64_t work_budget) {
    if (f.is_zero()) return ScanResult::found(ExtNat::neg_infinity());
    const FiniteAbelianGroup& a = f.domain();
    std::uint64_t work = 0;
    // Distinct difference products at the current level; products equal as
    // tables extend identically, so deduplication by value is sound.
    std::vector<FuncTable> frontier;
    frontier.push_back(f);
    for (std::uint64_t n = 0; n <= cap; ++n) {
        std::set<std::vector<std::uint64_t>> next_seen;
        std::vector<FuncTable> next;
        for (const FuncTable& table : frontier) {
            for (std::uint64_t ai = 0; ai < a.order(); ++ai) {
                work += a.order();
                if (work > work_budget)
                    throw BudgetExceededError("all-tuples degree oracle work budget exceeded");
                FuncTable d = table.difference(a.element_at(ai));
                if (d.is_zero()) continue;
                std::vector<std::uint64_t> key(d.value_indices().begin(), d.value_indices().end());
                if (next_seen.insert(std::move(key)).second) next.push_back(std::move(d));
            }
        }
        if (next.empty()) return ScanResult::found(ExtNat::finite(n));
        frontier = std::move(next);
    }
    return ScanResult::over(cap);
}

ScanResult fdeg_scan_generators(const FuncTable& f, std::uint64_t cap, std::uint64_t work_budget) {
    if (f.is_zero()) return ScanResult::found(ExtNat::neg_infinity());
    std::uint64_t work = 0;
    auto n = generator_scan(f, cap, &work, work_budget);
    if (!n.has_value()) return ScanResult::over(cap);
    return ScanResult::found(ExtNat::finite(*n));
}

} // namespace fdcalc
