#include "fdcalc/group_ring.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

#include "fdcalc/arith.hpp"
#include "fdcalc/errors.hpp"

namespace fdcalc {

GroupRingElement::GroupRingElement(std::uint64_t modulus, FiniteAbelianGroup group)
    : modulus_(modulus), group_(std::move(group)) {
    if (modulus == 1) throw std::invalid_argument("coefficient ring Z_1 is the zero ring");
}

GroupRingElement GroupRingElement::basis(std::uint64_t modulus, const FiniteAbelianGroup& group,
                                         const GroupElement& a) {
    GroupRingElement out(modulus, group);
    out.add_term(a, 1);
    return out;
}

GroupRingElement GroupRingElement::delta(std::uint64_t modulus, const FiniteAbelianGroup& group,
                                         const GroupElement& a) {
    GroupRingElement out(modulus, group);
    out.add_term(a, 1);
    out.add_term(group.zero(), -1);
    return out;
}

mpz_class GroupRingElement::coeff(const GroupElement& a) const {
    auto it = coeffs_.find(group_.index_of(a));
    return it == coeffs_.end() ? mpz_class(0) : it->second;
}

void GroupRingElement::add_term(const GroupElement& a, const mpz_class& c) {
    group_.require_element(a);
    insert_reduced(group_.index_of(a), c);
}

void GroupRingElement::insert_reduced(std::uint64_t index, mpz_class c) {
    auto [it, inserted] = coeffs_.try_emplace(index, 0);
    it->second += c;
    if (modulus_ >= 2) {
        mpz_class m(static_cast<unsigned long>(modulus_));
        mpz_fdiv_r(it->second.get_mpz_t(), it->second.get_mpz_t(), m.get_mpz_t());
    }
    if (it->second == 0) coeffs_.erase(it);
}

void GroupRingElement::require_compatible(const GroupRingElement& o) const {
    if (modulus_ != o.modulus_) throw std::invalid_argument("group ring modulus mismatch");
    if (group_ != o.group_) throw std::invalid_argument("group ring group mismatch");
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& o) const {
    require_compatible(o);
    GroupRingElement out = *this;
    for (const auto& [idx, c] : o.coeffs_) out.insert_reduced(idx, c);
    return out;
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& o) const {
    require_compatible(o);
    GroupRingElement out = *this;
    for (const auto& [idx, c] : o.coeffs_) out.insert_reduced(idx, -c);
    return out;
}

GroupRingElement GroupRingElement::operator-() const {
    GroupRingElement out(modulus_, group_);
    for (const auto& [idx, c] : coeffs_) out.insert_reduced(idx, -c);
    return out;
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& o) const {
    require_compatible(o);
    GroupRingElement out(modulus_, group_);
    for (const auto& [i, ci] : coeffs_)
        for (const auto& [j, cj] : o.coeffs_)
            out.insert_reduced(group_.index_add(i, j), ci * cj);
    return out;
}

GroupRingElement GroupRingElement::pow(std::uint64_t n) const {
    GroupRingElement result = basis(modulus_, group_, group_.zero());
    GroupRingElement base = *this;
    while (n > 0) {
        if (n & 1) result = result * base;
        base = base * base;
        n >>= 1;
    }
    return result;
}

mpz_class GroupRingElement::augmentation() const {
    mpz_class sum = 0;
    for (const auto& [idx, c] : coeffs_) sum += c;
    if (modulus_ >= 2) {
        mpz_class m(static_cast<unsigned long>(modulus_));
        mpz_fdiv_r(sum.get_mpz_t(), sum.get_mpz_t(), m.get_mpz_t());
    }
    return sum;
}

FuncTable GroupRingElement::act(const FuncTable& f) const {
    if (f.domain() != group_)
        throw std::invalid_argument("act: table domain differs from the ring's group");
    std::uint64_t exp = f.codomain().exponent();
    if (modulus_ >= 2 && modulus_ % exp != 0)
        throw std::invalid_argument("act: codomain exponent does not divide the modulus");
    FuncTable out(f.domain(), f.codomain());
    for (const auto& [ai, c] : coeffs_) {
        std::uint64_t w = mpz_fdiv_ui(c.get_mpz_t(), exp);
        for (std::uint64_t i = 0; i < f.domain().order(); ++i) {
            std::uint64_t term =
                f.codomain().index_scalar_mul(w, f.value_index(f.domain().index_add(i, ai)));
            out.set_value_index(i, f.codomain().index_add(out.value_index(i), term));
        }
    }
    return out;
}

bool ideal_power_is_zero(std::uint64_t modulus, const FiniteAbelianGroup& group, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("ideal power must be >= 1");
    // Frontier of nonzero multiset products; a product that hits zero stays
    // zero under further multiplication, so it can be dropped.
    std::vector<std::pair<std::size_t, GroupRingElement>> frontier;
    frontier.emplace_back(0, GroupRingElement::basis(modulus, group, group.zero()));
    for (std::uint64_t k = 1; k <= n; ++k) {
        std::vector<std::pair<std::size_t, GroupRingElement>> next;
        for (const auto& [min_gen, elem] : frontier) {
            for (std::size_t g = min_gen; g < group.arity(); ++g) {
                GroupRingElement prod =
                    elem * GroupRingElement::delta(modulus, group, group.generator(g));
                if (!prod.is_zero()) next.emplace_back(g, std::move(prod));
            }
        }
        if (next.empty()) return true;
        frontier = std::move(next);
    }
    return false;
}

ExtNat nilpotency_index(std::uint64_t modulus, const FiniteAbelianGroup& group, std::uint64_t cap) {
    if (modulus == 1) throw std::invalid_argument("coefficient ring Z_1 is the zero ring");
    if (group.is_trivial()) return ExtNat::finite(1);
    if (modulus == 0) return ExtNat::infinity();

    // The index is finite exactly when m = p^b and A is a p-group.
    auto m_fac = factorize(modulus);
    auto a_fac = factorize(group.order());
    if (m_fac.size() != 1 || a_fac.size() != 1 || m_fac.front().first != a_fac.front().first)
        return ExtNat::infinity();

    for (std::uint64_t n = 1; n <= cap; ++n)
        if (ideal_power_is_zero(modulus, group, n)) return ExtNat::finite(n);
    throw CapExceededError("nilpotency scan passed its cap; closed form and scan disagree", cap);
}

} // namespace fdcalc
