#include "fdcalc/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "fdcalc/arith.hpp"

namespace fdcalc {

namespace {

bool canonical_factor_order(const std::vector<std::uint64_t>& factors) {
    std::uint64_t prev_p = 0;
    std::uint32_t prev_e = 0;
    for (std::uint64_t n : factors) {
        auto fac = factorize(n);
        if (fac.size() != 1) return false;
        auto [p, e] = fac.front();
        if (p < prev_p) return false;
        if (p == prev_p && e > prev_e) return false;
        prev_p = p;
        prev_e = e;
    }
    return true;
}

} // namespace

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::uint64_t> factors)
    : factors_(std::move(factors)) {
    for (std::uint64_t n : factors_)
        if (n < 2) throw std::invalid_argument("cyclic factor order must be >= 2");
    strides_.assign(factors_.size(), 1);
    order_ = 1;
    for (std::size_t i = factors_.size(); i-- > 0;) {
        strides_[i] = order_;
        order_ = checked_mul(order_, factors_[i]);
    }
    canonical_ = canonical_factor_order(factors_);
}

std::uint64_t FiniteAbelianGroup::exponent() const {
    std::uint64_t e = 1;
    for (std::uint64_t n : factors_) e = lcm_u64(e, n);
    return e;
}

std::uint64_t FiniteAbelianGroup::rank() const {
    std::uint64_t best = 0;
    for (std::uint64_t p : prime_divisors(order_)) {
        std::uint64_t count = 0;
        for (std::uint64_t n : factors_)
            if (n % p == 0) ++count;
        best = std::max(best, count);
    }
    return best;
}

FiniteAbelianGroup FiniteAbelianGroup::canonicalized() const {
    std::vector<std::pair<std::uint64_t, std::uint32_t>> parts; // (p, e)
    for (std::uint64_t n : factors_)
        for (auto [p, e] : factorize(n)) parts.emplace_back(p, e);
    std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
        return a.first != b.first ? a.first < b.first : a.second > b.second;
    });
    std::vector<std::uint64_t> out;
    out.reserve(parts.size());
    for (auto [p, e] : parts) out.push_back(checked_pow(p, e));
    return FiniteAbelianGroup(std::move(out));
}

bool FiniteAbelianGroup::contains(const GroupElement& x) const {
    if (x.coords.size() != factors_.size()) return false;
    for (std::size_t i = 0; i < factors_.size(); ++i)
        if (x.coords[i] >= factors_[i]) return false;
    return true;
}

void FiniteAbelianGroup::require_element(const GroupElement& x) const {
    if (x.coords.size() != factors_.size())
        throw std::invalid_argument("group element arity mismatch");
    for (std::size_t i = 0; i < factors_.size(); ++i)
        if (x.coords[i] >= factors_[i])
            throw std::invalid_argument("group element coordinate out of range");
}

GroupElement FiniteAbelianGroup::add(const GroupElement& x, const GroupElement& y) const {
    require_element(x);
    require_element(y);
    GroupElement out = x;
    for (std::size_t i = 0; i < factors_.size(); ++i)
        out.coords[i] = (x.coords[i] + y.coords[i]) % factors_[i];
    return out;
}

GroupElement FiniteAbelianGroup::neg(const GroupElement& x) const {
    require_element(x);
    GroupElement out = x;
    for (std::size_t i = 0; i < factors_.size(); ++i)
        out.coords[i] = x.coords[i] == 0 ? 0 : factors_[i] - x.coords[i];
    return out;
}

GroupElement FiniteAbelianGroup::sub(const GroupElement& x, const GroupElement& y) const {
    return add(x, neg(y));
}

GroupElement FiniteAbelianGroup::scalar_mul(std::uint64_t k, const GroupElement& x) const {
    require_element(x);
    GroupElement out = x;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        // Reduce the scalar first so the product fits in 64 bits whenever
        // N_i^2 does; these group orders stay tiny in practice.
        std::uint64_t ki = k % factors_[i];
        out.coords[i] = checked_mul(ki, x.coords[i]) % factors_[i];
    }
    return out;
}

std::uint64_t FiniteAbelianGroup::order_of(const GroupElement& x) const {
    require_element(x);
    std::uint64_t ord = 1;
    for (std::size_t i = 0; i < factors_.size(); ++i)
        ord = lcm_u64(ord, factors_[i] / std::gcd(factors_[i], x.coords[i]));
    return ord;
}

std::uint64_t FiniteAbelianGroup::index_of(const GroupElement& x) const {
    require_element(x);
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) idx = idx * factors_[i] + x.coords[i];
    return idx;
}

GroupElement FiniteAbelianGroup::element_at(std::uint64_t index) const {
    if (index >= order_) throw std::out_of_range("element index out of range");
    GroupElement out = zero();
    for (std::size_t i = factors_.size(); i-- > 0;) {
        out.coords[i] = index % factors_[i];
        index /= factors_[i];
    }
    return out;
}

std::uint64_t FiniteAbelianGroup::index_add(std::uint64_t i, std::uint64_t j) const {
    std::uint64_t out = 0;
    for (std::size_t k = 0; k < factors_.size(); ++k) {
        std::uint64_t n = factors_[k];
        std::uint64_t a = (i / strides_[k]) % n;
        std::uint64_t b = (j / strides_[k]) % n;
        out += ((a + b) % n) * strides_[k];
    }
    return out;
}

std::uint64_t FiniteAbelianGroup::index_scalar_mul(std::uint64_t k, std::uint64_t i) const {
    std::uint64_t out = 0;
    for (std::size_t c = 0; c < factors_.size(); ++c) {
        std::uint64_t n = factors_[c];
        std::uint64_t a = (i / strides_[c]) % n;
        out += ((k % n) * a % n) * strides_[c];
    }
    return out;
}

std::uint64_t FiniteAbelianGroup::index_neg(std::uint64_t i) const {
    std::uint64_t out = 0;
    for (std::size_t k = 0; k < factors_.size(); ++k) {
        std::uint64_t n = factors_[k];
        std::uint64_t a = (i / strides_[k]) % n;
        out += (a == 0 ? 0 : n - a) * strides_[k];
    }
    return out;
}

GroupElement FiniteAbelianGroup::generator(std::size_t i) const {
    if (i >= factors_.size()) throw std::out_of_range("generator index out of range");
    GroupElement out = zero();
    out.coords[i] = 1;
    return out;
}

std::string FiniteAbelianGroup::str() const {
    if (factors_.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i > 0) out += "x";
        out += "Z" + std::to_string(factors_[i]);
    }
    return out;
}

PrimarySplit::PrimarySplit(const FiniteAbelianGroup& parent, std::uint64_t p) {
    std::vector<std::uint64_t> part_factors;
    std::vector<std::uint64_t> comp_factors;
    coords_.reserve(parent.arity());
    for (std::uint64_t n : parent.factors()) {
        auto [q, e] = p_part_of(n, p);
        std::uint64_t m = n / q;
        CoordInfo info{n, q, npos, npos, 0, 0};
        if (q > 1) {
            info.part_idx = part_factors.size();
            part_factors.push_back(q);
        }
        if (m > 1) {
            info.comp_idx = comp_factors.size();
            comp_factors.push_back(m);
        }
        if (q > 1 && m > 1) {
            info.part_mult = checked_mul(m, inverse_mod(m % q, q)) % n;
            info.comp_mult = checked_mul(q, inverse_mod(q % m, m)) % n;
        } else if (q > 1) {
            info.part_mult = 1;
        } else {
            info.comp_mult = 1;
        }
        coords_.push_back(info);
    }
    part_ = FiniteAbelianGroup(std::move(part_factors));
    complement_ = FiniteAbelianGroup(std::move(comp_factors));
}

GroupElement PrimarySplit::combine(const GroupElement& xp, const GroupElement& xc) const {
    part_.require_element(xp);
    complement_.require_element(xc);
    GroupElement out;
    out.coords.reserve(coords_.size());
    for (const CoordInfo& info : coords_) {
        std::uint64_t a = info.part_idx == npos ? 0 : xp.coords[info.part_idx];
        std::uint64_t b = info.comp_idx == npos ? 0 : xc.coords[info.comp_idx];
        std::uint64_t v = (checked_mul(a, info.part_mult) + checked_mul(b, info.comp_mult)) % info.modulus;
        out.coords.push_back(v);
    }
    return out;
}

GroupElement PrimarySplit::project_part(const GroupElement& x) const {
    GroupElement out;
    out.coords.reserve(part_.arity());
    for (std::size_t i = 0; i < coords_.size(); ++i)
        if (coords_[i].part_idx != npos) out.coords.push_back(x.coords[i] % coords_[i].p_power);
    return out;
}

namespace {

// Descending partitions of e.
void partitions_rec(std::uint32_t e, std::uint32_t max_part, std::vector<std::uint32_t>& cur,
                    std::vector<std::vector<std::uint32_t>>& out) {
    if (e == 0) {
        out.push_back(cur);
        return;
    }
    for (std::uint32_t k = std::min(e, max_part); k >= 1; --k) {
        cur.push_back(k);
        partitions_rec(e - k, k, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<std::uint32_t>> partitions(std::uint32_t e) {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> cur;
    partitions_rec(e, e, cur, out);
    return out;
}

} // namespace

std::vector<FiniteAbelianGroup> enumerate_abelian_groups(std::uint64_t max_order) {
    std::vector<FiniteAbelianGroup> out;
    for (std::uint64_t n = 1; n <= max_order; ++n) {
        auto fac = factorize(n);
        // Cartesian product of exponent partitions across primes.
        std::vector<std::vector<std::vector<std::uint32_t>>> choices;
        for (auto [p, e] : fac) choices.push_back(partitions(e));
        std::vector<std::size_t> pick(choices.size(), 0);
        while (true) {
            std::vector<std::uint64_t> factors;
            for (std::size_t i = 0; i < choices.size(); ++i)
                for (std::uint32_t e : choices[i][pick[i]])
                    factors.push_back(checked_pow(fac[i].first, e));
            out.emplace_back(std::move(factors));
            std::size_t i = 0;
            for (; i < pick.size(); ++i) {
                if (++pick[i] < choices[i].size()) break;
                pick[i] = 0;
            }
            if (i == pick.size()) break;
        }
    }
    std::sort(out.begin(), out.end(), [](const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
        return a.order() != b.order() ? a.order() < b.order() : a.factors() < b.factors();
    });
    return out;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (auto [p, e] : factorize(n)) out.push_back(p);
    return out;
}

} // namespace fdcalc
