#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "fdcalc/errors.hpp"

namespace fdcalc {

/// Element of a finite abelian group, one residue per cyclic factor of the
/// owning group, each reduced into [0, N_i).
struct GroupElement {
    std::vector<std::uint64_t> coords;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
    friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// Concrete finite abelian group, a direct sum of cyclic groups Z_{N_i}
/// with N_i >= 2. The empty factor list is the trivial group.
///
/// Elements are enumerated lexicographically in factor order with the last
/// coordinate varying fastest; `index_of`/`element_at` convert between an
/// element and its position in that enumeration.
class FiniteAbelianGroup {
public:
    /// Trivial group.
    FiniteAbelianGroup() : FiniteAbelianGroup(std::vector<std::uint64_t>{}) {}
    explicit FiniteAbelianGroup(std::vector<std::uint64_t> factors);

    static FiniteAbelianGroup trivial() { return FiniteAbelianGroup(); }

    const std::vector<std::uint64_t>& factors() const { return factors_; }
    std::size_t arity() const { return factors_.size(); }
    std::uint64_t order() const { return order_; }
    bool is_trivial() const { return factors_.empty(); }

    /// lcm of the factor orders; 1 for the trivial group.
    std::uint64_t exponent() const;

    /// Least number of cyclic summands, computed from the primary decomposition.
    std::uint64_t rank() const;

    /// True when every factor is a prime power and factors are sorted by
    /// prime ascending, then exponent descending.
    bool is_canonical() const { return canonical_; }

    /// Isomorphic group in canonical form (CRT-split factors, sorted).
    FiniteAbelianGroup canonicalized() const;

    GroupElement zero() const { return GroupElement{std::vector<std::uint64_t>(arity(), 0)}; }
    bool contains(const GroupElement& x) const;
    void require_element(const GroupElement& x) const;

    GroupElement add(const GroupElement& x, const GroupElement& y) const;
    GroupElement neg(const GroupElement& x) const;
    GroupElement sub(const GroupElement& x, const GroupElement& y) const;
    /// k * x with k reduced per coordinate.
    GroupElement scalar_mul(std::uint64_t k, const GroupElement& x) const;
    /// Least n >= 1 with n * x = 0.
    std::uint64_t order_of(const GroupElement& x) const;

    std::uint64_t index_of(const GroupElement& x) const;
    GroupElement element_at(std::uint64_t index) const;
    std::uint64_t index_add(std::uint64_t i, std::uint64_t j) const;
    std::uint64_t index_neg(std::uint64_t i) const;
    std::uint64_t index_scalar_mul(std::uint64_t k, std::uint64_t i) const;

    /// i-th canonical generator (unit vector).
    GroupElement generator(std::size_t i) const;

    /// Spec-string form, e.g. "Z4xZ2"; "1" for the trivial group.
    std::string str() const;

    friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
        return a.factors_ == b.factors_;
    }

private:
    std::vector<std::uint64_t> factors_;
    std::vector<std::uint64_t> strides_; // strides_[i] = prod of factors after i
    std::uint64_t order_;
    bool canonical_;
};

/// Decomposition A = P + C along a prime p, where P collects the p-part of
/// every cyclic factor and C the coprime rest. `combine` runs per-coordinate
/// CRT, so it works for non-prime-power factor lists too.
class PrimarySplit {
public:
    PrimarySplit(const FiniteAbelianGroup& parent, std::uint64_t p);

    const FiniteAbelianGroup& part() const { return part_; }
    const FiniteAbelianGroup& complement() const { return complement_; }

    /// Element of the parent group equal to xp + xc.
    GroupElement combine(const GroupElement& xp, const GroupElement& xc) const;
    /// Projection of a parent element onto the p-part.
    GroupElement project_part(const GroupElement& x) const;

private:
    struct CoordInfo {
        std::uint64_t modulus;      // parent factor N_i
        std::uint64_t p_power;      // p^e dividing N_i
        std::size_t part_idx;       // coordinate in part(), or npos
        std::size_t comp_idx;       // coordinate in complement(), or npos
        std::uint64_t part_mult;    // CRT multiplier: 1 mod p^e, 0 mod cofactor
        std::uint64_t comp_mult;    // CRT multiplier: 0 mod p^e, 1 mod cofactor
    };
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    FiniteAbelianGroup part_;
    FiniteAbelianGroup complement_;
    std::vector<CoordInfo> coords_;
};

/// All isomorphism classes of finite abelian groups of order <= max_order,
/// in canonical form, sorted by order then factor list.
std::vector<FiniteAbelianGroup> enumerate_abelian_groups(std::uint64_t max_order);

/// Primes dividing n, ascending.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

} // namespace fdcalc
