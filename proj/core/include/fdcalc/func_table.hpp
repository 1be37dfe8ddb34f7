#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fdcalc/extnat.hpp"
#include "fdcalc/group.hpp"

namespace fdcalc {

/// Dense table of a map f: A -> B between concrete finite abelian groups.
/// Values are stored as codomain enumeration indices, in the canonical
/// enumeration order of the domain.
class FuncTable {
public:
    /// Zero map.
    FuncTable(FiniteAbelianGroup domain, FiniteAbelianGroup codomain);

    static FuncTable constant(FiniteAbelianGroup domain, FiniteAbelianGroup codomain,
                              const GroupElement& value);
    /// Delta function: value b at a, zero elsewhere.
    static FuncTable delta(FiniteAbelianGroup domain, FiniteAbelianGroup codomain,
                           const GroupElement& a, const GroupElement& b);
    /// Homomorphism sending the i-th canonical generator of the domain to
    /// images[i]. Throws IllDefinedError when order(images[i]) does not
    /// divide the i-th factor order.
    static FuncTable hom(FiniteAbelianGroup domain, FiniteAbelianGroup codomain,
                         const std::vector<GroupElement>& images);
    static FuncTable identity(FiniteAbelianGroup group);

    const FiniteAbelianGroup& domain() const { return domain_; }
    const FiniteAbelianGroup& codomain() const { return codomain_; }
    std::span<const std::uint64_t> value_indices() const { return values_; }

    GroupElement value_at(const GroupElement& x) const;
    std::uint64_t value_index(std::uint64_t i) const { return values_[i]; }
    void set_value(const GroupElement& x, const GroupElement& b);
    void set_value_index(std::uint64_t i, std::uint64_t value_index);

    bool is_zero() const;
    bool is_constant() const;

    FuncTable pointwise_add(const FuncTable& g) const;
    FuncTable pointwise_neg() const;
    /// tau_a: x -> f(x + a).
    FuncTable shifted(const GroupElement& a) const;
    /// Delta_a: x -> f(x + a) - f(x).
    FuncTable difference(const GroupElement& a) const;
    /// Delta_a^n evaluated through the alternating binomial sum
    ///   sum_j (-1)^(n-j) C(n,j) f(x + j a).
    FuncTable iterated_difference_binomial(const GroupElement& a, std::uint64_t n) const;

    friend bool operator==(const FuncTable&, const FuncTable&) = default;

private:
    FiniteAbelianGroup domain_;
    FiniteAbelianGroup codomain_;
    std::vector<std::uint64_t> values_;
};

/// Diagonal map of the parts: (x_1,..,x_k) -> (f_1(x_1),..,f_k(x_k)) on the
/// direct sums of the domains and codomains.
FuncTable diagonal_join(std::span<const FuncTable> parts);

/// f after precomposition with the homomorphism table eps: A' -> A.
FuncTable compose_pre(const FuncTable& f, const FuncTable& eps);
/// f after postcomposition with the homomorphism table mu: B -> B'.
FuncTable compose_post(const FuncTable& mu, const FuncTable& f);

/// Exact functional degree of f. Decides infinite degree through the
/// primary coset-constancy test, then resolves each primary component by a
/// generator-multiset scan whose bound comes from the closed-form degree
/// supremum, so it always terminates.
ExtNat fdeg(const FuncTable& f);

inline constexpr std::uint64_t kDefaultOracleBudget = 200'000'000;

/// Outcome of a capped degree scan.
struct ScanResult {
    bool exceeded = false;
    ExtNat value = ExtNat::neg_infinity(); // valid when !exceeded
    std::uint64_t cap = 0;

    static ScanResult found(ExtNat v) { return {false, v, 0}; }
    static ScanResult over(std::uint64_t cap) { return {true, ExtNat::infinity(), cap}; }
};

/// Definitional oracle: least n <= cap such that every (n+1)-fold difference
/// product over all of A kills f, with no generator shortcut. Throws
/// BudgetExceededError when the table work exceeds work_budget.
ScanResult fdeg_bruteforce(const FuncTable& f, std::uint64_t cap,
                           std::uint64_t work_budget = kDefaultOracleBudget);

/// Same scan restricted to multisets of canonical generators of the whole
/// domain (complete by the generation property of the augmentation ideal).
ScanResult fdeg_scan_generators(const FuncTable& f, std::uint64_t cap,
                                std::uint64_t work_budget = kDefaultOracleBudget);

} // namespace fdcalc
