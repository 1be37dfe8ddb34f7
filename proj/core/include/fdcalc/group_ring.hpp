#pragma once

#include <cstdint>
#include <map>

#include <gmpxx.h>

#include "fdcalc/extnat.hpp"
#include "fdcalc/func_table.hpp"
#include "fdcalc/group.hpp"

namespace fdcalc {

/// Sparse element of the group ring Z_m[A] for a concrete finite A.
/// modulus 0 means unreduced integer coefficients; modulus >= 2 keeps every
/// coefficient in [0, m). The zero ring (m = 1) is rejected.
///
/// Terms are keyed by the enumeration index of the group element, so
/// iteration and serialization are ordered by that index. No zero
/// coefficient is ever stored.
class GroupRingElement {
public:
    GroupRingElement(std::uint64_t modulus, FiniteAbelianGroup group);

    /// Basis element [a].
    static GroupRingElement basis(std::uint64_t modulus, const FiniteAbelianGroup& group,
                                  const GroupElement& a);
    /// Difference element [a] - [0]; zero when a = 0.
    static GroupRingElement delta(std::uint64_t modulus, const FiniteAbelianGroup& group,
                                  const GroupElement& a);

    std::uint64_t modulus() const { return modulus_; }
    const FiniteAbelianGroup& group() const { return group_; }
    const std::map<std::uint64_t, mpz_class>& terms() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    mpz_class coeff(const GroupElement& a) const;
    /// Adds c * [a].
    void add_term(const GroupElement& a, const mpz_class& c);

    GroupRingElement operator+(const GroupRingElement& o) const;
    GroupRingElement operator-(const GroupRingElement& o) const;
    GroupRingElement operator-() const;
    GroupRingElement operator*(const GroupRingElement& o) const;
    GroupRingElement pow(std::uint64_t n) const;

    /// Coefficient sum in Z_m; zero exactly on the augmentation ideal.
    mpz_class augmentation() const;

    /// Module action on tables: (r f)(x) = sum_a c_a f(x + a). Requires the
    /// table's domain to be this group and, for m >= 2, exp(codomain) | m.
    FuncTable act(const FuncTable& f) const;

    friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

private:
    void insert_reduced(std::uint64_t index, mpz_class c);
    void require_compatible(const GroupRingElement& o) const;

    std::uint64_t modulus_;
    FiniteAbelianGroup group_;
    std::map<std::uint64_t, mpz_class> coeffs_;
};

/// True iff I^n = 0 in Z_m[A], decided on the generating set of n-fold
/// difference-element products over the canonical generators.
bool ideal_power_is_zero(std::uint64_t modulus, const FiniteAbelianGroup& group, std::uint64_t n);

/// Nilpotency index of the augmentation ideal of Z_m[A]: 1 for trivial A,
/// infinity straight from the structural test (finite only when m is a
/// prime power p^b and A is a p-group), otherwise the least n with
/// I^n = 0 found by scanning. Throws CapExceededError when a scan that the
/// structural test certified finite passes cap.
ExtNat nilpotency_index(std::uint64_t modulus, const FiniteAbelianGroup& group, std::uint64_t cap);

} // namespace fdcalc
