#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "fdcalc/descriptor.hpp"
#include "fdcalc/extnat.hpp"
#include "fdcalc/group_ring.hpp"

namespace fdcalc {

/// Alternating binomial sum over a residue class:
/// M_k(j, n) = sum of (-1)^i C(n, i) over 0 <= i <= n with i = j (mod k).
mpz_class weisman_sum(std::uint64_t k, std::int64_t j, std::uint64_t n);

/// weisman_sum reduced into [0, m), accumulating reduced at each step.
std::uint64_t weisman_sum_mod(std::uint64_t k, std::int64_t j, std::uint64_t n, std::uint64_t m);

/// (beta(p-1) + 1) p^(alpha-1): from this n on, M_{p^alpha}(j, n) vanishes
/// mod p^beta, while at n = threshold - 1 the value is (-p)^(beta-1).
std::uint64_t weisman_threshold(std::uint64_t p, std::uint32_t alpha, std::uint32_t beta);

/// (-p)^(beta-1) reduced into [0, p^beta).
std::uint64_t weisman_boundary_value(std::uint64_t p, std::uint32_t beta);

/// Checks the full vanishing pattern around the threshold for every residue
/// j: zero on [threshold, threshold + window] and the boundary value at
/// threshold - 1, with exact big-integer sums.
bool weisman_pair_holds(std::uint64_t p, std::uint32_t alpha, std::uint32_t beta,
                        std::uint32_t window = 4);

/// Largest degree of a map Z_{p^alpha} -> B for exp(B) = p^beta:
/// (beta(p-1) + 1) p^(alpha-1) - 1.
std::uint64_t delta_cyclic(std::uint64_t p, std::uint32_t alpha, std::uint32_t beta);

/// Both sides of the congruence
///   (t-1)^(threshold-1) = (-p)^(beta-1) (1 + t + ... + t^(p^alpha - 1))
/// computed in Z_{p^beta}[Z_{p^alpha}], plus the vanishing of
/// (t-1)^threshold itself.
struct WilsonCheck {
    GroupRingElement lhs;
    GroupRingElement rhs;
    bool equal = false;
    bool vanishes_at_threshold = false;
};
WilsonCheck wilson_check(std::uint64_t p, std::uint32_t alpha, std::uint32_t beta);

/// Largest degree of a map out of the p-group with cyclic factor exponents
/// `alphas` into a codomain of exponent p^beta, by exhaustive maximization
/// over all splittings (b_1,..,b_r) of beta - 1:
///   max over compositions of sum_i delta_cyclic(p, alpha_i, b_i + 1).
std::uint64_t sum_theorem_max(std::uint64_t p, std::span<const std::uint32_t> alphas,
                              std::uint32_t beta);

enum class DeltaCase {
    a_infinite,
    no_common_prime,
    p_group_formula,
    unbounded_codomain,
};
std::string_view to_string(DeltaCase c);
std::optional<DeltaCase> delta_case_from_string(std::string_view s);

/// sup of fdeg over all maps A -> B, with the case that produced it.
struct DeltaResult {
    ExtNat value;
    DeltaCase case_tag = DeltaCase::a_infinite;
    bool all_maps_finite_degree = false;

    friend bool operator==(const DeltaResult&, const DeltaResult&) = default;
};

/// Case analysis for nontrivial A, B:
///   (a) A infinite -> inf;
///   (b) no prime p with A a finite p-group and B a p-group -> inf;
///   (c) A a finite p-group, B a p-group of finite exponent p^beta ->
///       sum_j (p^(alpha_j) - 1) + (beta-1)(p-1) p^(alpha_1 - 1);
///   (d) A a finite p-group, B a p-group of infinite exponent -> inf, yet
///       every single map has finite degree.
/// Throws TrivialGroupError when either group is trivial.
DeltaResult delta_sup(const GroupDescriptor& a, const GroupDescriptor& b);

/// sup of the *finite* degrees only. Throws UnsupportedError for torsion A
/// with a primary part of unbounded exponent; such pairs sit outside the
/// supported classification.
ExtNat delta_circ(const GroupDescriptor& a, const GroupDescriptor& b);

/// The set of attained degrees in normal form:
/// {-inf} + {n in N : n <= finite_sup} + optionally {inf}.
struct DegreeSet {
    ExtNat finite_sup = ExtNat::neg_infinity();
    bool contains_inf = false;

    bool contains(ExtNat d) const;
    /// Rendering like "{-inf} u {0..2} u {inf}".
    std::string str() const;

    friend bool operator==(const DegreeSet&, const DegreeSet&) = default;
};
DegreeSet degree_set(const GroupDescriptor& a, const GroupDescriptor& b);

/// Predicted nilpotency index of the augmentation ideal of Z_m[A]:
/// one more than the degree supremum of maps A -> Z_m.
ExtNat predicted_nu(std::uint64_t m, const GroupDescriptor& a);

} // namespace fdcalc
