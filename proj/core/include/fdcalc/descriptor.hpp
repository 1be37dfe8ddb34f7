#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fdcalc/extnat.hpp"
#include "fdcalc/group.hpp"

namespace fdcalc {

/// One block of cyclic factors Z_{p^exponent} inside a primary part.
/// No multiplicity means countably infinitely many copies.
struct PrimaryFactor {
    std::uint32_t exponent = 1;
    std::optional<std::uint64_t> multiplicity = 1;

    bool infinite() const { return !multiplicity.has_value(); }

    friend bool operator==(const PrimaryFactor&, const PrimaryFactor&) = default;
};

/// p-primary component of a descriptor: a list of factor blocks plus an
/// optional unbounded summand (one copy of Z_{p^k} for every k >= 1).
struct PrimaryPart {
    std::vector<PrimaryFactor> factors; // normalized: exponents strictly descending
    bool unbounded = false;

    bool trivial() const { return factors.empty() && !unbounded; }
    bool finite_set() const;
    bool finite_exponent() const { return !unbounded; }
    std::uint32_t max_exponent() const; // 0 when no finite blocks
    /// Number of cyclic summands; infinity when any block repeats forever.
    ExtNat cyclic_count() const;

    friend bool operator==(const PrimaryPart&, const PrimaryPart&) = default;
};

struct StructureStats {
    ExtNat exponent;              // finite(1) for the trivial group
    std::uint64_t e_value = 0;    // exponent when finite, else 0
    ExtNat rank;
    bool is_finite = false;
    bool is_torsion = false;
    bool is_trivial = false;
    std::optional<std::uint64_t> is_p_group; // p when the whole group is a nontrivial p-group
};

/// Symbolic, possibly infinite abelian group: Z^free_rank + sum of p-primary
/// parts over finitely many primes. Torsion-split by construction.
class GroupDescriptor {
public:
    GroupDescriptor() = default; // trivial group
    GroupDescriptor(std::uint64_t free_rank, std::map<std::uint64_t, PrimaryPart> parts);

    /// Parses the group-spec grammar:
    ///   spec := "1" | term ( "x" term )*
    ///   term := "Z" | "Z" INT mult? | "U" PRIME
    ///   mult := "*" ( INT | "inf" )
    /// with INT >= 2 and whitespace ignored. Composite orders are CRT-split.
    static GroupDescriptor parse(std::string_view text);

    static GroupDescriptor of(const FiniteAbelianGroup& g);
    /// Z_n: n = 0 gives Z, n = 1 the trivial group, n >= 2 the cyclic group.
    static GroupDescriptor cyclic(std::uint64_t n);

    std::uint64_t free_rank() const { return free_rank_; }
    const std::map<std::uint64_t, PrimaryPart>& primary_parts() const { return primary_; }
    /// Part at p, or nullptr when the p-component is trivial.
    const PrimaryPart* part(std::uint64_t p) const;

    StructureStats stats() const;
    bool is_trivial() const { return free_rank_ == 0 && primary_.empty(); }
    bool is_torsion() const { return free_rank_ == 0; }
    bool is_finite() const;

    GroupDescriptor primary_component(std::uint64_t p) const;

    /// Concrete group in canonical form. Throws NotFiniteError when the
    /// descriptor has a free part, an infinite multiplicity, or an
    /// unbounded-exponent part.
    FiniteAbelianGroup to_finite_group() const;

    /// Canonical spec-string; parse(str()) reproduces the descriptor.
    std::string str() const;

    friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;

private:
    std::uint64_t free_rank_ = 0;
    std::map<std::uint64_t, PrimaryPart> primary_;
};

/// True iff the only homomorphism A -> B is zero: B trivial, or A torsion
/// with no prime at which both A and B have a nontrivial primary part.
bool hom_is_trivial(const GroupDescriptor& a, const GroupDescriptor& b);

} // namespace fdcalc
