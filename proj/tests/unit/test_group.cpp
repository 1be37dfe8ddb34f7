#include "doctest.h"

#include <algorithm>
#include <set>

#include "fdcalc/group.hpp"

using namespace fdcalc;

TEST_CASE("factor orders below 2 are rejected") {
    CHECK_THROWS_AS(FiniteAbelianGroup({4, 1}), std::invalid_argument);
    CHECK_THROWS_AS(FiniteAbelianGroup({0}), std::invalid_argument);
}

TEST_CASE("order, exponent, arity") {
    FiniteAbelianGroup g({4, 2, 3});
    CHECK(g.order() == 24);
    CHECK(g.exponent() == 12);
    CHECK(g.arity() == 3);
    CHECK(FiniteAbelianGroup::trivial().order() == 1);
    CHECK(FiniteAbelianGroup::trivial().exponent() == 1);
}

TEST_CASE("element orders") {
    FiniteAbelianGroup z4({4});
    CHECK(z4.order_of(GroupElement{{2}}) == 2);
    FiniteAbelianGroup z2z3({2, 3});
    CHECK(z2z3.order_of(GroupElement{{1, 1}}) == 6);
    CHECK(z2z3.order_of(z2z3.zero()) == 1);
}

TEST_CASE("arity mismatch is an error") {
    FiniteAbelianGroup g({4, 2});
    CHECK_THROWS_AS(g.add(GroupElement{{1}}, g.zero()), std::invalid_argument);
    CHECK_THROWS_AS(g.order_of(GroupElement{{1, 2, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(g.index_of(GroupElement{{5, 0}}), std::invalid_argument);
}

TEST_CASE("enumeration: lexicographic, last coordinate fastest") {
    FiniteAbelianGroup g({2, 3});
    CHECK(g.element_at(0) == GroupElement{{0, 0}});
    CHECK(g.element_at(1) == GroupElement{{0, 1}});
    CHECK(g.element_at(2) == GroupElement{{0, 2}});
    CHECK(g.element_at(3) == GroupElement{{1, 0}});
    for (std::uint64_t i = 0; i < g.order(); ++i) CHECK(g.index_of(g.element_at(i)) == i);
}

TEST_CASE("index arithmetic matches element arithmetic") {
    FiniteAbelianGroup g({4, 3});
    for (std::uint64_t i = 0; i < g.order(); ++i) {
        for (std::uint64_t j = 0; j < g.order(); ++j) {
            CHECK(g.index_add(i, j) ==
                  g.index_of(g.add(g.element_at(i), g.element_at(j))));
        }
        CHECK(g.index_neg(i) == g.index_of(g.neg(g.element_at(i))));
        CHECK(g.index_scalar_mul(5, i) == g.index_of(g.scalar_mul(5, g.element_at(i))));
    }
}

TEST_CASE("exponent equals the maximal element order, exhaustively to 64") {
    for (const FiniteAbelianGroup& g : enumerate_abelian_groups(64)) {
        std::uint64_t best = 1;
        for (std::uint64_t i = 0; i < g.order(); ++i)
            best = std::max(best, g.order_of(g.element_at(i)));
        CHECK(g.exponent() == best);
    }
}

TEST_CASE("canonicalization is idempotent and preserves the order") {
    FiniteAbelianGroup g({6, 4, 15});
    FiniteAbelianGroup c = g.canonicalized();
    CHECK(c.is_canonical());
    CHECK(c.order() == g.order());
    CHECK(c.canonicalized() == c);
    CHECK(c.factors() == std::vector<std::uint64_t>{4, 2, 3, 3, 5});
    CHECK(!FiniteAbelianGroup({2, 4}).is_canonical());
    CHECK(FiniteAbelianGroup({4, 2, 3}).is_canonical());
}

TEST_CASE("rank via the primary decomposition") {
    CHECK(FiniteAbelianGroup({6}).rank() == 1);
    CHECK(FiniteAbelianGroup({2, 3}).rank() == 1);
    CHECK(FiniteAbelianGroup({2, 2, 3}).rank() == 2);
    CHECK(FiniteAbelianGroup::trivial().rank() == 0);
}

TEST_CASE("primary split runs per-coordinate CRT") {
    FiniteAbelianGroup g({12, 5});
    PrimarySplit split(g, 2);
    CHECK(split.part().factors() == std::vector<std::uint64_t>{4});
    CHECK(split.complement().factors() == std::vector<std::uint64_t>{3, 5});

    // combine is a bijection part x complement -> parent.
    std::set<std::uint64_t> seen;
    for (std::uint64_t ip = 0; ip < split.part().order(); ++ip)
        for (std::uint64_t ic = 0; ic < split.complement().order(); ++ic) {
            GroupElement x = split.combine(split.part().element_at(ip),
                                           split.complement().element_at(ic));
            CHECK(split.project_part(x) == split.part().element_at(ip));
            seen.insert(g.index_of(x));
        }
    CHECK(seen.size() == g.order());

    // Elements of the p-part have p-power order inside the parent.
    GroupElement gen = split.combine(split.part().element_at(1), split.complement().zero());
    CHECK(g.order_of(gen) == 4);
}

TEST_CASE("group enumeration hits the expected isomorphism class counts") {
    auto groups = enumerate_abelian_groups(16);
    auto count = [&](std::uint64_t n) {
        return std::count_if(groups.begin(), groups.end(),
                             [&](const FiniteAbelianGroup& g) { return g.order() == n; });
    };
    CHECK(count(1) == 1);
    CHECK(count(4) == 2);
    CHECK(count(8) == 3);
    CHECK(count(12) == 2);
    CHECK(count(16) == 5);
    for (const FiniteAbelianGroup& g : groups) CHECK(g.is_canonical());
}
