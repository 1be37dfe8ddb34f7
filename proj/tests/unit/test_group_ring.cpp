#include "doctest.h"

#include <random>

#include "fdcalc/arith.hpp"
#include "fdcalc/errors.hpp"
#include "fdcalc/group_ring.hpp"
#include "fdcalc/serialization.hpp"

using namespace fdcalc;

namespace {

GroupRingElement delta_gen(std::uint64_t m, const FiniteAbelianGroup& g, std::size_t i = 0) {
    return GroupRingElement::delta(m, g, g.generator(i));
}

} // namespace

TEST_CASE("zero ring coefficients are rejected") {
    CHECK_THROWS_AS(GroupRingElement(1, FiniteAbelianGroup({2})), std::invalid_argument);
    CHECK_THROWS_AS(nilpotency_index(1, FiniteAbelianGroup({2}), 8), std::invalid_argument);
}

TEST_CASE("delta elements") {
    FiniteAbelianGroup z4({4});

    CHECK(GroupRingElement::delta(2, z4, z4.zero()).is_zero());

    GroupRingElement d2 = GroupRingElement::delta(2, z4, GroupElement{{1}});
    CHECK(d2.coeff(GroupElement{{1}}) == 1);
    CHECK(d2.coeff(GroupElement{{0}}) == 1); // -1 = 1 mod 2
    CHECK(d2.terms().size() == 2);

    GroupRingElement d0 = GroupRingElement::delta(0, z4, GroupElement{{1}});
    CHECK(d0.coeff(GroupElement{{1}}) == 1);
    CHECK(d0.coeff(GroupElement{{0}}) == -1);

    CHECK(d2.augmentation() == 0);
    CHECK(d0.augmentation() == 0);
}

TEST_CASE("squares of difference elements") {
    FiniteAbelianGroup z2({2});
    GroupElement a{{1}};

    // Over Z: (Delta_a)^2 = 2[0] - 2[a].
    GroupRingElement sq = GroupRingElement::delta(0, z2, a).pow(2);
    CHECK(sq.coeff(z2.zero()) == 2);
    CHECK(sq.coeff(a) == -2);

    // Mod 2 the square collapses to zero.
    CHECK(GroupRingElement::delta(2, z2, a).pow(2).is_zero());
}

TEST_CASE("multiplying by the identity basis element") {
    FiniteAbelianGroup g({4, 2});
    GroupRingElement x(0, g);
    x.add_term(GroupElement{{1, 0}}, 3);
    x.add_term(GroupElement{{2, 1}}, -7);
    CHECK(x * GroupRingElement::basis(0, g, g.zero()) == x);
}

TEST_CASE("convolution identity [a][b] = [a+b] on groups up to order 16") {
    for (const FiniteAbelianGroup& g : enumerate_abelian_groups(16)) {
        for (std::uint64_t i = 0; i < g.order(); ++i) {
            for (std::uint64_t j = 0; j < g.order(); ++j) {
                GroupRingElement prod = GroupRingElement::basis(0, g, g.element_at(i)) *
                                        GroupRingElement::basis(0, g, g.element_at(j));
                CHECK(prod == GroupRingElement::basis(0, g, g.element_at(g.index_add(i, j))));
            }
        }
    }
}

TEST_CASE("augmentation examples and ring homomorphism property") {
    FiniteAbelianGroup g({6});
    GroupRingElement x(0, g);
    x.add_term(GroupElement{{2}}, 3);
    CHECK(x.augmentation() == 3);
    CHECK(GroupRingElement(0, g).augmentation() == 0);

    std::mt19937_64 rng(7);
    for (std::uint64_t m : {std::uint64_t{0}, std::uint64_t{4}, std::uint64_t{9}}) {
        for (int rep = 0; rep < 25; ++rep) {
            GroupRingElement a(m, g), b(m, g);
            for (int t = 0; t < 4; ++t) {
                a.add_term(g.element_at(rng() % 6), mpz_class(static_cast<long>(rng() % 11)) - 5);
                b.add_term(g.element_at(rng() % 6), mpz_class(static_cast<long>(rng() % 11)) - 5);
            }
            mpz_class esum = (a + b).augmentation();
            mpz_class eprod = (a * b).augmentation();
            mpz_class expect_sum = a.augmentation() + b.augmentation();
            mpz_class expect_prod = a.augmentation() * b.augmentation();
            if (m >= 2) {
                mpz_class mod(static_cast<unsigned long>(m));
                mpz_fdiv_r(expect_sum.get_mpz_t(), expect_sum.get_mpz_t(), mod.get_mpz_t());
                mpz_fdiv_r(expect_prod.get_mpz_t(), expect_prod.get_mpz_t(), mod.get_mpz_t());
            }
            CHECK(esum == expect_sum);
            CHECK(eprod == expect_prod);
        }
    }
}

TEST_CASE("modulus and group mismatches") {
    FiniteAbelianGroup z2({2}), z4({4});
    GroupRingElement a(2, z2), b(4, z2), c(2, z4);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a * c, std::invalid_argument);
}

TEST_CASE("difference element identities") {
    // Delta_{s+t} = [s] Delta_t + Delta_s and Delta_{-s} = -[-s] Delta_s.
    for (const FiniteAbelianGroup& g : enumerate_abelian_groups(12)) {
        if (g.is_trivial()) continue;
        for (std::uint64_t m : {std::uint64_t{0}, std::uint64_t{4}}) {
            for (std::uint64_t i = 0; i < g.order(); ++i) {
                GroupElement s = g.element_at(i);
                GroupElement t = g.element_at((i * 5 + 1) % g.order());
                GroupRingElement lhs = GroupRingElement::delta(m, g, g.add(s, t));
                GroupRingElement rhs = GroupRingElement::basis(m, g, s) *
                                           GroupRingElement::delta(m, g, t) +
                                       GroupRingElement::delta(m, g, s);
                CHECK(lhs == rhs);

                GroupRingElement lhs2 = GroupRingElement::delta(m, g, g.neg(s));
                GroupRingElement rhs2 = -(GroupRingElement::basis(m, g, g.neg(s)) *
                                          GroupRingElement::delta(m, g, s));
                CHECK(lhs2 == rhs2);
            }
        }
    }
}

TEST_CASE("action on tables") {
    FiniteAbelianGroup z2({2});
    FuncTable d01 = FuncTable::delta(z2, z2, z2.zero(), GroupElement{{1}});

    // Acting with Delta_1 on the delta function gives the constant 1.
    FuncTable acted = delta_gen(2, z2).act(d01);
    CHECK(acted == FuncTable::constant(z2, z2, GroupElement{{1}}));

    // A basis element shifts.
    FuncTable shifted = GroupRingElement::basis(2, z2, GroupElement{{1}}).act(d01);
    CHECK(shifted == d01.shifted(GroupElement{{1}}));

    // The zero ring element annihilates.
    CHECK(GroupRingElement(2, z2).act(d01).is_zero());

    // Modulus must be compatible with the codomain exponent.
    FiniteAbelianGroup z4({4});
    FuncTable into_z4 = FuncTable::delta(z2, z4, z2.zero(), GroupElement{{1}});
    CHECK_THROWS_AS(GroupRingElement::basis(2, z2, z2.zero()).act(into_z4),
                    std::invalid_argument);
    CHECK_NOTHROW(GroupRingElement::basis(4, z2, z2.zero()).act(into_z4));
    CHECK_NOTHROW(GroupRingElement::basis(0, z2, z2.zero()).act(into_z4));
}

TEST_CASE("ideal power vanishing") {
    FiniteAbelianGroup z2({2});
    CHECK(ideal_power_is_zero(2, z2, 2));
    CHECK(!ideal_power_is_zero(2, z2, 1));
    for (std::uint64_t n = 1; n <= 6; ++n) CHECK(!ideal_power_is_zero(0, z2, n));
    CHECK(ideal_power_is_zero(2, FiniteAbelianGroup::trivial(), 1));
}

TEST_CASE("nilpotency indices from the scan") {
    CHECK(nilpotency_index(2, FiniteAbelianGroup({2}), 16) == ExtNat::finite(2));
    CHECK(nilpotency_index(2, FiniteAbelianGroup({4}), 16) == ExtNat::finite(4));
    CHECK(nilpotency_index(3, FiniteAbelianGroup({3}), 16) == ExtNat::finite(3));
    CHECK(nilpotency_index(3, FiniteAbelianGroup({9}), 16) == ExtNat::finite(9));
    CHECK(nilpotency_index(4, FiniteAbelianGroup({2, 2}), 16) == ExtNat::finite(4));
}

TEST_CASE("nilpotency by structural test") {
    CHECK(nilpotency_index(6, FiniteAbelianGroup({2}), 16) == ExtNat::infinity());
    CHECK(nilpotency_index(0, FiniteAbelianGroup({2}), 16) == ExtNat::infinity());
    CHECK(nilpotency_index(2, FiniteAbelianGroup({6}), 16) == ExtNat::infinity());
    CHECK(nilpotency_index(2, FiniteAbelianGroup::trivial(), 16) == ExtNat::finite(1));
    CHECK(nilpotency_index(0, FiniteAbelianGroup::trivial(), 16) == ExtNat::finite(1));
}

TEST_CASE("nilpotency scan respects its cap") {
    CHECK_THROWS_AS(nilpotency_index(2, FiniteAbelianGroup({8}), 4), CapExceededError);
}

TEST_CASE("lower bound max(exp, rank) on the nilpotency index") {
    for (const FiniteAbelianGroup& g : enumerate_abelian_groups(16)) {
        if (g.is_trivial()) continue;
        auto fac = factorize(g.order());
        if (fac.size() != 1) continue;
        std::uint64_t p = fac.front().first;
        for (std::uint32_t beta = 1; beta <= 2; ++beta) {
            ExtNat nu = nilpotency_index(checked_pow(p, beta), g, 64);
            REQUIRE(nu.is_finite());
            CHECK(nu.finite_value() >= std::max(g.exponent(), g.rank()));
        }
    }
}

TEST_CASE("ring element JSON round trip, terms sorted by index") {
    FiniteAbelianGroup g({4, 3});
    GroupRingElement x(0, g);
    x.add_term(GroupElement{{3, 2}}, mpz_class("-123456789012345678901234567890"));
    x.add_term(GroupElement{{0, 1}}, 7);
    Json j = to_json(x);
    CHECK(j.at("terms").size() == 2);
    CHECK(j.at("terms").at(0).at(0) == Json::array({0, 1})); // lower index first
    CHECK(group_ring_from_json(j) == x);

    GroupRingElement y(6, FiniteAbelianGroup({6}));
    y.add_term(GroupElement{{5}}, 11);
    CHECK(group_ring_from_json(to_json(y)) == y);
}
