#include "doctest.h"

#include <random>

#include "fdcalc/arith.hpp"
#include "fdcalc/errors.hpp"
#include "fdcalc/func_table.hpp"
#include "fdcalc/serialization.hpp"

using namespace fdcalc;

namespace {

const FiniteAbelianGroup z2({2});
const FiniteAbelianGroup z3({3});
const FiniteAbelianGroup z4({4});

GroupElement e1(std::uint64_t v) { return GroupElement{{v}}; }

} // namespace

TEST_CASE("delta tables") {
    FuncTable d = FuncTable::delta(z2, z2, e1(0), e1(1));
    CHECK(d.value_index(0) == 1);
    CHECK(d.value_index(1) == 0);
    CHECK(FuncTable::delta(z4, z4, e1(3), e1(0)).is_zero());

    // Deltas at the same point add pointwise in the codomain slot.
    FuncTable a = FuncTable::delta(z4, z4, e1(0), e1(1));
    FuncTable b = FuncTable::delta(z4, z4, e1(0), e1(2));
    CHECK(a.pointwise_add(b) == FuncTable::delta(z4, z4, e1(0), e1(3)));
}

TEST_CASE("difference operator basics") {
    FuncTable c = FuncTable::constant(z4, z2, e1(1));
    CHECK(c.difference(e1(1)).is_zero());
    CHECK(c.difference(e1(3)).is_zero());

    FuncTable id = FuncTable::identity(z4);
    CHECK(id.difference(e1(1)) == FuncTable::constant(z4, z4, e1(1)));

    FuncTable d01 = FuncTable::delta(z2, z2, e1(0), e1(1));
    CHECK(d01.difference(e1(1)) == FuncTable::constant(z2, z2, e1(1)));
}

TEST_CASE("iterated differences through the binomial sum") {
    FuncTable id = FuncTable::identity(z4);
    CHECK(id.iterated_difference_binomial(e1(1), 0) == id);
    CHECK(id.iterated_difference_binomial(e1(1), 1) == id.difference(e1(1)));
    CHECK(id.iterated_difference_binomial(e1(1), 2).is_zero());

    std::mt19937_64 rng(11);
    for (const FiniteAbelianGroup& a : {FiniteAbelianGroup({8}), FiniteAbelianGroup({2, 3})}) {
        for (int rep = 0; rep < 10; ++rep) {
            FuncTable f(a, z4);
            for (std::uint64_t i = 0; i < a.order(); ++i) f.set_value_index(i, rng() % 4);
            GroupElement sh = a.element_at(rng() % a.order());
            FuncTable iter = f;
            for (std::uint64_t n = 0; n <= 6; ++n) {
                CHECK(f.iterated_difference_binomial(sh, n) == iter);
                iter = iter.difference(sh);
            }
        }
    }
}

TEST_CASE("homomorphism tables") {
    FuncTable h = FuncTable::hom(z2, z4, {e1(2)});
    CHECK(h.value_index(0) == 0);
    CHECK(h.value_index(1) == 2);
    CHECK_THROWS_AS(FuncTable::hom(z2, z4, {e1(1)}), IllDefinedError);
    CHECK(FuncTable::hom(z2, z4, {e1(0)}).is_zero());
    CHECK_THROWS_AS(FuncTable::hom(z2, z4, {}), std::invalid_argument);
}

TEST_CASE("fdeg on flat cases") {
    CHECK(fdeg(FuncTable(z4, z2)) == ExtNat::neg_infinity());
    CHECK(fdeg(FuncTable::constant(z4, z2, e1(1))) == ExtNat::finite(0));
    CHECK(fdeg(FuncTable::constant(FiniteAbelianGroup::trivial(), z2, e1(1))) ==
          ExtNat::finite(0));
}

TEST_CASE("fdeg of delta functions") {
    CHECK(fdeg(FuncTable::delta(z4, z2, e1(0), e1(1))) == ExtNat::finite(3));
    CHECK(fdeg(FuncTable::delta(z3, z2, e1(0), e1(1))) == ExtNat::infinity());
    CHECK(fdeg(FuncTable::delta(z2, z2, e1(0), e1(1))) == ExtNat::finite(1));
}

TEST_CASE("nonzero homomorphisms have degree one") {
    CHECK(fdeg(FuncTable::hom(z2, z4, {e1(2)})) == ExtNat::finite(1));
    CHECK(fdeg(FuncTable::identity(z4)) == ExtNat::finite(1));
    CHECK(fdeg(FuncTable::hom(FiniteAbelianGroup({2, 3}), FiniteAbelianGroup({2, 3}),
                              {GroupElement{{1, 0}}, GroupElement{{0, 1}}})) ==
          ExtNat::finite(1));
}

TEST_CASE("fdeg across mixed-order groups") {
    // Z6 -> Z6 identity under the standard isomorphism: degree 1.
    FiniteAbelianGroup z6({6});
    CHECK(fdeg(FuncTable::identity(z6)) == ExtNat::finite(1));

    // A delta on Z6 -> Z6 does not factor over either primary part, so its
    // degree is infinite; the finite supremum 2 is attained by joins.
    CHECK(fdeg(FuncTable::delta(z6, z6, e1(0), e1(1))) == ExtNat::infinity());

    // Maps that do not factor over the 2-part are infinite-degree.
    FuncTable f(z6, z2);
    f.set_value_index(1, 1); // value depends on the 3-part coset
    CHECK(fdeg(f) == ExtNat::infinity());
}

TEST_CASE("all-tuples oracle") {
    ScanResult r = fdeg_bruteforce(FuncTable::delta(z2, z2, e1(0), e1(1)), 4);
    CHECK(!r.exceeded);
    CHECK(r.value == ExtNat::finite(1));

    r = fdeg_bruteforce(FuncTable::identity(z3), 4);
    CHECK(!r.exceeded);
    CHECK(r.value == ExtNat::finite(1));

    r = fdeg_bruteforce(FuncTable::delta(z3, z2, e1(0), e1(1)), 6);
    CHECK(r.exceeded);
    CHECK(r.cap == 6);

    CHECK(fdeg_bruteforce(FuncTable(z4, z4), 4).value == ExtNat::neg_infinity());
}

TEST_CASE("oracle work budget") {
    FiniteAbelianGroup z8({8});
    FuncTable f = FuncTable::delta(z8, z8, e1(0), e1(1));
    CHECK_THROWS_AS(fdeg_bruteforce(f, 15, 50), BudgetExceededError);
}

TEST_CASE("generator scan agrees with fdeg and the oracle") {
    std::mt19937_64 rng(3);
    for (const FiniteAbelianGroup& a :
         {FiniteAbelianGroup({4}), FiniteAbelianGroup({2, 2}), FiniteAbelianGroup({3})}) {
        for (const FiniteAbelianGroup& b : {FiniteAbelianGroup({4}), FiniteAbelianGroup({9})}) {
            if (factorize(a.order()).front().first != factorize(b.order()).front().first)
                continue;
            for (int rep = 0; rep < 20; ++rep) {
                FuncTable f(a, b);
                for (std::uint64_t i = 0; i < a.order(); ++i) f.set_value_index(i, rng() % b.order());
                ExtNat d = fdeg(f);
                ScanResult gen = fdeg_scan_generators(f, 12);
                ScanResult tup = fdeg_bruteforce(f, 12);
                REQUIRE(!gen.exceeded);
                REQUIRE(!tup.exceeded);
                CHECK(gen.value == d);
                CHECK(tup.value == d);
            }
        }
    }
}

TEST_CASE("diagonal joins") {
    FuncTable id2 = FuncTable::identity(z2);
    FuncTable id3 = FuncTable::identity(z3);
    std::vector<FuncTable> parts{id2, id3};
    CHECK(diagonal_join(parts) == FuncTable::identity(FiniteAbelianGroup({2, 3})));

    FuncTable d2 = FuncTable::delta(z2, z2, e1(0), e1(1)); // degree 1
    FuncTable d3 = FuncTable::delta(z3, z3, e1(0), e1(1)); // degree 2
    std::vector<FuncTable> mixed{d2, d3};
    CHECK(fdeg(diagonal_join(mixed)) == ExtNat::finite(2));

    std::vector<FuncTable> with_zero{d2, FuncTable(z3, z3)};
    CHECK(fdeg(diagonal_join(with_zero)) == ExtNat::finite(1));

    CHECK_THROWS_AS(diagonal_join({}), std::invalid_argument);
}

TEST_CASE("composition and pointwise structure") {
    FuncTable f = FuncTable::delta(z4, z4, e1(1), e1(3));
    CHECK(f.pointwise_add(f.pointwise_neg()).is_zero());
    CHECK(fdeg(f.pointwise_add(f.pointwise_neg())) == ExtNat::neg_infinity());

    // Restriction along the doubling embedding Z2 -> Z4 never raises degree.
    FuncTable incl = FuncTable::hom(z2, z4, {e1(2)});
    FuncTable g = FuncTable::delta(z4, z2, e1(0), e1(1));
    CHECK(fdeg(compose_pre(g, incl)) <= fdeg(g));

    // Postcomposition with an injective hom preserves degree.
    CHECK(fdeg(compose_post(incl, FuncTable::delta(z4, z2, e1(0), e1(1)))) ==
          fdeg(FuncTable::delta(z4, z2, e1(0), e1(1))));

    CHECK_THROWS_AS(compose_pre(g, FuncTable::identity(z3)), std::invalid_argument);
    CHECK_THROWS_AS(f.pointwise_add(FuncTable(z2, z4)), std::invalid_argument);
}

TEST_CASE("shift convention: tau_a moves a delta to -a") {
    FuncTable d = FuncTable::delta(z4, z2, e1(0), e1(1));
    CHECK(d.shifted(e1(1)) == FuncTable::delta(z4, z2, e1(3), e1(1)));
}

TEST_CASE("map file round trip is bit-exact") {
    std::mt19937_64 rng(5);
    for (const FiniteAbelianGroup& dom :
         {FiniteAbelianGroup({4, 2}), FiniteAbelianGroup({6}), FiniteAbelianGroup({3, 2}),
          FiniteAbelianGroup::trivial()}) {
        FuncTable f(dom, FiniteAbelianGroup({2, 3}));
        for (std::uint64_t i = 0; i < dom.order(); ++i) f.set_value_index(i, rng() % 6);
        std::string text = map_to_string(f);
        FuncTable g = map_from_string(text);
        CHECK(g == f);
        CHECK(map_to_string(g) == text);
    }
}

TEST_CASE("map file rejects malformed input") {
    CHECK_THROWS_AS(map_from_string(R"({"domain":"Z2","codomain":"Z2","values":[[0]]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(map_from_string(R"({"domain":"Z2","codomain":"Z2","values":[[0],[5]]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(map_from_string(R"({"domain":"Z","codomain":"Z2","values":[]})"),
                    NotFiniteError);
    CHECK_THROWS_AS(map_from_string(R"({"domain":"Z1","codomain":"Z2","values":[]})"),
                    ParseError);
}
