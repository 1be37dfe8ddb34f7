#include "doctest.h"

#include "fdcalc/descriptor.hpp"
#include "fdcalc/errors.hpp"

using namespace fdcalc;

TEST_CASE("parse Z4xZ2") {
    GroupDescriptor d = GroupDescriptor::parse("Z4xZ2");
    CHECK(d.free_rank() == 0);
    REQUIRE(d.part(2) != nullptr);
    const PrimaryPart& p2 = *d.part(2);
    REQUIRE(p2.factors.size() == 2);
    CHECK(p2.factors[0] == PrimaryFactor{2, 1});
    CHECK(p2.factors[1] == PrimaryFactor{1, 1});
    CHECK(!p2.unbounded);
}

TEST_CASE("parse splits composite orders") {
    GroupDescriptor d = GroupDescriptor::parse("Z6");
    REQUIRE(d.part(2) != nullptr);
    REQUIRE(d.part(3) != nullptr);
    CHECK(d.part(2)->factors == std::vector<PrimaryFactor>{{1, 1}});
    CHECK(d.part(3)->factors == std::vector<PrimaryFactor>{{1, 1}});
    CHECK(d == GroupDescriptor::parse("Z2xZ3"));
    CHECK(d == GroupDescriptor::parse("Z3xZ2"));
}

TEST_CASE("parse infinite constructs") {
    GroupDescriptor d = GroupDescriptor::parse("Z x Z2*inf x U3");
    CHECK(d.free_rank() == 1);
    REQUIRE(d.part(2) != nullptr);
    CHECK(d.part(2)->factors == std::vector<PrimaryFactor>{{1, std::nullopt}});
    REQUIRE(d.part(3) != nullptr);
    CHECK(d.part(3)->unbounded);
    CHECK(d.part(3)->factors.empty());
}

TEST_CASE("parse merges repeated factors and multiplicities") {
    CHECK(GroupDescriptor::parse("Z8*3") == GroupDescriptor::parse("Z8xZ8xZ8"));
    CHECK(GroupDescriptor::parse("Z2xZ2*inf") == GroupDescriptor::parse("Z2*inf"));
    CHECK(GroupDescriptor::parse("Z12") == GroupDescriptor::parse("Z4xZ3"));
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(GroupDescriptor::parse(""), ParseError);
    CHECK_THROWS_AS(GroupDescriptor::parse("Z1"), ParseError);
    CHECK_THROWS_AS(GroupDescriptor::parse("Z0"), ParseError);
    CHECK_THROWS_AS(GroupDescriptor::parse("Z4x"), ParseError);
    CHECK_THROWS_AS(GroupDescriptor::parse("xZ4"), ParseError);
    CHECK_THROWS_AS(GroupDescriptor::parse("U4"), ParseError);
    CHECK_THROWS_AS(GroupDescriptor::parse("Z*3"), ParseError);
    CHECK_THROWS_AS(GroupDescriptor::parse("Z4*1"), ParseError);
    CHECK_THROWS_AS(GroupDescriptor::parse("Z4**2"), ParseError);
    CHECK_THROWS_AS(GroupDescriptor::parse("1xZ2"), ParseError);
    CHECK_THROWS_AS(GroupDescriptor::parse("Q8"), ParseError);

    try {
        GroupDescriptor::parse("Z4 x Z1");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 6); // the '1' in the original string
    }
}

TEST_CASE("whitespace is ignored everywhere") {
    CHECK(GroupDescriptor::parse(" Z 4 x Z2 ") == GroupDescriptor::parse("Z4xZ2"));
    CHECK(GroupDescriptor::parse(" 1 ") == GroupDescriptor());
}

TEST_CASE("canonical rendering round-trips") {
    for (const char* spec : {"1", "Z", "Z4xZ2", "Z6", "Z x Z2*inf x U3", "Z8*3", "ZxZ",
                             "U2xZ4*2", "Z9xZ2"}) {
        GroupDescriptor d = GroupDescriptor::parse(spec);
        CHECK(GroupDescriptor::parse(d.str()) == d);
    }
    CHECK(GroupDescriptor::parse("Z6").str() == "Z2xZ3");
    CHECK(GroupDescriptor::parse("1").str() == "1");
    CHECK(GroupDescriptor::parse("Z2xZ4").str() == "Z4xZ2");
}

TEST_CASE("to_finite_group") {
    CHECK(GroupDescriptor::parse("Z12").to_finite_group().factors() ==
          std::vector<std::uint64_t>{4, 3});
    CHECK(GroupDescriptor::parse("1").to_finite_group().factors().empty());
    CHECK_THROWS_AS(GroupDescriptor::parse("Z").to_finite_group(), NotFiniteError);
    CHECK_THROWS_AS(GroupDescriptor::parse("Z2*inf").to_finite_group(), NotFiniteError);
    CHECK_THROWS_AS(GroupDescriptor::parse("U2").to_finite_group(), NotFiniteError);
}

TEST_CASE("structure stats") {
    StructureStats s = GroupDescriptor::parse("Z4xZ2").stats();
    CHECK(s.exponent == ExtNat::finite(4));
    CHECK(s.e_value == 4);
    CHECK(s.rank == ExtNat::finite(2));
    CHECK(s.is_finite);
    CHECK(s.is_torsion);
    REQUIRE(s.is_p_group.has_value());
    CHECK(*s.is_p_group == 2);

    s = GroupDescriptor::parse("Z").stats();
    CHECK(s.exponent == ExtNat::infinity());
    CHECK(s.e_value == 0);
    CHECK(s.rank == ExtNat::finite(1));
    CHECK(!s.is_finite);
    CHECK(!s.is_torsion);
    CHECK(!s.is_p_group.has_value());

    s = GroupDescriptor::parse("U2").stats();
    CHECK(s.exponent == ExtNat::infinity());
    CHECK(s.e_value == 0);
    CHECK(s.is_torsion);
    CHECK(!s.is_finite);
    CHECK(s.rank == ExtNat::infinity());
    REQUIRE(s.is_p_group.has_value());
    CHECK(*s.is_p_group == 2);

    s = GroupDescriptor::parse("ZxZ4").stats();
    CHECK(s.rank == ExtNat::finite(2));
    CHECK(!s.is_torsion);

    s = GroupDescriptor().stats();
    CHECK(s.is_trivial);
    CHECK(s.exponent == ExtNat::finite(1));
    CHECK(s.rank == ExtNat::finite(0));
}

TEST_CASE("primary components") {
    CHECK(GroupDescriptor::parse("Z6").primary_component(2) == GroupDescriptor::parse("Z2"));
    CHECK(GroupDescriptor::parse("Z6").primary_component(5) == GroupDescriptor());
    CHECK(GroupDescriptor::parse("ZxZ4").primary_component(2) == GroupDescriptor::parse("Z4"));
}

TEST_CASE("hom triviality") {
    auto D = [](const char* s) { return GroupDescriptor::parse(s); };
    CHECK(hom_is_trivial(D("Z3"), D("Z2")));
    CHECK(!hom_is_trivial(D("Z"), D("Z2")));
    CHECK(!hom_is_trivial(D("Z2"), D("Z4")));
    CHECK(hom_is_trivial(D("Z2"), D("1")));
    CHECK(hom_is_trivial(D("1"), D("Z4")));
    CHECK(hom_is_trivial(D("Z2*inf"), D("Z9xZ5")));
    CHECK(!hom_is_trivial(D("U2"), D("Z4")));
}

TEST_CASE("descriptor of a concrete group") {
    FiniteAbelianGroup g({6, 4});
    GroupDescriptor d = GroupDescriptor::of(g);
    CHECK(d == GroupDescriptor::parse("Z4xZ2xZ3"));
    CHECK(d.to_finite_group() == g.canonicalized());
}
