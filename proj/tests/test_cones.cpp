#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "conescale/cones.hpp"
#include "conescale/sampling.hpp"

using namespace conescale;

TEST_CASE("orthant membership") {
    SolidCone cone = SolidCone::orthant(2);
    CHECK(cone.contains({0.0, 0.0}));
    CHECK_FALSE(cone.contains({1.0, -1.0}));
    CHECK(cone.contains({1.0, 2.0}));
    // within the tolerance band
    CHECK(cone.contains({-1e-13, 1.0}));
    CHECK_FALSE(cone.contains({-1e-9, 1.0}));
}

TEST_CASE("lorentz membership boundary") {
    SolidCone cone = SolidCone::lorentz(3);
    // |(3,4)| = 5 exactly on the boundary
    CHECK(cone.contains({3.0, 4.0, 5.0}));
    CHECK_FALSE(cone.contains({3.0, 4.0, 4.999}));
    CHECK(cone.interior_contains({0.0, 0.0, 1.0}));
    CHECK_FALSE(cone.interior_contains({3.0, 4.0, 5.0}));
}

TEST_CASE("orthant interior") {
    SolidCone cone = SolidCone::orthant(2);
    CHECK(cone.interior_contains({1.0, 1.0}));
    CHECK_FALSE(cone.interior_contains({1.0, 0.0}));
}

TEST_CASE("order oracles") {
    SolidCone cone = SolidCone::orthant(2);
    CHECK(cone.leq({1.0, 1.0}, {2.0, 3.0}));  // (1,2) in P
    Vec x{0.3, -0.7};
    CHECK(cone.leq(x, x));  // reflexive, 0 in P
    CHECK_FALSE(cone.leq({1.0, 0.0}, {0.0, 1.0}));

    CHECK(cone.strictly_less({0.0, 0.0}, {1.0, 1.0}));
    CHECK_FALSE(cone.strictly_less({0.0, 0.0}, {1.0, 0.0}));
    CHECK(SolidCone::lorentz(2).strictly_less({0.0, 0.0}, {0.0, 1.0}));
}

TEST_CASE("find_scale walks the doubling schedule") {
    SolidCone orthant = SolidCone::orthant(2);
    // n = 1, 2 fail ((1,1) is not strictly below itself), n = 4 gives (1/2,1/2)
    CHECK(orthant.find_scale({2.0, 2.0}, {1.0, 1.0}) == 0.25);
    // n = 1 fails strictness, n = 2 succeeds
    CHECK(orthant.find_scale({1.0, 1.0}, {1.0, 1.0}) == 0.5);
    // need 4/n < 1 strictly, first power of two is n = 8
    CHECK(SolidCone::lorentz(2).find_scale({0.0, 4.0}, {0.0, 1.0}) == 0.125);

    // postcondition holds exactly as returned
    SplitMix64 rng(7);
    for (int i = 0; i < 50; ++i) {
        SolidCone cone = sample_polyhedral_cone(3, rng);
        Vec c = sample_interior(cone, rng), e = sample_interior(cone, rng);
        double delta = cone.find_scale(c, e);
        CHECK(cone.strictly_less(zeros(3), sub(e, scale(delta, c))));
    }

    CHECK_THROWS_AS(orthant.find_scale({1.0, 0.0}, {1.0, 1.0}), NotInteriorError);
    CHECK_THROWS_AS(orthant.find_scale({1.0, 1.0}, {1.0, 0.0}), NotInteriorError);
}

TEST_CASE("dimension and finiteness guards") {
    SolidCone cone = SolidCone::orthant(2);
    CHECK_THROWS_AS(cone.contains({1.0, 2.0, 3.0}), DimensionError);
    CHECK_THROWS_AS(cone.leq({1.0, 2.0}, {1.0}), DimensionError);
    CHECK_THROWS_AS(cone.contains({1.0, std::nan("")}), DomainError);
    CHECK_THROWS_AS(cone.contains({1.0, INFINITY}), DomainError);
    CHECK_THROWS_AS(SolidCone::orthant(0), DomainError);
    CHECK_THROWS_AS(SolidCone::lorentz(1), DomainError);
}

TEST_CASE("polyhedral construction validates the witness") {
    CHECK_THROWS_AS(SolidCone::polyhedral({{1.0, 0.0}, {0.0, 1.0}}, {1.0, 0.0}), NotInteriorError);
    CHECK_THROWS_AS(SolidCone::polyhedral({{0.0, 0.0}}, {1.0, 1.0}), DomainError);
    SolidCone cone = SolidCone::polyhedral({{1.0, 0.0}, {0.0, 1.0}}, {1.0, 1.0});
    // equals the plane orthant
    CHECK(cone.contains({2.0, 0.0}));
    CHECK_FALSE(cone.contains({-1.0, 1.0}));
    CHECK(cone.interior_contains({0.5, 0.5}));
}

TEST_CASE("validate reports the cone axioms") {
    CHECK(validate(SolidCone::orthant(3), 42).all_passed());
    CHECK(validate(SolidCone::lorentz(3), 42).all_passed());

    // a half-plane is solid but not pointed: rank 1 < 2
    SolidCone halfplane = SolidCone::polyhedral({{1.0, 0.0}}, {1.0, 0.0});
    ValidationReport rep = validate(halfplane, 42);
    CHECK_FALSE(rep.all_passed());
    REQUIRE(rep.find("pointedness") != nullptr);
    CHECK_FALSE(rep.find("pointedness")->passed);
    CHECK(rep.find("closure_addition")->passed);

    SolidCone quadrant = SolidCone::polyhedral({{1.0, 0.0}, {0.0, 1.0}}, {1.0, 1.0});
    CHECK(validate(quadrant, 42).all_passed());
}

TEST_CASE("samplers respect their contracts") {
    SplitMix64 rng(11);
    for (ConeKind kind : {ConeKind::Orthant, ConeKind::Lorentz, ConeKind::Polyhedral}) {
        SolidCone cone = kind == ConeKind::Orthant   ? SolidCone::orthant(4)
                         : kind == ConeKind::Lorentz ? SolidCone::lorentz(4)
                                                     : sample_polyhedral_cone(4, rng);
        for (int i = 0; i < 200; ++i) {
            CHECK(cone.contains(sample_cone(cone, rng)));
            CHECK(cone.interior_contains(sample_interior(cone, rng)));
        }
    }
}
