#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "strata/space.hpp"

using namespace strata;

TEST_CASE("dimensions") {
    CHECK(dimension(make_point()) == 0);
    CHECK(dimension(make_circle()) == 1);
    CHECK(dimension(make_torus(3)) == 3);
    CHECK(dimension(make_sphere(4)) == 4);
    CHECK(dimension(make_disc(2)) == 2);
    CHECK(dimension(make_cone(make_torus(2), Subspace::zero())) == 3);
    CHECK(dimension(make_suspension(make_circle(), Subspace::zero())) == 2);
    CHECK(dimension(make_product(make_torus(2), make_sphere(3))) == 5);
}

TEST_CASE("constructor validation") {
    CHECK_THROWS_AS(make_torus(0), input_error);
    CHECK_THROWS_AS(make_sphere(-1), input_error);
    CHECK_THROWS_AS(make_disc(0), input_error);
    CHECK_THROWS_AS(make_cone(make_point(), Subspace::zero()), input_error);
    // odd-dimensional links admit only the zero perversity
    Subspace line = Subspace::from_span({{1}}, 1);
    CHECK_THROWS_AS(make_cone(make_circle(), line), input_error);
    CHECK_THROWS_AS(make_suspension(make_torus(3), Subspace::from_span({{1, 0, 0}}, 3)), input_error);
}

TEST_CASE("primitive cohomology dimensions") {
    GradedBasis t3 = primitive_cohomology(*make_torus(3));
    CHECK(t3.dim(0) == 1);
    CHECK(t3.dim(1) == 3);
    CHECK(t3.dim(2) == 3);
    CHECK(t3.dim(3) == 1);
    CHECK(t3.poly().to_string() == "1 + 3*b + 3*b^2 + b^3");

    GradedBasis s2 = primitive_cohomology(*make_sphere(2));
    CHECK(s2.dim(0) == 1);
    CHECK(s2.dim(1) == 0);
    CHECK(s2.dim(2) == 1);

    CHECK(primitive_cohomology(*make_circle()).labels(1) == std::vector<std::string>{"d\xce\xb8"});
    CHECK_THROWS_AS(primitive_cohomology(*make_disc(2)), input_error);
}

TEST_CASE("smooth nodes") {
    GradedBasis basis{{{0, "1"}, {2, "h"}, {4, "vol"}}};
    SpacePtr s = make_smooth("fourfold", basis);
    CHECK(dimension(s) == 4);  // derived from the top class
    CHECK(dimension(make_smooth("padded", basis, std::nullopt, 6)) == 6);
    CHECK_THROWS_AS(make_smooth("bad", basis, std::nullopt, 2), input_error);
    CHECK_THROWS_AS(make_smooth("dup", GradedBasis{{{0, "x"}, {1, "x"}}}), input_error);
}

TEST_CASE("subspace canonical form") {
    Subspace a = Subspace::from_span({{2, 0}}, 2);
    Subspace b = Subspace::from_span({{1, 0}}, 2);
    CHECK(a == b);
    CHECK(Subspace::from_span({{1, 1}, {0, 1}}, 2) == Subspace::from_span({{1, 0}, {0, 1}}, 2));
    CHECK(Subspace::from_span({{2, 4}}, 2) == Subspace::from_span({{1, 2}}, 2));
    CHECK(Subspace::from_span({{-3, 0}}, 2) == b);
    CHECK(Subspace::from_span({{0, 0}}, 2).is_zero());
    CHECK(Subspace::zero().dim() == 0);
    CHECK(Subspace::from_span({{1, 2}, {2, 4}}, 2).dim() == 1);
}

TEST_CASE("middle structures") {
    MiddleStructure t2 = middle_structure(*make_torus(2));
    REQUIRE(t2.dim() == 2);
    REQUIRE(t2.star.has_value());
    // star(dtheta1) = dtheta2, star(dtheta2) = -dtheta1
    CHECK((*t2.star)[0] == IntRow{0, -1});
    CHECK((*t2.star)[1] == IntRow{1, 0});
    check_star_sign(t2, 2);

    CHECK(middle_structure(*make_sphere(2)).dim() == 0);
    CHECK_THROWS_AS(middle_structure(*make_circle()), input_error);
    CHECK_THROWS_AS(middle_structure(*make_torus(4)), math_error);

    MiddleStructure bad{{"a", "b"}, IntMat{{1, 0}, {0, 1}}};  // star^2 = +1, but needs -1
    CHECK_THROWS_AS(check_star_sign(bad, 2), input_error);
}

TEST_CASE("structural equality") {
    SpacePtr a = make_suspension(make_torus(2), Subspace::from_span({{1, 0}}, 2));
    SpacePtr b = make_suspension(make_torus(2), Subspace::from_span({{2, 0}}, 2));
    SpacePtr c = make_suspension(make_torus(2), Subspace::from_span({{0, 1}}, 2));
    CHECK(structurally_equal(*a, *b));
    CHECK_FALSE(structurally_equal(*a, *c));
    CHECK(structurally_equal(*make_product(a, b), *make_product(b, a)));
    CHECK_FALSE(structurally_equal(*make_torus(2), *make_sphere(2)));
}

TEST_CASE("witt condition") {
    CHECK(witt_check(*make_suspension(make_circle(), Subspace::zero())));
    CHECK(witt_check(*make_suspension(make_sphere(2), Subspace::zero())));
    CHECK_FALSE(witt_check(*make_suspension(make_torus(2), Subspace::zero())));
    // the inner node fails, and the failure propagates
    CHECK_FALSE(witt_check(*make_suspension(make_suspension(make_torus(2), Subspace::zero()), Subspace::zero())));
    CHECK(witt_check(*make_product(make_torus(3), make_suspension(make_sphere(3), Subspace::zero()))));
}
