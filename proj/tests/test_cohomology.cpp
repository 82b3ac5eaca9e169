#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "strata/cohomology.hpp"
#include "strata/perversity.hpp"

using namespace strata;

namespace {
Subspace d1() { return Subspace::from_span({{1, 0}}, 2); }
Subspace full() { return Subspace::from_span({{1, 0}, {0, 1}}, 2); }
}  // namespace

TEST_CASE("cone over the 2-torus") {
    SpacePtr c = make_cone(make_torus(2), d1());
    GradedBasis n = cone_N(*c);
    CHECK(n.poly().to_string() == "1 + b");
    CHECK(n.labels(1) == std::vector<std::string>{"d\xce\xb8" "1"});

    GradedBasis d = cone_D(*c);
    CHECK(d.poly().to_string() == "b^2 + b^3");
    CHECK(d.labels(2) == std::vector<std::string>{"dx\xe2\x88\xa7" "d\xce\xb8" "2"});

    SpacePtr zero = make_cone(make_torus(2), Subspace::zero());
    CHECK(cone_N(*zero).poly().to_string() == "1");
    CHECK(cone_D(*zero).poly().to_string() == "2*b^2 + b^3");

    SpacePtr f = make_cone(make_torus(2), full());
    CHECK(cone_N(*f).poly().to_string() == "1 + 2*b");
    CHECK(cone_D(*f).poly().to_string() == "b^3");
}

TEST_CASE("cone over odd links ignores the middle") {
    SpacePtr c = make_cone(make_circle(), Subspace::zero());
    CHECK(cone_N(*c).poly().to_string() == "1");
    CHECK(cone_D(*c).poly().to_string() == "b^2");

    SpacePtr t3 = make_cone(make_torus(3), Subspace::zero());
    CHECK(cone_N(*t3).poly().to_string() == "1 + 3*b");
    CHECK(cone_D(*t3).poly().to_string() == "3*b^3 + b^4");
}

TEST_CASE("perversity vectors must match the link middle") {
    SpaceExpr bad{SpaceKind::Cone};
    bad.link = make_torus(2);
    bad.w = Subspace::from_span({{1, 0, 0}}, 3);
    CHECK_THROWS_AS(cone_N(bad), input_error);
}

TEST_CASE("discs") {
    CHECK(disc_N(*make_disc(3)).poly().to_string() == "1");
    CHECK(disc_D(*make_disc(3)).poly().to_string() == "b^3");
    CHECK_THROWS_AS(disc_N(*make_point()), input_error);
}

TEST_CASE("suspension cohomology") {
    CHECK(global_cohomology(*make_suspension(make_circle(), Subspace::zero())).poly().to_string() == "1 + b^2");
    CHECK(global_cohomology(*make_suspension(make_sphere(2), Subspace::zero())).poly().to_string() ==
          "1 + b^3");
    CHECK(global_cohomology(*make_suspension(make_torus(3), Subspace::zero())).poly().to_string() ==
          "1 + 3*b + 3*b^3 + b^4");
    CHECK(global_cohomology(*make_suspension(make_torus(2), d1())).poly().to_string() ==
          "1 + b + b^2 + b^3");
    CHECK(global_cohomology(*make_suspension(make_torus(2), Subspace::zero())).poly().to_string() ==
          "1 + 2*b^2 + b^3");
    CHECK(global_cohomology(*make_suspension(make_torus(2), full())).poly().to_string() == "1 + 2*b + b^3");

    GradedBasis s = global_cohomology(*make_suspension(make_torus(2), d1()));
    CHECK(s.labels(1) == std::vector<std::string>{"d\xce\xb8" "1"});
    CHECK(s.labels(2) == std::vector<std::string>{"d\xcf\x86\xe2\x88\xa7" "d\xce\xb8" "2"});
}

TEST_CASE("suspension equals the union of cone N and shifted cone dimensions") {
    for (Subspace w : {Subspace::zero(), d1(), full(), Subspace::from_span({{2, -3}}, 2)}) {
        SpacePtr link = make_torus(2);
        GradedPoly total =
            add(cone_N(*make_cone(link, w)).poly(), cone_D(*make_cone(link, w)).poly());
        CHECK(global_cohomology(*make_suspension(link, w)).poly() == total);
    }
}

TEST_CASE("kunneth products") {
    GradedPoly t2 = global_cohomology(*make_torus(2)).poly();
    GradedPoly s3 = global_cohomology(*make_sphere(3)).poly();
    CHECK(global_cohomology(*make_product(make_torus(2), make_sphere(3))).poly() == mul(t2, s3));

    // dimension-count oracle per degree
    GradedBasis prod = global_cohomology(*make_product(make_torus(2), make_torus(2)));
    for (int k = 0; k <= 4; ++k) {
        int expected = 0;
        for (int i = 0; i <= k; ++i) expected += global_cohomology(*make_torus(2)).dim(i) *
                                                 global_cohomology(*make_torus(2)).dim(k - i);
        CHECK(prod.dim(k) == expected);
    }
    CHECK(prod.labels(4) ==
          std::vector<std::string>{"d\xce\xb8" "1\xe2\x88\xa7" "d\xce\xb8" "2\xe2\x8a\x97"
                                   "d\xce\xb8" "1\xe2\x88\xa7" "d\xce\xb8" "2"});
}

TEST_CASE("cones and discs have no global cohomology") {
    CHECK_THROWS_AS(global_cohomology(*make_cone(make_circle(), Subspace::zero())), input_error);
    CHECK_THROWS_AS(global_cohomology(*make_disc(2)), input_error);
    CHECK_THROWS_AS(global_cohomology(*make_product(make_disc(2), make_circle())), input_error);
}

TEST_CASE("integer combination labels") {
    SpacePtr s = make_suspension(make_torus(2), Subspace::from_span({{1, 1}}, 2));
    CHECK(global_cohomology(*s).labels(1) ==
          std::vector<std::string>{"d\xce\xb8" "1+d\xce\xb8" "2"});
    SpacePtr neg = make_suspension(make_torus(2), Subspace::from_span({{1, -2}}, 2));
    CHECK(global_cohomology(*neg).labels(1) ==
          std::vector<std::string>{"d\xce\xb8" "1-2*d\xce\xb8" "2"});
}
