#include "doctest.h"

#include <cmath>

#include "hzeta/domains.hpp"

using namespace hzeta;

TEST_CASE("standard discs at lambda = 3") {
    SurfaceParams p(3.0);
    auto d = standard_discs(p);
    CHECK(d.E1.center == doctest::Approx(1.2).epsilon(1e-14));
    CHECK(d.E1.radius == doctest::Approx(0.8).epsilon(1e-14));
    CHECK(d.E2.center == doctest::Approx(-4.0 / 3.0).epsilon(1e-14));
    CHECK(d.E2.radius == doctest::Approx(5.0 / 3.0).epsilon(1e-14));
    REQUIRE(d.E3.chart.has_value());
    // geometrically E3 is the half-plane Re w < 3/(4 lam - 2) = 3/10: the
    // chart's pole 1/lambda lies on the boundary of E2, and the other E2
    // boundary point maps to 3/10
    CHECK(d.E3.chart->apply_real(-3.0) == doctest::Approx(0.3).epsilon(1e-14));
    CHECK(std::isinf(d.E3.chart->apply_real(1.0 / 3.0)));
    CHECK_THROWS_AS(SurfaceParams(2.0), InvalidLambda);
}

TEST_CASE("image discs") {
    SurfaceParams p(3.0);
    auto d = standard_discs(p);
    GroupElement h1 = elem_h(1, 3.0);
    Disc im = image_disc(h1, d.E1);
    CHECK(im.center == doctest::Approx(-1.2).epsilon(1e-12));
    CHECK(im.radius == doctest::Approx(0.8).epsilon(1e-12));

    Disc im2 = image_disc(elem_h(2, 3.0).inverse(), d.E1);
    CHECK(im2.lo() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(im2.hi() == doctest::Approx(4.0 / 7.0).epsilon(1e-12));

    CHECK(image_disc(GroupElement(), d.E1).center == doctest::Approx(d.E1.center));

    // composition: image_disc(g, image_disc(h, d)) = image_disc(gh, d)
    GroupElement g = elem_h(2, 3.0).inverse();
    Disc a = image_disc(g, image_disc(h1, d.E1));
    Disc b = image_disc(g * h1, d.E1);
    CHECK(a.center == doctest::Approx(b.center).epsilon(1e-10));
    CHECK(a.radius == doctest::Approx(b.radius).epsilon(1e-10));
}

TEST_CASE("pole of h2^-1 sits inside E2: the displayed nuclearity bullet for "
          "the second component cannot be taken verbatim") {
    // The operator realization routes the second component through discs to
    // the left of 2 lam/(3 lam^2 + 4) instead; see the transfer-operator cover.
    for (double lam : {2.1, 2.5, 3.0, 5.0, 10.0}) {
        SurfaceParams p(lam);
        auto d = standard_discs(p);
        GroupElement h2i = elem_h(2, lam).inverse();
        double pole = 2.0 * lam / (3.0 * lam * lam + 4.0);
        CHECK(d.E2.contains(Complex(pole, 0.0)));
        CHECK_THROWS_AS(image_disc(h2i, d.E2), PoleInClosure);
    }
}

TEST_CASE("inclusion margins are positive with the prose E2") {
    for (double lam : {2.1, 2.5, 3.0, 5.0, 10.0}) {
        SurfaceParams p(lam);
        auto rep = inclusion_report(p, 50);
        INFO("lambda = ", lam);
        for (const auto& c : rep.conditions) {
            INFO(c.name, " margin ", c.margin);
            CHECK(c.margin > 0.0);
        }
        CHECK_NOTHROW(verify_inclusions(p, 50));
    }
}

TEST_CASE("margins of the spec examples at lambda = 3") {
    SurfaceParams p(3.0);
    auto d = standard_discs(p);
    GroupElement h1 = elem_h(1, 3.0);
    CHECK(inclusion_margin(image_disc(elem_h(2, 3.0).inverse(), d.E1), d.E1) ==
          doctest::Approx(0.1).epsilon(1e-10));
    Disc conv(0.0, 1.0 / 3.0);
    CHECK(inclusion_margin(image_disc(h1.inverse(), d.E1), conv) ==
          doctest::Approx(1.0 / 21.0).epsilon(1e-9));
    // h1 . cl(E1) = [-2, -0.4] inside (-3, 1/3): left gap 1
    Disc im = image_disc(h1, d.E1);
    CHECK(im.lo() - d.E2.lo() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("h1^n margins decrease toward the limit margin 1/lambda") {
    for (double lam : {2.5, 3.0, 5.0}) {
        SurfaceParams p(lam);
        auto d = standard_discs(p);
        GroupElement h1 = elem_h(1, lam);
        double prev = std::numeric_limits<double>::infinity();
        double limit = d.E2.radius - std::fabs(d.E2.center); // = 1/lambda
        CHECK(limit == doctest::Approx(1.0 / lam).epsilon(1e-12));
        for (int n = 1; n <= 50; ++n) {
            double m = inclusion_margin(image_disc(h1.pow(n), d.E1), d.E2);
            CHECK(m > limit); // decreasing toward the limit from above
            CHECK(m < prev + 1e-15);
            prev = m;
        }
        CHECK(prev - limit < 0.1);
    }
}

TEST_CASE("displayed-formula E2 fails the h1 inclusion at lambda = 3") {
    SurfaceParams p(3.0);
    auto disp = standard_discs(p, E2Variant::Displayed);
    CHECK(disp.E2.lo() == doctest::Approx(-5.0 / 3.0).epsilon(1e-12));
    Disc im = image_disc(elem_h(1, 3.0), standard_discs(p).E1);
    CHECK(inclusion_margin(im, disp.E2) < 0.0); // image reaches -2
    auto rep = inclusion_report(p, 4, E2Variant::Displayed);
    CHECK_FALSE(rep.all_ok());
}

TEST_CASE("E1 stays in the open right half plane") {
    for (double lam : {2.1, 3.0, 10.0}) {
        auto d = standard_discs(SurfaceParams(lam));
        CHECK(d.E1.lo() == doctest::Approx(2.0 / (lam + 2.0)).epsilon(1e-12));
        CHECK(d.E1.lo() > 0.0);
    }
}
