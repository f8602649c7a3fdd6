#include "doctest.h"

#include <cmath>

#include "hzeta/resonances.hpp"

using namespace hzeta;

TEST_CASE("delta for lambda = 3") {
    SurfaceParams p(3.0);
    auto d = find_delta(p, 24, 1e-10);
    CHECK(d.delta > 0.5);
    CHECK(d.delta < 1.0);
    CHECK(d.lambda_max_residual < 1e-10);
    CHECK(d.z_abs < 1e-8);
    // stability under refinement of the basis
    auto d48 = find_delta(p, 48, 1e-10);
    CHECK(std::fabs(d.delta - d48.delta) < 1e-9);
}

TEST_CASE("delta decreases with lambda") {
    auto d3 = find_delta(SurfaceParams(3.0), 24, 1e-9);
    auto d5 = find_delta(SurfaceParams(5.0), 24, 1e-9);
    CHECK(d5.delta < d3.delta);
}

TEST_CASE("Z changes sign across delta on the real axis") {
    SurfaceParams p(3.0);
    auto d = find_delta(p, 24, 1e-9);
    auto z = [&](double s) {
        return fredholm_det(assemble_full(p, Complex(s, 0.0), 24)).real();
    };
    CHECK(z(d.delta - 0.02) * z(d.delta + 0.02) < 0.0);
    CHECK(z(d.delta + 0.02) > 0.0);
}

TEST_CASE("grid scan shapes and values") {
    SurfaceParams p(3.0);
    GridResult g = scan_grid(p, Box{0.8, 1.0, -0.2, 0.2}, 0.1, 12, 2);
    CHECK(g.n_re == 3);
    CHECK(g.n_im == 5);
    CHECK(g.points.size() == 15);
    // conjugate points carry conjugate values
    auto at = [&](int i, int j) { return g.points[std::size_t(i) * g.n_re + j]; };
    for (int j = 0; j < g.n_re; ++j) {
        Complex top = at(4, j).z, bot = at(0, j).z;
        CHECK(std::abs(top - std::conj(bot)) < 1e-12);
    }
    for (const auto& pt : g.points) CHECK(pt.flag == 0);
    // pole-guard flag near s = 0.5
    GridResult gp = scan_grid(p, Box{0.495, 0.505, 0.0, 0.0}, 0.005, 8, 1);
    bool flagged = false;
    for (const auto& pt : gp.points) flagged = flagged || pt.flag == 1;
    CHECK(flagged);
}

TEST_CASE("zero location around delta") {
    SurfaceParams p(3.0);
    auto d = find_delta(p, 24, 1e-9);
    Box box{d.delta - 0.05, d.delta + 0.05, -0.05, 0.05};
    CHECK(winding_number(p, box, 24) == 1);
    auto zeros = locate_zeros(p, box, 24);
    REQUIRE(zeros.size() == 1);
    CHECK(std::abs(zeros[0].s - Complex(d.delta, 0.0)) < 1e-8);
    CHECK(zeros[0].residual < 1e-9);
}

TEST_CASE("no zeros to the right of delta") {
    SurfaceParams p(3.0);
    auto d = find_delta(p, 24, 1e-9);
    Box box{d.delta + 0.05, 2.0, -1.5, 1.5};
    CHECK(winding_number(p, box, 24) == 0);
    auto zeros = locate_zeros(p, box, 24);
    CHECK(zeros.empty());
}

TEST_CASE("pole guards in locate_zeros") {
    SurfaceParams p(3.0);
    CHECK_THROWS_AS(locate_zeros(p, Box{0.2, 0.8, -0.5, 0.5}, 12), BoundaryTooClose);
    CHECK_THROWS_AS(locate_zeros(p, Box{0.49, 0.8, -0.5, 0.5}, 12), BoundaryTooClose);
}
