#include <doctest.h>

#include "lec/geometry.hpp"
#include "support.hpp"

using namespace lec;

TEST_CASE("orient2d basic signs") {
    CHECK(orient2d({0, 0}, {1, 0}, {0, 1}) == 1);
    CHECK(orient2d({0, 0}, {1, 1}, {2, 2}) == 0);
    CHECK(orient2d({0, 0}, {0, 1}, {1, 0}) == -1);
}

TEST_CASE("orient2d antisymmetry and degenerate robustness") {
    testing::Rng rng(7);
    for (int i = 0; i < 2000; ++i) {
        const Point2 p{rng.uniform(), rng.uniform()};
        const Point2 q{rng.uniform(), rng.uniform()};
        const Point2 r{rng.uniform(), rng.uniform()};
        const int o = orient2d(p, q, r);
        CHECK(orient2d(q, p, r) == -o);
        CHECK(orient2d(p, r, q) == -o);
        CHECK(orient2d(r, q, p) == -o);
    }
    // Exactly collinear points (integer grid scaled by powers of two) must
    // report 0 even when the double determinant evaluation is inexact.
    for (int i = 0; i < 2000; ++i) {
        const double s = std::ldexp(1.0, -(static_cast<int>(rng.next() % 40)));
        const double ax = static_cast<double>(rng.uniform_int(-999, 999));
        const double ay = static_cast<double>(rng.uniform_int(-999, 999));
        const double dx = static_cast<double>(rng.uniform_int(-99, 99));
        const double dy = static_cast<double>(rng.uniform_int(-99, 99));
        if (dx == 0 && dy == 0) continue;
        const double k1 = rng.uniform_int(1, 7), k2 = rng.uniform_int(8, 15);
        const Point2 a{ax * s, ay * s};
        const Point2 b{(ax + k1 * dx) * s, (ay + k1 * dy) * s};
        const Point2 c{(ax + k2 * dx) * s, (ay + k2 * dy) * s};
        CHECK(orient2d(a, b, c) == 0);
    }
}

TEST_CASE("incircle signs") {
    const Point2 a{0, 0}, b{1, 0}, c{0, 1};
    CHECK(incircle(a, b, c, {0.5, 0.5}) == 1);   // on... strictly inside circle x=y=.5 r=.707: (0.5,0.5) center
    CHECK(incircle(a, b, c, {2, 2}) == -1);
    CHECK(incircle(a, b, c, {1, 1}) == 0);  // cocircular with the right triangle
}

TEST_CASE("dist examples") {
    CHECK(dist({0, 0}, {3, 4}) == doctest::Approx(5.0));
    CHECK(dist({0.3, -0.7}, {0.3, -0.7}) == 0.0);
    CHECK(dist({0.2, 0.2}, {0.5, 0.425}) == doctest::Approx(0.375));  // circumradius of the test triangle
}

TEST_CASE("line canonical form") {
    const Line2 l = Line2::from_coeffs(-2, 0, 1);
    CHECK(l.a == doctest::Approx(1.0));
    CHECK(l.b == 0.0);
    CHECK(l.c == doctest::Approx(-0.5));
    const Line2 h = Line2::horizontal(0.25);
    CHECK(h.a == 0.0);
    CHECK(h.b == 1.0);
    CHECK(h.c == -0.25);
    CHECK(Line2::through({0, 0}, {1, 1}).eval({2, 2}) == doctest::Approx(0.0));
}

TEST_CASE("line_segment_intersection cases") {
    const Line2 mid = Line2::horizontal(0.5);
    const LineSegHit h1 = line_segment_intersection(mid, {{0, 0}, {0, 1}});
    REQUIRE(h1.kind == LineSegHit::At);
    CHECK(h1.t == doctest::Approx(0.5));
    CHECK(h1.p.y == doctest::Approx(0.5));

    CHECK(line_segment_intersection(Line2::horizontal(2.0), {{0, 0}, {1, 0}}).kind ==
          LineSegHit::None);
    CHECK(line_segment_intersection(Line2::horizontal(0.0), {{0, 0}, {1, 0}}).kind ==
          LineSegHit::Overlap);
    // Endpoint touch reports the endpoint with t clamped.
    const LineSegHit h2 = line_segment_intersection(Line2::horizontal(1.0), {{0, 0}, {2, 1}});
    REQUIRE(h2.kind == LineSegHit::At);
    CHECK(h2.t == doctest::Approx(1.0));
}

TEST_CASE("poly_roots examples") {
    const Poly p1{{-1, 0, 1}};  // x^2 - 1
    auto r1 = poly_roots(p1, -2, 2);
    REQUIRE(r1.size() == 2);
    CHECK(r1[0].x == doctest::Approx(-1.0));
    CHECK(r1[1].x == doctest::Approx(1.0));

    const Poly p2{{0.09, -0.6, 1}};  // (x - 0.3)^2
    auto r2 = poly_roots(p2, 0, 1);
    REQUIRE(r2.size() == 1);
    CHECK(r2[0].x == doctest::Approx(0.3));
    CHECK(r2[0].multiplicity == 2);

    const Poly p3{{4, 0, -5, 0, 1}};  // x^4 - 5x^2 + 4
    auto r3 = poly_roots(p3, -3, 3);
    REQUIRE(r3.size() == 4);
    CHECK(r3[0].x == doctest::Approx(-2.0));
    CHECK(r3[1].x == doctest::Approx(-1.0));
    CHECK(r3[2].x == doctest::Approx(1.0));
    CHECK(r3[3].x == doctest::Approx(2.0));
}

TEST_CASE("poly_roots residual bound and count on random quartics") {
    testing::Rng rng(42);
    for (int iter = 0; iter < 500; ++iter) {
        // Build from known roots so expected values are independent of the solver.
        double roots[4];
        for (double& r : roots) r = rng.uniform(-1, 1);
        Poly p{{1.0}};
        const int deg = rng.uniform_int(1, 4);
        for (int k = 0; k < deg; ++k) {
            Poly q;
            q.coeffs.assign(p.coeffs.size() + 1, 0.0);
            for (size_t i = 0; i < p.coeffs.size(); ++i) {
                q.coeffs[i + 1] += p.coeffs[i];
                q.coeffs[i] -= roots[k] * p.coeffs[i];
            }
            p = q;
        }
        const auto rs = poly_roots(p, -1.5, 1.5, 1e-10);
        int total_mult = 0;
        for (const auto& r : rs) {
            CHECK(std::fabs(p.eval(r.x)) < 1e-10 * (1.0 + p.max_abs_coeff()));
            total_mult += r.multiplicity;
        }
        CHECK(static_cast<int>(rs.size()) <= deg);
        CHECK(total_mult >= deg - 4);  // multiplicities may merge close roots
    }
}
