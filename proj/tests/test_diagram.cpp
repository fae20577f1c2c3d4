#include <doctest.h>

#include <algorithm>
#include <set>

#include "lec/diagram.hpp"
#include "support.hpp"

using namespace lec;

TEST_CASE("convex_hull drops interior and collinear points") {
    const auto hull = convex_hull({{0, 0}, {1, 0}, {0, 1}, {0.2, 0.2}});
    REQUIRE(hull.size() == 3);
    CHECK(std::count_if(hull.begin(), hull.end(),
                        [](Point2 p) { return p == Point2{0.2, 0.2}; }) == 0);

    CHECK_THROWS_AS(convex_hull({{0, 0}, {1, 1}, {2, 2}}), DegenerateInput);
    CHECK_THROWS_AS(convex_hull({{0, 0}, {1, 1}}), DegenerateInput);

    // No three consecutive collinear vertices.
    const auto hull2 = convex_hull({{0, 0}, {0.5, 0}, {1, 0}, {1, 1}, {0, 1}});
    CHECK(hull2.size() == 4);
}

TEST_CASE("convex_hull contains every input point (orient2d oracle)") {
    testing::Rng rng(3);
    const auto pts = testing::random_points(rng, 100);
    const auto hull = convex_hull(pts);
    for (const Point2& p : pts) CHECK(point_in_convex_polygon(hull, p));
    // CCW and strictly convex
    for (size_t i = 0; i < hull.size(); ++i)
        CHECK(orient2d(hull[i], hull[(i + 1) % hull.size()], hull[(i + 2) % hull.size()]) == 1);
}

TEST_CASE("voronoi of 3 points has the circumcenter as its single vertex") {
    const RawVoronoi raw = voronoi(testing::reference_triangle());
    REQUIRE(raw.vertices.size() == 1);
    CHECK(raw.vertices[0].p.x == doctest::Approx(0.5));
    CHECK(raw.vertices[0].p.y == doctest::Approx(0.425));
    CHECK(raw.edges.size() == 3);
    for (const auto& e : raw.edges) CHECK(e.v1 == -1);  // all rays
    CHECK_THROWS_AS(voronoi({{0, 0}, {0.5, 0.5}, {1, 1}}), DegenerateInput);
}

TEST_CASE("voronoi handles the cocircular 2x2 grid") {
    const RawVoronoi raw = voronoi(testing::cocircular_grid());
    // Either a single degree-4 vertex (two coincident circumcenters) or two
    // distinct ones within tolerance; both triangulations are acceptable.
    REQUIRE(raw.vertices.size() == 2);
    CHECK(dist(raw.vertices[0].p, raw.vertices[1].p) < kEpsGeom);
    CHECK(dist(raw.vertices[0].p, {0.5, 0.5}) < 1e-12);
}

TEST_CASE("voronoi edges are equidistant bisector pieces (sampled invariant)") {
    testing::Rng rng(11);
    for (int inst = 0; inst < 5; ++inst) {
        const auto pts = testing::random_points(rng, 24);
        const EdgeSet es = build_edge_set(pts);
        for (const Edge& e : es.edges) {
            if (e.kind != EdgeKind::VoronoiEdge) continue;
            for (int k = 0; k < 12; ++k) {
                const double t = e.t_lo + (e.t_hi - e.t_lo) * (k + 0.5) / 12.0;
                const Point2 p = e.point_at(t);
                const double da = dist(p, pts[e.sites[0]]);
                const double db = dist(p, pts[e.sites[1]]);
                CHECK(std::fabs(da - db) < 1e-9);
                for (size_t s = 0; s < pts.size(); ++s)
                    CHECK(dist(p, pts[s]) >= da - 1e-9);
            }
        }
    }
}

TEST_CASE("hull segments record the nearest site") {
    testing::Rng rng(12);
    const auto pts = testing::random_points(rng, 32);
    const EdgeSet es = build_edge_set(pts);
    for (const Edge& e : es.edges) {
        if (e.kind != EdgeKind::HullSegment) continue;
        for (int k = 0; k < 8; ++k) {
            const double t = e.t_lo + (e.t_hi - e.t_lo) * (k + 0.5) / 8.0;
            const Point2 p = e.point_at(t);
            const double ds = dist(p, pts[e.sites[0]]);
            for (size_t s = 0; s < pts.size(); ++s) CHECK(dist(p, pts[s]) >= ds - 1e-9);
        }
    }
}

TEST_CASE("edge set of the reference triangle: 3 Voronoi edges + 6 hull segments") {
    const EdgeSet es = build_edge_set(testing::reference_triangle());
    int nv = 0, nh = 0;
    for (const Edge& e : es.edges) (e.kind == EdgeKind::VoronoiEdge ? nv : nh)++;
    CHECK(nv == 3);
    CHECK(nh == 6);

    // The bisector of the bottom pair is x = 0.5 clipped to y in [0.2, 0.425].
    bool found = false;
    for (const Edge& e : es.edges) {
        if (e.kind != EdgeKind::VoronoiEdge) continue;
        if (e.sites[0] == 0 && e.sites[1] == 1) {
            found = true;
            CHECK(e.rho == doctest::Approx(0.3));  // w = dist(p1,p2) = 0.6
            CHECK(std::min(e.geom.a.y, e.geom.b.y) == doctest::Approx(0.2));
            CHECK(std::max(e.geom.a.y, e.geom.b.y) == doctest::Approx(0.425));
            CHECK(e.geom.a.x == doctest::Approx(0.5));
        }
    }
    CHECK(found);
}

TEST_CASE("hull segments partition the hull boundary") {
    testing::Rng rng(21);
    for (int inst = 0; inst < 6; ++inst) {
        const auto pts = testing::random_points(rng, 8 + inst * 9);
        const EdgeSet es = build_edge_set(pts);
        double perimeter = 0.0;
        for (size_t i = 0; i < es.hull.size(); ++i)
            perimeter += dist(es.hull[i], es.hull[(i + 1) % es.hull.size()]);
        double segsum = 0.0;
        for (const Edge& e : es.edges)
            if (e.kind == EdgeKind::HullSegment) segsum += dist(e.geom.a, e.geom.b);
        CHECK(segsum == doctest::Approx(perimeter).epsilon(1e-9));

        // Delimiters are hull vertices or Voronoi crossings: every hull-segment
        // endpoint is either a hull vertex or shared with some Voronoi edge
        // endpoint id.
        std::set<int> voronoi_vertex_ids;
        for (const Edge& e : es.edges)
            if (e.kind == EdgeKind::VoronoiEdge) {
                voronoi_vertex_ids.insert(e.vertex_ids[0]);
                voronoi_vertex_ids.insert(e.vertex_ids[1]);
            }
        for (const Edge& e : es.edges) {
            if (e.kind != EdgeKind::HullSegment) continue;
            for (int vid : e.vertex_ids) {
                const bool is_hull_vertex = [&] {
                    for (size_t i = 0; i < es.hull.size(); ++i)
                        if (dist(e.geom.a, es.hull[i]) < 1e-9 || dist(e.geom.b, es.hull[i]) < 1e-9)
                            return true;
                    return false;
                }();
                CHECK((is_hull_vertex || voronoi_vertex_ids.count(vid) > 0));
            }
        }
    }
}

TEST_CASE("duplicate points are rejected") {
    CHECK_THROWS_AS(build_edge_set({{0.2, 0.2}, {0.8, 0.2}, {0.5, 0.8}, {0.2, 0.2}}),
                    DegenerateInput);
}
