#include <doctest.h>

#include "lec/clearance.hpp"
#include "lec/oracle.hpp"
#include "support.hpp"

using namespace lec;

namespace {
const double kPi = 3.14159265358979323846;

const Edge* find_voronoi(const EdgeSet& es, int a, int b) {
    for (const Edge& e : es.edges)
        if (e.kind == EdgeKind::VoronoiEdge && e.sites[0] == std::min(a, b) &&
            e.sites[1] == std::max(a, b))
            return &e;
    return nullptr;
}
}  // namespace

TEST_CASE("arc of the bottom bisector matches the worked example") {
    const EdgeSet es = build_edge_set(testing::reference_triangle());
    const Edge* e = find_voronoi(es, 0, 1);
    REQUIRE(e != nullptr);
    const ArcByT arc = arc_for_edge(*e);
    CHECK(arc.w() == doctest::Approx(0.6));
    CHECK(e->foot.x == doctest::Approx(0.5));
    CHECK(e->foot.y == doctest::Approx(0.2));
    const double tl = std::min(std::fabs(arc.t_lo), std::fabs(arc.t_hi));
    const double th = std::max(std::fabs(arc.t_lo), std::fabs(arc.t_hi));
    CHECK(tl == doctest::Approx(0.0));
    CHECK(th == doctest::Approx(0.225));
    CHECK(arc.value(0.225) == doctest::Approx(0.375));
    CHECK(arc.value(0.0) == doctest::Approx(0.3));  // w/2 at the foot
}

TEST_CASE("hull segment incident to its own site degenerates to |t|") {
    const EdgeSet es = build_edge_set(testing::reference_triangle());
    for (const Edge& e : es.edges) {
        if (e.kind != EdgeKind::HullSegment) continue;
        // All hull segments of a triangle instance touch their own site.
        CHECK(e.rho == doctest::Approx(0.0).epsilon(1e-12));
        const ArcByT arc = arc_for_edge(e);
        CHECK(arc.value(arc.t_hi) == doctest::Approx(std::fabs(arc.t_hi)));
    }
}

TEST_CASE("clearance curves match brute force at random samples") {
    testing::Rng rng(5);
    int checked = 0;
    for (int inst = 0; inst < 4; ++inst) {
        const auto pts = testing::random_points(rng, 16 + 8 * inst);
        const EdgeSet es = build_edge_set(pts);
        for (int k = 0; k < 2500; ++k) {
            const Edge& e = es.edges[rng.uniform_int(0, static_cast<int>(es.edges.size()) - 1)];
            const ArcByT arc = arc_for_edge(e);
            const double t = rng.uniform(arc.t_lo, arc.t_hi);
            const Point2 p = e.point_at(t);
            CHECK(arc.value(t) == doctest::Approx(clearance_at(pts, p)).epsilon(1e-9));
            ++checked;
        }
    }
    CHECK(checked == 10000);
}

TEST_CASE("project_to_y reproduces the worked quadratic") {
    const EdgeSet es = build_edge_set(testing::reference_triangle());
    const Edge* e = find_voronoi(es, 0, 1);
    REQUIRE(e != nullptr);
    const YCurve c = project_to_y(arc_for_edge(*e), es);
    REQUIRE(!c.degenerate);
    CHECK(c.y_lo == doctest::Approx(0.2));
    CHECK(c.y_hi == doctest::Approx(0.425));
    // q(y) = (y - 0.2)^2 + 0.09
    CHECK(c.q(0.425) == doctest::Approx(0.425 * 0.425 - 2 * 0.2 * 0.425 + 0.04 + 0.09));
    CHECK(c.value(0.425) == doctest::Approx(0.375));
    CHECK(c.value(c.y_lo) == doctest::Approx(arc_for_edge(*e).value(0.0)));
}

TEST_CASE("horizontal edges project to degenerate y-records") {
    // Vertically stacked pair makes a horizontal Voronoi edge at y = 0.5.
    const std::vector<Point2> pts{{0.5, 0.3}, {0.5, 0.7}, {0.15, 0.5}, {0.85, 0.5}};
    const EdgeSet es = build_edge_set(pts);
    const Edge* e = find_voronoi(es, 0, 1);
    REQUIRE(e != nullptr);
    const YCurve c = project_to_y(arc_for_edge(*e), es);
    REQUIRE(c.degenerate);
    CHECK(c.degen_y == doctest::Approx(0.5));
    const ArcByT arc = arc_for_edge(*e);
    CHECK(c.degen_value ==
          doctest::Approx(std::max(arc.value(arc.t_lo), arc.value(arc.t_hi))));
}

TEST_CASE("project_to_pivot worked example: value at pi/4 is 0.353553") {
    const EdgeSet es = build_edge_set(testing::reference_triangle());
    const Edge* e = find_voronoi(es, 0, 2);  // bisector of (0.2,0.2) and (0.5,0.8)
    REQUIRE(e != nullptr);
    const PivotCurve c = project_to_pivot(arc_for_edge(*e), es, {0, 0});
    CHECK(c.contains(kPi / 4));
    CHECK(c.value(kPi / 4) == doctest::Approx(0.25 * std::sqrt(2.0)));
    const Point2 hit = c.point_at(kPi / 4);
    CHECK(hit.x == doctest::Approx(0.45));
    CHECK(hit.y == doctest::Approx(0.45));
}

TEST_CASE("pivot curve domain endpoints are the segment endpoint angles") {
    const EdgeSet es = build_edge_set(testing::reference_triangle());
    const Edge* e = find_voronoi(es, 0, 1);  // x = 0.5, y in [0.2, 0.425]
    REQUIRE(e != nullptr);
    const PivotCurve c = project_to_pivot(arc_for_edge(*e), es, {0, 0});
    CHECK(c.th_start == doctest::Approx(std::atan2(0.2, 0.5)));
    CHECK(c.th_end() == doctest::Approx(std::atan2(0.425, 0.5)));
    // Values at the domain ends equal the arc clearance at the edge ends.
    const ArcByT arc = arc_for_edge(*e);
    const double lo = std::min(arc.value(arc.t_lo), arc.value(arc.t_hi));
    const double hi = std::max(arc.value(arc.t_lo), arc.value(arc.t_hi));
    CHECK(c.value(c.th_start) == doctest::Approx(lo));
    CHECK(c.value(c.th_end()) == doctest::Approx(hi));
}

TEST_CASE("pivot curve slope form matches direct evaluation") {
    const EdgeSet es = build_edge_set(testing::reference_triangle());
    const Edge* e = find_voronoi(es, 0, 2);
    REQUIRE(e != nullptr);
    const PivotCurve c = project_to_pivot(arc_for_edge(*e), es, {0, 0});
    const auto sf = c.slope_form();
    REQUIRE(sf.has_value());
    const auto [a1, a2, a3, a4] = *sf;
    for (double th = c.th_start + 1e-3; th < c.th_end(); th += 0.01) {
        const double m = std::tan(th);
        const double d2 = (a1 * m * m + a2 * m + a3) / ((m - a4) * (m - a4));
        CHECK(std::sqrt(d2) == doctest::Approx(c.value(th)).epsilon(1e-9));
    }
}

TEST_CASE("collinear pivot is rejected") {
    const EdgeSet es = build_edge_set(testing::reference_triangle());
    const Edge* e = find_voronoi(es, 0, 1);  // supporting line x = 0.5
    REQUIRE(e != nullptr);
    CHECK_THROWS_AS(project_to_pivot(arc_for_edge(*e), es, {0.5, 0.0}), CollinearPivot);
}

TEST_CASE("ycurve intersections: trivial and disjoint") {
    YCurve a, b;
    a.edge = 0;
    a.qa = 1;
    a.qb = 0;
    a.qc = 1;
    a.y_lo = 0;
    a.y_hi = 2;  // y^2 + 1
    b.edge = 1;
    b.qa = 2;
    b.qb = 0;
    b.qc = 0;
    b.y_lo = 0;
    b.y_hi = 2;  // 2 y^2
    const auto hits = curve_intersections(a, b);
    REQUIRE(hits.size() == 1);
    CHECK(hits[0].param == doctest::Approx(1.0));

    b.y_lo = 3;
    b.y_hi = 4;
    CHECK(curve_intersections(a, b).empty());

    CHECK_THROWS_AS(curve_intersections(a, a), IdenticalCurves);
}

TEST_CASE("pivot curve intersections validated by dense sampling") {
    testing::Rng rng(17);
    int max_crossings = 0;
    for (int inst = 0; inst < 6; ++inst) {
        const auto pts = testing::random_points(rng, 14);
        const EdgeSet es = build_edge_set(pts);
        const Point2 v{rng.uniform(0, 1), 0.0};
        std::vector<PivotCurve> curves;
        for (const Edge& e : es.edges) {
            try {
                curves.push_back(project_to_pivot(arc_for_edge(e), es, v));
            } catch (const CollinearPivot&) {
            }
        }
        for (int trial = 0; trial < 300; ++trial) {
            const auto& a = curves[rng.uniform_int(0, static_cast<int>(curves.size()) - 1)];
            const auto& b = curves[rng.uniform_int(0, static_cast<int>(curves.size()) - 1)];
            if (a.edge == b.edge) continue;
            const int va = es.edges[a.edge].vertex_ids[0], vb = es.edges[a.edge].vertex_ids[1];
            const int wa = es.edges[b.edge].vertex_ids[0], wb = es.edges[b.edge].vertex_ids[1];
            std::optional<double> shared;
            Point2 shared_pt;
            if (va == wa || va == wb) shared_pt = es.edges[a.edge].point_at(es.edges[a.edge].t_lo);
            if (vb == wa || vb == wb) shared_pt = es.edges[a.edge].point_at(es.edges[a.edge].t_hi);
            if (va == wa || va == wb || vb == wa || vb == wb)
                shared = std::atan2(shared_pt.y - v.y, shared_pt.x - v.x);

            const auto dom = common_domain(a, b);
            std::vector<CurveHit> hits;
            try {
                hits = curve_intersections(a, b, shared);
            } catch (const IdenticalCurves&) {
                continue;
            }
            max_crossings = std::max(max_crossings, static_cast<int>(hits.size()));
            CHECK(hits.size() <= 4);
            for (const CurveHit& h : hits) {
                CHECK(std::fabs(a.value(h.param) - b.value(h.param)) < 1e-8);
            }
            if (!dom) {
                CHECK(hits.empty());
                continue;
            }
            // No sign change of (value_a - value_b) may be missed between
            // consecutive reported crossings.
            const auto [lo, width] = *dom;
            const int kSamples = 400;
            double prev_sign = 0.0;
            double prev_th = lo;
            for (int k = 0; k <= kSamples; ++k) {
                const double th = lo + width * k / kSamples;
                double diff = a.value(th) - b.value(th);
                if (shared) {
                    // Ignore the neighborhood of the shared junction point.
                    double dsh = std::fabs(normalize_angle(th) - normalize_angle(*shared));
                    dsh = std::min(dsh, 2 * kPi - dsh);
                    if (dsh < 1e-3) continue;
                }
                const double sign = (diff > 1e-7) ? 1.0 : (diff < -1e-7 ? -1.0 : 0.0);
                if (prev_sign != 0.0 && sign != 0.0 && sign != prev_sign) {
                    // There must be a reported crossing in (prev_th, th).
                    bool covered = false;
                    for (const CurveHit& h : hits) {
                        const double hn = normalize_angle(h.param);
                        for (int wrap = -1; wrap <= 1; ++wrap) {
                            const double cand = hn + wrap * 2 * kPi;
                            if (cand >= prev_th - 1e-9 && cand <= th + 1e-9) covered = true;
                        }
                    }
                    CHECK(covered);
                }
                if (sign != 0.0) {
                    prev_sign = sign;
                    prev_th = th;
                }
            }
        }
    }
    MESSAGE("max pivot-curve crossings observed: ", max_crossings);
}
