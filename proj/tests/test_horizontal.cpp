#include <doctest.h>

#include "lec/horizontal_index.hpp"
#include "lec/oracle.hpp"
#include "support.hpp"

using namespace lec;

TEST_CASE("horizontal index worked example") {
    const HorizontalIndex idx = build_horizontal(testing::reference_triangle());
    CHECK(idx.y_lo == doctest::Approx(0.2));
    CHECK(idx.y_hi == doctest::Approx(0.8));

    const MaybeAnswer ans = query_horizontal(idx, 0.425);
    REQUIRE(ans.has_value());
    CHECK(ans->center.x == doctest::Approx(0.5));
    CHECK(ans->center.y == doctest::Approx(0.425));
    CHECK(ans->radius == doctest::Approx(0.375));

    CHECK_FALSE(query_horizontal(idx, 0.95).has_value());
    CHECK_FALSE(query_horizontal(idx, 0.15).has_value());
}

TEST_CASE("all non-degenerate curves participate in the envelope input") {
    const HorizontalIndex idx = build_horizontal(testing::reference_triangle());
    CHECK(idx.curves.size() == idx.es.edges.size());
    size_t degen = idx.degen.size();
    size_t normal = 0;
    for (const auto& c : idx.curves)
        if (!c.degenerate) ++normal;
    CHECK(normal + degen == idx.es.edges.size());
    CHECK(ds_validate(idx.env.piece_sequence(), 4));
}

TEST_CASE("horizontal queries match the oracle on random instances") {
    testing::Rng rng(51);
    for (int inst = 0; inst < 10; ++inst) {
        const auto pts = testing::random_points(rng, 5 + inst * 6);
        const EdgeSet es = build_edge_set(pts);
        const HorizontalIndex idx = build_horizontal(es);
        CHECK(ds_validate(idx.env.piece_sequence(), 4));
        for (int q = 0; q < 100; ++q) {
            const double y = rng.uniform(0, 1);
            const MaybeAnswer fast = query_horizontal(idx, y);
            const MaybeAnswer ref = oracle_query(es, Line2::horizontal(y));
            if (!ref) {
                CHECK(!fast);
                continue;
            }
            REQUIRE(fast.has_value());
            CHECK(fast->radius == doctest::Approx(ref->radius).epsilon(1e-9));
            CHECK(clearance_at(pts, fast->center) >= fast->radius - 1e-9);
            CHECK(fast->center.y == doctest::Approx(y));
            const Edge& e = idx.es.edges[fast->edge_id];
            CHECK(std::fabs(e.line.eval(fast->center)) < 1e-9);
        }
    }
}

TEST_CASE("query exactly on a horizontal edge consults the degenerate table") {
    const std::vector<Point2> pts{{0.5, 0.3}, {0.5, 0.7}, {0.15, 0.5}, {0.85, 0.5}};
    const EdgeSet es = build_edge_set(pts);
    const HorizontalIndex idx = build_horizontal(es);
    REQUIRE(!idx.degen.empty());

    const MaybeAnswer fast = query_horizontal(idx, 0.5);
    const MaybeAnswer ref = oracle_query(es, Line2::horizontal(0.5));
    REQUIRE(fast.has_value());
    REQUIRE(ref.has_value());
    CHECK(fast->radius == doctest::Approx(ref->radius).epsilon(1e-9));
}

TEST_CASE("lookup comparison count stays logarithmic") {
    testing::Rng rng(52);
    const auto pts = testing::random_points(rng, 256);
    const HorizontalIndex idx = build_horizontal(pts);
    uint64_t comparisons = 0;
    const int kQ = 500;
    for (int q = 0; q < kQ; ++q) query_horizontal(idx, rng.uniform(0, 1), &comparisons);
    const double per = static_cast<double>(comparisons) / kQ;
    CHECK(per <= 3.0 * std::log2(static_cast<double>(idx.env.piece_count())));
}
