#pragma once

#include "lec/answer.hpp"
#include "lec/clearance.hpp"
#include "lec/envelope.hpp"

namespace lec {

// Index for horizontal query lines y = y_c: the upper envelope of every
// edge's clearance curve projected onto the y axis, answering in O(log n).
struct HorizontalIndex {
    EdgeSet es;
    std::vector<YCurve> curves;  // indexed by edge id
    Envelope env;
    struct DegenRow {            // horizontal edges, keyed by their exact y
        double y;
        int edge;
        double value;
        Point2 center;           // max-clearance endpoint
    };
    std::vector<DegenRow> degen;  // sorted by y
    double y_lo = 0.0;
    double y_hi = 0.0;
};

HorizontalIndex build_horizontal(const std::vector<Point2>& points);
HorizontalIndex build_horizontal(EdgeSet es);

// Envelope lookup at y_c; outside the hull y-range returns nullopt. The
// `comparisons` counter, when given, accumulates binary-search steps.
MaybeAnswer query_horizontal(const HorizontalIndex& idx, double y,
                             uint64_t* comparisons = nullptr);

}  // namespace lec
