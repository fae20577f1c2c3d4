#pragma once

#include "lec/answer.hpp"
#include "lec/clearance.hpp"
#include "lec/envelope.hpp"

namespace lec {

struct NoSuchMeeting : std::runtime_error {
    NoSuchMeeting() : std::runtime_error("adjacent pair has fewer meetings than requested") {}
};

// Edge whose supporting line passes through the pivot; its clearance is
// maximized at an endpoint, so only the endpoints are ever consulted.
struct CollinearEdgeRec {
    int edge = -1;
    double dir = 0.0;  // direction angle of the line in [0, pi)
    Point2 p_best{};
    double v_best = 0.0;
};

// Landing sequence with per-adjacency meeting numbers, rotated so that the
// covered angular range is contiguous starting at `start`.
struct LandingSequence {
    double start = 0.0;   // absolute angle of the first piece's beginning
    double extent = 0.0;  // total covered angle (<= 2*pi)
    std::vector<int> ids;
    std::vector<uint8_t> meets;        // meets[i]: pair (ids[i], ids[i+1])
    std::vector<double> transitions;   // absolute angles, one per adjacency
};

struct PivotIndex {
    EdgeSet es;
    Point2 pivot{};
    bool pivot_on_site = false;
    std::vector<PivotCurve> curves;  // by edge id; edge == -1 when collinear
    std::vector<CollinearEdgeRec> collinear;
    Envelope env;  // over [0, 2*pi)
    LandingSequence seq;
};

PivotIndex build_pivot(const std::vector<Point2>& points, Point2 v);
PivotIndex build_pivot(EdgeSet es, Point2 v);

// Envelope lookups at theta and theta+pi (a line is two rays); the better
// answer wins, with collinear-edge records consulted on direction match.
MaybeAnswer query_pivot(const PivotIndex& idx, double theta, uint64_t* comparisons = nullptr);

// Angles at which curve `a` hands the (pairwise) upper envelope over to `b`:
// sign-changing crossings plus domain-extremity handovers, ascending in
// [0, 2*pi). At most 3 for quartic-crossing curves.
std::vector<double> pair_handovers(const EdgeSet& es, const PivotCurve& a,
                                   const PivotCurve& b);

// The m-th (1-based) a->b handover angle under pivot v; throws NoSuchMeeting.
double meeting_angle(const EdgeSet& es, int edge_a, int edge_b, int m, Point2 v);

// Binary search over the landing sequence alone: each comparison recomputes
// the adjacency's transition angle from its meeting number in O(1). Must
// agree with query_pivot on the same instance.
MaybeAnswer query_by_sequence(const EdgeSet& es, const LandingSequence& seq, Point2 v,
                              double theta, uint64_t* comparisons = nullptr);

// Shared-endpoint direction (for pinned-root deflation), if the edges share
// a vertex: the angle of that vertex as seen from v.
std::optional<double> shared_endpoint_dir(const EdgeSet& es, int edge_a, int edge_b,
                                          Point2 v);

}  // namespace lec
