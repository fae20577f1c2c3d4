#pragma once

#include <array>
#include <map>
#include <optional>

#include "lec/answer.hpp"
#include "lec/persistent_seq.hpp"
#include "lec/pivot_index.hpp"

namespace lec {

// Two distinct events coincided in both abscissa and angle (four or more
// simultaneous largest-empty-circle centers on one line). The caller must
// perturb the implicated points and rebuild.
struct DegeneracyDetected : std::runtime_error {
    explicit DegeneracyDetected(std::vector<int> sites)
        : std::runtime_error("coincident events: degenerate input"),
          implicated(std::move(sites)) {}
    std::vector<int> implicated;
};

struct GEvent {
    enum Kind : uint8_t { Insertion = 0, Deletion = 1, Adjust = 2 };
    enum Case : uint8_t { A1 = 0, A2 = 1, B1 = 2, EndpointCross = 3, None = 4 };
    enum Source : uint8_t {
        SrcCollapse = 0,   // pivot crosses an edge's supporting line
        SrcTangency = 1,   // two curves become tangent (crossing pair born/dies)
        SrcJunction = 2,   // crossing passes through a shared-endpoint angle
        SrcEndpoint = 3,   // a curve's domain endpoint crosses another curve
        SrcConcurrency = 4, // three curves equal at one angle
        SrcVertexSwap = 5   // equal-clearance junctions pass each other
    };

    double x = 0.0;      // pivot abscissa of the event
    double angle = 0.0;  // sweep angle at which it occurs
    Source source = SrcTangency;
    Kind kind = Adjust;       // filled in during application
    Case case_tag = None;     // filled in during application
    std::vector<int> involved;  // arcs defining the event (2 or 3; collapse: group)
    std::vector<int> arcs;      // the inserted/deleted sequence I (application)
    std::vector<SpliceOp> ops;  // persistent update, replayable on load
};

// All abscissas in (0, length) where the landing sequence of pivots (c, 0)
// changes, ascending with (x, angle, involved) tie-break. The edge set must
// already be in side coordinates: everything strictly above the x axis.
// Throws DegeneracyDetected on coincident distinct events.
std::vector<GEvent> enumerate_events(const EdgeSet& es, double length);

struct SideIndex {
    EdgeSet es;     // side-frame copy of the edge set
    double length = 0.0;
    std::vector<GEvent> events;
    std::vector<SeqItem> initial;  // landing sequence at the side origin
    PersistentSeq versions;        // version i = initial + events[0..i-1]
};

struct GeneralIndex {
    std::vector<Point2> points;  // as indexed (after any perturbation)
    EdgeSet es;                  // original frame
    double square_lo = 0.0;
    double square_hi = 1.0;
    uint64_t seed = 0;
    int perturb_rounds = 0;      // how many perturbation retries were needed
    std::array<SideIndex, 4> sides;
    // canonical supporting line -> edges on it (collinear query table)
    std::map<std::array<double, 3>, std::vector<int>> collinear;
};

// Preprocesses P for arbitrary query lines. On DegeneracyDetected the
// implicated points are perturbed deterministically (seeded) and the build
// retries, up to 3 rounds.
GeneralIndex build_general(const std::vector<Point2>& points, double square_lo = 0.0,
                           double square_hi = 1.0, uint64_t seed = 0x1ecull);

MaybeAnswer query_general(const GeneralIndex& idx, const Line2& line,
                          uint64_t* comparisons = nullptr);

// Deterministic perturbation of the implicated points: offsets of magnitude
// 1e-9, direction from the seeded generator, clamped inside the square.
std::vector<Point2> perturb(const std::vector<Point2>& points,
                            const std::vector<int>& implicated, uint64_t seed,
                            double square_lo, double square_hi);

// Side-frame transform (square side `k` becomes the x-axis segment [0,L]).
Point2 to_side_frame(int side, Point2 p, double lo, double hi);
Point2 from_side_frame(int side, Point2 p, double lo, double hi);
EdgeSet edge_set_to_side_frame(const EdgeSet& es, int side, double lo, double hi);

}  // namespace lec
