#include "lec/horizontal_index.hpp"

#include <algorithm>

namespace lec {

HorizontalIndex build_horizontal(const std::vector<Point2>& points) {
    return build_horizontal(build_edge_set(points));
}

HorizontalIndex build_horizontal(EdgeSet es) {
    HorizontalIndex idx;
    idx.es = std::move(es);

    idx.y_lo = idx.es.hull[0].y;
    idx.y_hi = idx.es.hull[0].y;
    for (const Point2& p : idx.es.hull) {
        idx.y_lo = std::min(idx.y_lo, p.y);
        idx.y_hi = std::max(idx.y_hi, p.y);
    }

    idx.curves.reserve(idx.es.edges.size());
    std::vector<EnvCurveRef> refs;
    for (const Edge& e : idx.es.edges) {
        const ArcByT arc = arc_for_edge(e);
        idx.curves.push_back(project_to_y(arc, idx.es));
        const YCurve& c = idx.curves.back();
        if (c.degenerate) {
            const double t =
                (arc.value(arc.t_lo) >= arc.value(arc.t_hi)) ? arc.t_lo : arc.t_hi;
            idx.degen.push_back({c.degen_y, e.id, c.degen_value, e.point_at(t)});
        } else {
            refs.push_back({e.id, c.y_lo, c.y_hi});
        }
    }
    std::sort(idx.degen.begin(), idx.degen.end(),
              [](const auto& a, const auto& b) { return a.y < b.y; });

    EnvelopeOps ops;
    ops.value = [&idx](int id, double y) { return idx.curves[id].value(y); };
    ops.crossings = [&idx](int a, int b, double lo, double hi) {
        std::vector<double> out;
        try {
            for (const CurveHit& h : curve_intersections(idx.curves[a], idx.curves[b]))
                if (h.param > lo && h.param < hi && !h.tangential) out.push_back(h.param);
        } catch (const IdenticalCurves&) {
            // resolved by the merge's lower-id tie break
        }
        return out;
    };
    idx.env = upper_envelope(refs, ops, idx.y_lo, idx.y_hi);
    return idx;
}

MaybeAnswer query_horizontal(const HorizontalIndex& idx, double y, uint64_t* comparisons) {
    if (y < idx.y_lo || y > idx.y_hi) return std::nullopt;

    MaybeAnswer best;
    const Envelope::Hit hit = idx.env.lookup(y, comparisons);
    if (hit.id >= 0) {
        const YCurve& c = idx.curves[hit.id];
        const Edge& e = idx.es.edges[hit.id];
        const double t = (y - e.foot.y) / e.line.direction().y;
        best = LecAnswer{{e.foot.x + t * e.line.direction().x, y}, c.value(y), hit.id, false};
    }

    // A query lying exactly on a horizontal edge compares against the tabled
    // whole-edge maximum (binary search keeps the degenerate path O(log n)).
    auto it = std::lower_bound(idx.degen.begin(), idx.degen.end(), y - kEpsGeom,
                               [](const auto& row, double v) { return row.y < v; });
    for (; it != idx.degen.end() && it->y <= y + kEpsGeom; ++it) {
        if (!best || it->value > best->radius)
            best = LecAnswer{it->center, it->value, it->edge, false};
    }
    return best;
}

}  // namespace lec
