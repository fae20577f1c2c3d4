#include "lec/oracle.hpp"

#include <limits>

namespace lec {

double clearance_at(const std::vector<Point2>& points, Point2 p) {
    double best = std::numeric_limits<double>::max();
    for (const Point2& q : points) best = std::min(best, dist(p, q));
    return best;
}

MaybeAnswer oracle_query(const EdgeSet& es, const Line2& line) {
    MaybeAnswer best;
    auto consider = [&](Point2 c, int edge_id) {
        const double r = clearance_at(es.sites, c);
        if (!best || r > best->radius) {
            best = LecAnswer{c, r, edge_id, false};
        } else if (r == best->radius) {
            best->tie = true;
            if (edge_id < best->edge_id ||
                (edge_id == best->edge_id &&
                 (c.x < best->center.x || (c.x == best->center.x && c.y < best->center.y)))) {
                const bool tie = true;
                best = LecAnswer{c, r, edge_id, tie};
            }
        }
    };

    for (const Edge& e : es.edges) {
        const LineSegHit hit = line_segment_intersection(line, e.geom);
        if (hit.kind == LineSegHit::At) {
            consider(hit.p, e.id);
        } else if (hit.kind == LineSegHit::Overlap) {
            consider(e.geom.a, e.id);
            consider(e.geom.b, e.id);
        }
    }
    return best;
}

}  // namespace lec
