#include "lec/pivot_index.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace lec {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kGapAbsorb = 1e-9;  // numeric slivers between adjacent domains
}  // namespace

std::optional<double> shared_endpoint_dir(const EdgeSet& es, int edge_a, int edge_b,
                                          Point2 v) {
    const Edge& A = es.edges[edge_a];
    const Edge& B = es.edges[edge_b];
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            if (A.vertex_ids[i] >= 0 && A.vertex_ids[i] == B.vertex_ids[j]) {
                const Point2 p = A.point_at(i == 0 ? A.t_lo : A.t_hi) - v;
                return normalize_angle(std::atan2(p.y, p.x));
            }
        }
    }
    return std::nullopt;
}

namespace {

struct CurveSet {
    const EdgeSet& es;
    const std::vector<PivotCurve>& curves;
    Point2 v;

    std::vector<double> crossings(int a, int b, double lo, double hi) const {
        std::vector<double> out;
        try {
            const auto shared = shared_endpoint_dir(es, a, b, v);
            for (const CurveHit& h : curve_intersections(curves[a], curves[b], shared)) {
                if (h.tangential) continue;
                for (int wrap = -1; wrap <= 1; ++wrap) {
                    const double x = h.param + wrap * kTwoPi;
                    if (x > lo && x < hi) out.push_back(x);
                }
            }
        } catch (const IdenticalCurves&) {
        }
        std::sort(out.begin(), out.end());
        return out;
    }
};

}  // namespace

std::vector<double> pair_handovers(const EdgeSet& es, const PivotCurve& a,
                                   const PivotCurve& b) {
    const auto shared = shared_endpoint_dir(es, a.edge, b.edge, a.pivot);

    std::vector<double> cand;
    try {
        for (const CurveHit& h : curve_intersections(a, b, shared)) cand.push_back(h.param);
    } catch (const IdenticalCurves&) {
        return {};
    }
    auto add_endpoint = [&](double phi, const PivotCurve& other) {
        phi = normalize_angle(phi);
        if (other.contains(phi, 1e-9)) cand.push_back(phi);
    };
    add_endpoint(a.th_start, b);
    add_endpoint(a.th_end(), b);
    add_endpoint(b.th_start, a);
    add_endpoint(b.th_end(), a);

    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end(),
                           [](double x, double y) { return std::fabs(x - y) <= 1e-10; }),
               cand.end());
    if (cand.size() >= 2 && cand.back() - cand.front() >= kTwoPi - 1e-10) cand.pop_back();

    std::vector<double> out;
    for (size_t i = 0; i < cand.size(); ++i) {
        const double phi = cand[i];
        double gap = kTwoPi;
        auto shrink = [&](double other) {
            double d = std::fabs(other - phi);
            d = std::min(d, kTwoPi - d);
            if (d > 1e-11) gap = std::min(gap, d);
        };
        for (size_t j = 0; j < cand.size(); ++j)
            if (j != i) shrink(cand[j]);
        // probes must not step across nearby domain boundaries (sliver
        // domains can be narrower than the default probe)
        shrink(normalize_angle(a.th_start));
        shrink(normalize_angle(a.th_end()));
        shrink(normalize_angle(b.th_start));
        shrink(normalize_angle(b.th_end()));
        const double delta = std::clamp(gap * 0.25, 4e-12, 1e-7);

        auto top = [&](double th) -> int {
            const bool in_a = a.contains(th);
            const bool in_b = b.contains(th);
            if (in_a && in_b) return a.value(th) >= b.value(th) ? a.edge : b.edge;
            if (in_a) return a.edge;
            if (in_b) return b.edge;
            return -1;
        };
        if (top(phi - delta) == a.edge && top(phi + delta) == b.edge) out.push_back(phi);
    }
    return out;
}

double meeting_angle(const EdgeSet& es, int edge_a, int edge_b, int m, Point2 v) {
    const PivotCurve a = project_to_pivot(arc_for_edge(es.edges[edge_a]), es, v);
    const PivotCurve b = project_to_pivot(arc_for_edge(es.edges[edge_b]), es, v);
    const std::vector<double> h = pair_handovers(es, a, b);
    if (m < 1 || static_cast<size_t>(m) > h.size()) throw NoSuchMeeting();
    return h[m - 1];
}

PivotIndex build_pivot(const std::vector<Point2>& points, Point2 v) {
    return build_pivot(build_edge_set(points), v);
}

PivotIndex build_pivot(EdgeSet es, Point2 v) {
    PivotIndex idx;
    idx.es = std::move(es);
    idx.pivot = v;
    for (const Point2& s : idx.es.sites)
        if (dist(s, v) <= kEpsGeom) idx.pivot_on_site = true;

    idx.curves.resize(idx.es.edges.size());
    std::vector<EnvCurveRef> refs;
    for (const Edge& e : idx.es.edges) {
        try {
            const PivotCurve c = project_to_pivot(arc_for_edge(e), idx.es, v);
            idx.curves[e.id] = c;
            if (c.th_end() <= kTwoPi) {
                refs.push_back({e.id, c.th_start, c.th_end()});
            } else {  // wrapping domain: split at the seam
                refs.push_back({e.id, c.th_start, kTwoPi});
                refs.push_back({e.id, 0.0, c.th_end() - kTwoPi});
            }
        } catch (const CollinearPivot&) {
            const ArcByT arc = arc_for_edge(e);
            const double t =
                (arc.value(arc.t_lo) >= arc.value(arc.t_hi)) ? arc.t_lo : arc.t_hi;
            CollinearEdgeRec rec;
            rec.edge = e.id;
            const Point2 d = e.line.direction();
            rec.dir = normalize_angle(std::atan2(d.y, d.x));
            if (rec.dir >= kPi) rec.dir -= kPi;
            rec.p_best = e.point_at(t);
            rec.v_best = arc.value(t);
            idx.collinear.push_back(rec);
        }
    }

    CurveSet cs{idx.es, idx.curves, v};
    EnvelopeOps ops;
    ops.value = [&idx](int id, double th) { return idx.curves[id].value(th); };
    ops.crossings = [&cs](int a, int b, double lo, double hi) {
        return cs.crossings(a, b, lo, hi);
    };
    idx.env = upper_envelope(refs, ops, 0.0, kTwoPi);
    absorb_envelope_slivers(idx.env, kGapAbsorb);

    // Canonical rotation: start right after the widest uncovered gap, or at
    // the seam when the whole circle is covered.
    struct Piece {
        double lo, hi;
        int id;
    };
    std::vector<Piece> pieces;
    for (size_t i = 0; i < idx.env.ids.size(); ++i)
        pieces.push_back({idx.env.breaks[i], idx.env.breaks[i + 1], idx.env.ids[i]});

    const size_t np = pieces.size();
    auto nxt = [np](size_t i) { return (i + 1) % np; };
    auto prv = [np](size_t i) { return (i + np - 1) % np; };

    size_t anchor = np;  // first piece of the rotated order
    double gap_w = -1.0;
    bool any_curve = false;
    for (size_t i = 0; i < np; ++i) any_curve |= pieces[i].id >= 0;
    if (any_curve) {
        for (size_t i = 0; i < np; ++i) {
            if (pieces[i].id < 0 && pieces[prv(i)].id >= 0) {  // circular run start
                double w = 0.0;
                size_t j = i;
                while (pieces[j].id < 0) {
                    w += pieces[j].hi - pieces[j].lo;
                    j = nxt(j);
                }
                if (w > gap_w) {
                    gap_w = w;
                    anchor = j;
                }
            }
        }
        if (anchor == np) anchor = 0;  // no gap anywhere: start at the seam
    }

    std::vector<Piece> rotated;
    if (any_curve) {
        for (size_t k = 0; k < np; ++k) {
            const Piece& p = pieces[(anchor + k) % np];
            if (p.id >= 0) rotated.push_back(p);
        }
        // A piece split by the 0/2pi seam reunites across the rotation ends.
        if (gap_w < 0.0 && rotated.size() >= 2 && rotated.front().id == rotated.back().id) {
            rotated.front().lo = rotated.back().lo - kTwoPi;
            rotated.pop_back();
        }
    }

    idx.seq.ids.clear();
    if (!rotated.empty()) {
        idx.seq.start = normalize_angle(rotated.front().lo);
        double extent = 0.0;
        for (size_t k = 0; k < rotated.size(); ++k) {
            const Piece& p = rotated[k];
            extent += p.hi - p.lo;
            if (!idx.seq.ids.empty() && idx.seq.ids.back() == p.id) {
                // seam-split piece reuniting mid-sequence
                if (!idx.seq.transitions.empty()) idx.seq.transitions.pop_back();
            } else {
                idx.seq.ids.push_back(p.id);
            }
            if (k + 1 < rotated.size()) idx.seq.transitions.push_back(normalize_angle(p.hi));
        }
        idx.seq.extent = std::min(extent, kTwoPi);
    }

    // Meeting numbers: rank of each transition among the pair's handovers.
    for (size_t i = 0; i + 1 < idx.seq.ids.size(); ++i) {
        const int ea = idx.seq.ids[i];
        const int eb = idx.seq.ids[i + 1];
        const std::vector<double> hs = pair_handovers(idx.es, idx.curves[ea], idx.curves[eb]);
        const double tr = idx.seq.transitions[i];
        int best = -1;
        double best_d = 1e9;
        for (size_t k = 0; k < hs.size(); ++k) {
            double d = std::fabs(hs[k] - tr);
            d = std::min(d, kTwoPi - d);
            if (d < best_d) {
                best_d = d;
                best = static_cast<int>(k);
            }
        }
        // nearest-rank, matching the incremental maintenance exactly
        idx.seq.meets.push_back(best >= 0 ? static_cast<uint8_t>(best + 1) : 0);
        (void)best_d;
    }
    return idx;
}

namespace {

MaybeAnswer ray_answer(const PivotIndex& idx, double theta, uint64_t* comparisons) {
    const double th = normalize_angle(theta);
    Envelope::Hit hit;
    try {
        hit = idx.env.lookup(th, comparisons);
    } catch (const OutOfDomain&) {
        return std::nullopt;
    }
    if (hit.id < 0) return std::nullopt;
    const PivotCurve& c = idx.curves[hit.id];
    return LecAnswer{c.point_at(th), c.value(th), hit.id, false};
}

void better(MaybeAnswer& best, const MaybeAnswer& cand) {
    if (!cand) return;
    if (!best || cand->radius > best->radius) best = cand;
}

}  // namespace

MaybeAnswer query_pivot(const PivotIndex& idx, double theta, uint64_t* comparisons) {
    MaybeAnswer best;
    better(best, ray_answer(idx, theta, comparisons));
    better(best, ray_answer(idx, theta + kPi, comparisons));

    // A query line containing a collinear-degenerate edge: its best endpoint
    // competes with the envelope answer.
    if (!idx.collinear.empty()) {
        double dir = normalize_angle(theta);
        if (dir >= kPi) dir -= kPi;
        for (const CollinearEdgeRec& rec : idx.collinear) {
            if (std::fabs(rec.dir - dir) <= 1e-9 ||
                std::fabs(std::fabs(rec.dir - dir) - kPi) <= 1e-9) {
                better(best, LecAnswer{rec.p_best, rec.v_best, rec.edge, false});
            }
        }
    }
    return best;
}

namespace {

MaybeAnswer ray_by_sequence(const EdgeSet& es, const LandingSequence& seq, Point2 v,
                            double theta, uint64_t* comparisons,
                            std::vector<std::optional<PivotCurve>>& cache) {
    if (seq.ids.empty()) return std::nullopt;
    auto curve = [&](int edge) -> const PivotCurve& {
        if (!cache[edge])
            cache[edge] = project_to_pivot(arc_for_edge(es.edges[edge]), es, v);
        return *cache[edge];
    };

    const double th = normalize_angle(theta);
    double rel = th - seq.start;
    if (rel < 0.0) rel += kTwoPi;
    if (rel > seq.extent + 1e-9) return std::nullopt;

    size_t lo = 0, hi = seq.ids.size() - 1;
    while (lo < hi) {
        const size_t mid = lo + (hi - lo) / 2;
        if (comparisons) ++*comparisons;
        const double tr =
            meeting_angle(es, seq.ids[mid], seq.ids[mid + 1], seq.meets[mid], v);
        double rel_tr = tr - seq.start;
        if (rel_tr < 0.0) rel_tr += kTwoPi;
        if (rel < rel_tr)
            hi = mid;
        else
            lo = mid + 1;
    }
    const PivotCurve& c = curve(seq.ids[lo]);
    if (!c.contains(th, 1e-9)) return std::nullopt;
    return LecAnswer{c.point_at(th), c.value(th), seq.ids[lo], false};
}

}  // namespace

MaybeAnswer query_by_sequence(const EdgeSet& es, const LandingSequence& seq, Point2 v,
                              double theta, uint64_t* comparisons) {
    std::vector<std::optional<PivotCurve>> cache(es.edges.size());
    MaybeAnswer best;
    better(best, ray_by_sequence(es, seq, v, theta, comparisons, cache));
    better(best, ray_by_sequence(es, seq, v, theta + kPi, comparisons, cache));
    return best;
}

}  // namespace lec
