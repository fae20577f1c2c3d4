// Build and query of the arbitrary-query-line index: per square side, a
// sorted event list plus a partially persistent landing sequence, one
// version per event. Updates are derived by recomputing the envelope on a
// small piece window around the event and splicing the difference.

#include "lec/general_index.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <set>
#include <cstdio>

namespace lec {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

Point2 to_side_frame(int side, Point2 p, double lo, double hi) {
    switch (side & 3) {
        case 0: return {p.x - lo, p.y - lo};
        case 1: return {p.y - lo, hi - p.x};
        case 2: return {hi - p.x, hi - p.y};
        default: return {hi - p.y, p.x - lo};
    }
}

Point2 from_side_frame(int side, Point2 q, double lo, double hi) {
    switch (side & 3) {
        case 0: return {q.x + lo, q.y + lo};
        case 1: return {hi - q.y, q.x + lo};
        case 2: return {hi - q.x, hi - q.y};
        default: return {q.y + lo, hi - q.x};
    }
}

static Point2 dir_to_side_frame(int side, Point2 d) {
    switch (side & 3) {
        case 0: return d;
        case 1: return {d.y, -d.x};
        case 2: return {-d.x, -d.y};
        default: return {-d.y, d.x};
    }
}

EdgeSet edge_set_to_side_frame(const EdgeSet& es, int side, double lo, double hi) {
    EdgeSet out;
    out.vertex_count = es.vertex_count;
    out.sites.reserve(es.sites.size());
    for (Point2 p : es.sites) out.sites.push_back(to_side_frame(side, p, lo, hi));
    out.hull.reserve(es.hull.size());
    for (Point2 p : es.hull) out.hull.push_back(to_side_frame(side, p, lo, hi));
    out.vertices.reserve(es.vertices.size());
    for (Point2 p : es.vertices) out.vertices.push_back(to_side_frame(side, p, lo, hi));

    out.edges = es.edges;
    for (Edge& e : out.edges) {
        e.geom.a = out.vertices[e.vertex_ids[0]];
        e.geom.b = out.vertices[e.vertex_ids[1]];
        e.line = Line2::through(e.geom.a, e.geom.b);
        if (e.kind == EdgeKind::VoronoiEdge) {
            e.foot = 0.5 * (out.sites[e.sites[0]] + out.sites[e.sites[1]]);
        } else {
            const double f = e.line.eval(out.sites[e.sites[0]]);
            e.foot = {out.sites[e.sites[0]].x - f * e.line.a,
                      out.sites[e.sites[0]].y - f * e.line.b};
        }
        double ta = e.param_of(e.geom.a);
        double tb = e.param_of(e.geom.b);
        if (ta > tb) {
            std::swap(ta, tb);
            std::swap(e.geom.a, e.geom.b);
            std::swap(e.vertex_ids[0], e.vertex_ids[1]);
        }
        e.t_lo = ta;
        e.t_hi = tb;
    }
    return out;
}

std::vector<Point2> perturb(const std::vector<Point2>& points,
                            const std::vector<int>& implicated, uint64_t seed,
                            double square_lo, double square_hi) {
    auto splitmix = [](uint64_t x) {
        x += 0x9e3779b97f4a7c15ull;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        return x ^ (x >> 31);
    };
    std::vector<Point2> out = points;
    for (int i : implicated) {
        const uint64_t r = splitmix(seed ^ (0x9e3779b97f4a7c15ull * (i + 1)));
        const double ang = 2.0 * kPi * ((r >> 11) * 0x1.0p-53);
        Point2 p = out[i];
        p.x += 1e-9 * std::cos(ang);
        p.y += 1e-9 * std::sin(ang);
        p.x = std::clamp(p.x, square_lo + 1e-9, square_hi - 1e-9);
        p.y = std::clamp(p.y, square_lo + 1e-9, square_hi - 1e-9);
        out[i] = p;
    }
    return out;
}

namespace {

// Build-time state for one side: the ephemeral sequence mirrors the latest
// persistent version while events are applied in order.
struct SideBuilder {
    const EdgeSet& es;
    double L;
    std::vector<SeqItem> seq;
    PersistentSeq pseq;

    SideBuilder(const EdgeSet& e, double len) : es(e), L(len) {}

    PivotCurve curve_at(int id, double c) const {
        return project_to_pivot(arc_for_edge(es.edges[id]), es, {c, 0.0});
    }

    double transition_angle(size_t i, double c) const {
        try {
            return meeting_angle(es, seq[i].id, seq[i + 1].id, seq[i].meet, {c, 0.0});
        } catch (const std::exception&) {
            // Degenerate sliver interval: any angle in the transition zone
            // keeps the locate within the window margins.
            if (const auto w = shared_endpoint_dir(es, seq[i].id, seq[i + 1].id, {c, 0.0}))
                return *w;
            const PivotCurve a = curve_at(seq[i].id, c);
            const PivotCurve b = curve_at(seq[i + 1].id, c);
            return 0.5 * (a.th_end() + b.th_start);
        }
    }

    // Stored-meet transition with a continuity fallback: if the stored rank
    // no longer exists, take the handover nearest to ref.
    double transition_angle_ref(size_t i, double c, double ref) const {
        const PivotCurve a = curve_at(seq[i].id, c);
        const PivotCurve b = curve_at(seq[i + 1].id, c);
        const std::vector<double> hs = pair_handovers(es, a, b);
        if (hs.empty()) return ref;
        if (seq[i].meet >= 1 && seq[i].meet <= hs.size()) return hs[seq[i].meet - 1];
        double best = hs[0];
        for (double h : hs)
            if (std::fabs(h - ref) < std::fabs(best - ref)) best = h;
        return best;
    }

    size_t locate(double theta, double c) const {
        size_t lo = 0, hi = seq.size() - 1;
        while (lo < hi) {
            const size_t mid = lo + (hi - lo) / 2;
            if (theta < transition_angle(mid, c))
                hi = mid;
            else
                lo = mid + 1;
        }
        return lo;
    }

    static uint8_t rank_of(const std::vector<double>& hs, double angle) {
        int best = -1;
        double bd = 1e18;
        for (size_t k = 0; k < hs.size(); ++k) {
            const double d = std::fabs(hs[k] - angle);
            if (d < bd) {
                bd = d;
                best = static_cast<int>(k);
            }
        }
        return best >= 0 ? static_cast<uint8_t>(best + 1) : 0;
    }

    // Recompute the envelope over the piece window [wl, wr] at abscissa cp.
    // Returns the replacement run (same first/last ids) or nullopt.
    std::optional<std::vector<SeqItem>> try_window(size_t wl, size_t wr, double cp,
                                                   double cm,
                                                   const std::vector<int>& involved) {
        std::set<int> cand;
        for (size_t t = wl; t <= wr; ++t) cand.insert(seq[t].id);
        cand.insert(involved.begin(), involved.end());

        std::vector<PivotCurve> curves;
        std::vector<EnvCurveRef> refs;
        std::vector<int> ids;
        for (int id : cand) {
            try {
                curves.push_back(curve_at(id, cp));
                ids.push_back(id);
            } catch (const CollinearPivot&) {
            }
        }

        double lo, hi;
        if (wl == 0) {
            lo = 1e18;
            for (auto& cs : curves) lo = std::min(lo, cs.th_start);
        } else {
            lo = transition_angle_ref(wl - 1, cp, transition_angle_ref(wl - 1, cm, 0.0));
        }
        if (wr == seq.size() - 1) {
            hi = -1e18;
            for (auto& cs : curves) hi = std::max(hi, cs.th_end());
        } else {
            hi = transition_angle_ref(wr, cp, transition_angle_ref(wr, cm, kPi));
        }
        if (!(hi > lo)) return std::nullopt;

        EnvelopeOps ops;
        ops.value = [&](int slot, double th) { return curves[slot].value(th); };
        ops.crossings = [&](int sa, int sb, double a, double b) {
            std::vector<double> out;
            try {
                const auto shared =
                    shared_endpoint_dir(es, curves[sa].edge, curves[sb].edge, {cp, 0.0});
                for (const CurveHit& h :
                     curve_intersections(curves[sa], curves[sb], shared))
                    if (!h.tangential && h.param > a && h.param < b)
                        out.push_back(h.param);
            } catch (const IdenticalCurves&) {
            }
            return out;
        };
        std::vector<EnvCurveRef> slot_refs;
        for (size_t s = 0; s < curves.size(); ++s) {
            const double a = std::max(lo, curves[s].th_start);
            const double b = std::min(hi, curves[s].th_end());
            if (b > a) slot_refs.push_back({static_cast<int>(s), a, b});
        }
        if (slot_refs.empty()) return std::nullopt;
        Envelope env = upper_envelope(slot_refs, ops, lo, hi);
        absorb_envelope_slivers(env, 1e-9);

        std::vector<SeqItem> repl;
        std::vector<double> trans;
        for (size_t p = 0; p < env.ids.size(); ++p) {
            if (env.ids[p] < 0) {
                if (repl.empty()) continue;   // leading gap: boundary roundoff
                if (p + 1 == env.ids.size()) continue;  // trailing gap
                return std::nullopt;          // interior gap: window too small
            }
            const int edge_id = curves[env.ids[p]].edge;
            if (!repl.empty() && repl.back().id == edge_id) continue;
            if (!repl.empty()) trans.push_back(env.breaks[p]);
            repl.push_back({edge_id, 0});
        }
        if (repl.empty()) return std::nullopt;
        // Interior windows must reconcile with the untouched boundary pieces;
        // windows reaching a sequence end are free there.
        if (wl > 0 && repl.front().id != seq[wl].id) return std::nullopt;
        if (wr + 1 < seq.size() && repl.back().id != seq[wr].id) return std::nullopt;

        for (size_t t = 0; t + 1 < repl.size(); ++t) {
            const PivotCurve a = curve_at(repl[t].id, cp);
            const PivotCurve b = curve_at(repl[t + 1].id, cp);
            repl[t].meet = rank_of(pair_handovers(es, a, b), trans[t]);
        }
        // the outgoing adjacency is untouched when the window is interior
        repl.back().meet = (wr + 1 < seq.size()) ? seq[wr].meet : uint8_t(0);
        return repl;
    }

    // Applies one event; fills kind/case/arcs/ops of ev. The sequence is
    // combinatorially constant between events, so the pre-state is probed at
    // the midpoint of the preceding interval and the replacement computed at
    // the midpoint of the following one, where the geometry is far from the
    // event's singularities.
    void apply_event(GEvent& ev, double c_prev, double c_next) {
        const double cm = 0.5 * (c_prev + ev.x);
        const double cp = 0.5 * (ev.x + c_next);
#ifdef LEC_DEBUG_EVENTS
        std::fprintf(stderr, "apply x=%.9f th=%.9f src=%d seq:", ev.x, ev.angle,
                     (int)ev.source);
        for (auto& it : seq) std::fprintf(stderr, " %d(m%d)", it.id, it.meet);
        std::fprintf(stderr, "\n");
#endif

        size_t wl, wr;
        std::optional<std::vector<SeqItem>> repl;
        if (seq.empty()) {
            ev.kind = GEvent::Adjust;
            ev.case_tag = GEvent::None;
            pseq.apply(pseq.version_count() - 1, {});
            return;
        }
        const size_t loc = locate(ev.angle, cm);
        wl = loc;
        wr = loc;
        const std::set<int> inv(ev.involved.begin(), ev.involved.end());
        for (size_t t = 0; t < seq.size(); ++t) {
            if (inv.count(seq[t].id)) {
                wl = std::min(wl, t);
                wr = std::max(wr, t);
            }
        }
        for (int attempt = 0; attempt < 4 && !repl; ++attempt) {
            const size_t margin = 2 + 2 * attempt;
            const size_t awl = wl > margin ? wl - margin : 0;
            const size_t awr = std::min(seq.size() - 1, wr + margin);
            repl = try_window(awl, awr, cp, cm, ev.involved);
            if (repl) {
                wl = awl;
                wr = awr;
            }
        }
#ifdef LEC_DEBUG_EVENTS
        if (!repl) std::fprintf(stderr, "  -> full rebuild fallback\n");
        else {
            std::fprintf(stderr, "  -> window [%zu..%zu] repl:", wl, wr);
            for (auto& it : *repl) std::fprintf(stderr, " %d(m%d)", it.id, it.meet);
            std::fprintf(stderr, "\n");
        }
#endif

        std::vector<SpliceOp> ops;
        if (!repl) {
            // Window reconciliation failed; rebuild the whole sequence at cp.
            const PivotIndex full = build_pivot(es, {cp, 0.0});
            std::vector<SeqItem> items;
            for (size_t t = 0; t < full.seq.ids.size(); ++t)
                items.push_back({full.seq.ids[t],
                                 t < full.seq.meets.size() ? full.seq.meets[t]
                                                           : uint8_t(0)});
            for (size_t t = 0; t < seq.size(); ++t)
                ops.push_back({SpliceOp::Erase, 0, {}});
            for (size_t t = 0; t < items.size(); ++t)
                ops.push_back({SpliceOp::Insert, static_cast<int>(t), items[t]});
            ev.kind = GEvent::Adjust;
            ev.case_tag = GEvent::None;
            seq = items;
        } else {
            classify(ev, wl, wr, *repl);
            // splice ops: replace the window contents wholesale
            for (size_t t = wl; t <= wr; ++t)
                ops.push_back({SpliceOp::Erase, static_cast<int>(wl), {}});
            for (size_t t = 0; t < repl->size(); ++t)
                ops.push_back({SpliceOp::Insert, static_cast<int>(wl + t), (*repl)[t]});

            const long dlen =
                static_cast<long>(repl->size()) - static_cast<long>(wr - wl + 1);
            std::vector<SeqItem> next(seq.begin(), seq.begin() + wl);
            next.insert(next.end(), repl->begin(), repl->end());
            next.insert(next.end(), seq.begin() + wr + 1, seq.end());

            // Adjacencies of the event's pair elsewhere can change rank.
            if (ev.involved.size() == 2 && ev.source != GEvent::SrcConcurrency) {
                const int a = ev.involved[0], b = ev.involved[1];
                for (size_t p = 0; p + 1 < next.size(); ++p) {
                    const bool in_window =
                        p >= wl && p + 2 <= wl + repl->size();  // recomputed fresh
                    if (in_window) continue;
                    const int x = next[p].id, y = next[p + 1].id;
                    if (!((x == a && y == b) || (x == b && y == a))) continue;
                    // old transition angle from the pre-event state
                    const long op_pos = static_cast<long>(p) >= static_cast<long>(wl)
                                            ? static_cast<long>(p) - dlen
                                            : static_cast<long>(p);
                    if (op_pos < 0 || op_pos + 1 >= static_cast<long>(seq.size()))
                        continue;
                    const size_t old_p = static_cast<size_t>(op_pos);
                    double ref;
                    try {
                        ref = meeting_angle(es, seq[old_p].id, seq[old_p + 1].id,
                                            seq[old_p].meet, {cm, 0.0});
                    } catch (...) {
                        continue;
                    }
                    const PivotCurve ca = curve_at(x, cp);
                    const PivotCurve cb = curve_at(y, cp);
                    const uint8_t m = rank_of(pair_handovers(es, ca, cb), ref);
                    if (m != next[p].meet) {
                        next[p].meet = m;
                        ops.push_back({SpliceOp::SetMeet, static_cast<int>(p), {0, m}});
                    }
                }
            }
            seq = std::move(next);
        }
        ev.ops = ops;
        pseq.apply(pseq.version_count() - 1, ops);
#ifdef LEC_DEBUG_EVENTS
        const auto check = pseq.read(pseq.version_count() - 1);
        bool okc = check.size() == seq.size();
        if (okc)
            for (size_t t = 0; t < check.size(); ++t)
                if (!(check[t] == seq[t])) okc = false;
        if (!okc) {
            std::fprintf(stderr, "  !! tree/ephemeral divergence after event x=%.9f\n",
                         ev.x);
            std::fprintf(stderr, "  tree:");
            for (auto& it : check) std::fprintf(stderr, " %d(m%d)", it.id, it.meet);
            std::fprintf(stderr, "\n  eph :");
            for (auto& it : seq) std::fprintf(stderr, " %d(m%d)", it.id, it.meet);
            std::fprintf(stderr, "\n  ops :");
            for (auto& op : ops)
                std::fprintf(stderr, " %s@%d:%d", op.kind == 0 ? "I" : op.kind == 1 ? "E" : "M",
                             op.pos, op.item.id);
            std::fprintf(stderr, "\n");
        }
#endif
    }

    void classify(GEvent& ev, size_t wl, size_t wr, const std::vector<SeqItem>& repl) {
        std::vector<int> oldids, newids;
        for (size_t t = wl; t <= wr; ++t) oldids.push_back(seq[t].id);
        for (const SeqItem& it : repl) newids.push_back(it.id);
        if (oldids == newids) {
            ev.kind = GEvent::Adjust;
            ev.case_tag =
                ev.source == GEvent::SrcEndpoint ? GEvent::EndpointCross : GEvent::None;
            ev.arcs.clear();
            return;
        }
        auto contiguous_insert = [](const std::vector<int>& small,
                                    const std::vector<int>& big)
            -> std::optional<std::pair<size_t, std::vector<int>>> {
            if (big.size() <= small.size()) return std::nullopt;
            size_t pre = 0;
            while (pre < small.size() && small[pre] == big[pre]) ++pre;
            size_t suf = 0;
            while (suf < small.size() &&
                   small[small.size() - 1 - suf] == big[big.size() - 1 - suf])
                ++suf;
            if (pre + suf < small.size()) return std::nullopt;
            pre = std::min(pre, small.size() - suf);  // overlapping matches
            const size_t ins = big.size() - small.size();
            std::vector<int> block(big.begin() + pre, big.begin() + pre + ins);
            return std::make_pair(pre, block);
        };

        std::optional<std::pair<size_t, std::vector<int>>> blk;
        bool insertion;
        if ((blk = contiguous_insert(oldids, newids))) {
            insertion = true;
        } else if ((blk = contiguous_insert(newids, oldids))) {
            insertion = false;
        } else {
            ev.kind = GEvent::Adjust;
            ev.case_tag = GEvent::None;
            ev.arcs.clear();
            return;
        }

        // An insertion "inside" an arc X diffs as a block carrying one copy
        // of X at its edge: [X] -> [X, a, b, X] gives block [a,b,X] or
        // [X,a,b]. Strip the anchor copy to recover the paper's I.
        const auto& big = insertion ? newids : oldids;
        const size_t at = blk->first;
        std::vector<int> block = blk->second;
        bool inside = false;
        if (!block.empty() && at > 0 && block.back() == big[at - 1]) {
            block.pop_back();
            inside = true;
        } else if (!block.empty() && at + block.size() < big.size() &&
                   block.front() == big[at + block.size()]) {
            block.erase(block.begin());
            inside = true;
        }
        if (block.empty() || block.size() > 2) {
            ev.kind = GEvent::Adjust;
            ev.case_tag = GEvent::None;
            ev.arcs = blk->second;
            return;
        }
        ev.kind = insertion ? GEvent::Insertion : GEvent::Deletion;
        ev.arcs = block;
        if (block.size() == 2) {
            ev.case_tag = GEvent::A2;
        } else if (ev.source == GEvent::SrcEndpoint || ev.source == GEvent::SrcJunction ||
                   ev.source == GEvent::SrcCollapse) {
            ev.case_tag = GEvent::EndpointCross;
        } else {
            ev.case_tag = inside ? GEvent::A1 : GEvent::B1;
        }
    }
};

}  // namespace

static SideIndex build_side(const EdgeSet& es_original, int side, double lo, double hi,
                            double L) {
    SideIndex si;
    si.es = edge_set_to_side_frame(es_original, side, lo, hi);
    si.length = L;
    si.events = enumerate_events(si.es, L);

    const double v0x = si.events.empty() ? 0.5 * L : 0.5 * si.events.front().x;
    const PivotIndex p0 = build_pivot(si.es, {v0x, 0.0});
    for (size_t t = 0; t < p0.seq.ids.size(); ++t)
        si.initial.push_back(
            {p0.seq.ids[t],
             t < p0.seq.meets.size() ? p0.seq.meets[t] : uint8_t(0)});

    SideBuilder sb(si.es, L);
    sb.seq = si.initial;
    sb.pseq.init(si.initial);
    for (size_t e = 0; e < si.events.size(); ++e) {
        const double c_prev = e == 0 ? 0.0 : si.events[e - 1].x;
        const double c_next = e + 1 < si.events.size() ? si.events[e + 1].x : L;
        sb.apply_event(si.events[e], c_prev, c_next);
    }
    si.versions = std::move(sb.pseq);
    return si;
}

GeneralIndex build_general(const std::vector<Point2>& points, double square_lo,
                           double square_hi, uint64_t seed) {
    GeneralIndex gi;
    gi.points = points;
    gi.square_lo = square_lo;
    gi.square_hi = square_hi;
    gi.seed = seed;
    const double L = square_hi - square_lo;

    for (int round = 0;; ++round) {
        try {
            gi.es = build_edge_set(gi.points);
            for (int side = 0; side < 4; ++side)
                gi.sides[side] = build_side(gi.es, side, square_lo, square_hi, L);
            gi.collinear.clear();
            for (const Edge& e : gi.es.edges)
                gi.collinear[{e.line.a, e.line.b, e.line.c}].push_back(e.id);
            return gi;
        } catch (const DegeneracyDetected& ex) {
            if (round >= 3) throw;
            gi.points = perturb(gi.points, ex.implicated, seed + round, square_lo,
                                square_hi);
            gi.perturb_rounds = round + 1;
        }
    }
}

namespace {

MaybeAnswer side_query(const GeneralIndex& gi, int side, double c, double theta,
                       uint64_t* comparisons) {
    const SideIndex& si = gi.sides[side];

    // predecessor version: all events with x <= c applied
    size_t lo = 0, hi = si.events.size();
    while (lo < hi) {
        const size_t mid = lo + (hi - lo) / 2;
        if (comparisons) ++*comparisons;
        if (si.events[mid].x <= c)
            lo = mid + 1;
        else
            hi = mid;
    }
    const int version = static_cast<int>(lo);

    const int n = si.versions.size(version);
    MaybeAnswer best;
    if (n > 0) {
        int a = 0, b = n - 1;
        while (a < b) {
            const int mid = a + (b - a) / 2;
            if (comparisons) ++*comparisons;
            const SeqItem im = si.versions.at(version, mid);
            const SeqItem in = si.versions.at(version, mid + 1);
            double tr;
            try {
                tr = meeting_angle(si.es, im.id, in.id, im.meet, {c, 0.0});
            } catch (const std::exception&) {
                // sliver adjacency at query resolution: separate by domains
                try {
                    const auto sh = shared_endpoint_dir(si.es, im.id, in.id, {c, 0.0});
                    if (sh) {
                        tr = *sh;
                    } else {
                        const PivotCurve ca = project_to_pivot(
                            arc_for_edge(si.es.edges[im.id]), si.es, {c, 0.0});
                        const PivotCurve cb = project_to_pivot(
                            arc_for_edge(si.es.edges[in.id]), si.es, {c, 0.0});
                        tr = 0.5 * (ca.th_end() + cb.th_start);
                    }
                } catch (const std::exception&) {
                    tr = theta;  // route right; the local scan below recovers
                }
            }
            if (theta < tr)
                b = mid;
            else
                a = mid + 1;
        }
        // Sliver pieces can misroute by a step or two; scan the impacted
        // neighborhood for the best containing curve.
        for (int p = std::max(0, a - 2); p <= std::min(n - 1, a + 2); ++p) {
            const SeqItem item = si.versions.at(version, p);
            try {
                const PivotCurve cv = project_to_pivot(
                    arc_for_edge(si.es.edges[item.id]), si.es, {c, 0.0});
                if (!cv.contains(theta, 1e-9)) continue;
                const double r = cv.value(theta);
                if (!best || r > best->radius) {
                    const Point2 center = cv.point_at(theta);
                    best = LecAnswer{
                        from_side_frame(side, center, gi.square_lo, gi.square_hi), r,
                        item.id, false};
                }
            } catch (const std::exception&) {
            }
        }
    }

    // collapse-adjacent queries: compare against the edge-on candidates
    auto ev_it = std::lower_bound(
        si.events.begin(), si.events.end(), c - 1e-9,
        [](const GEvent& ev, double v) { return ev.x < v; });
    for (; ev_it != si.events.end() && ev_it->x <= c + 1e-9; ++ev_it) {
        const GEvent& ev = *ev_it;
        if (ev.source != GEvent::SrcCollapse || std::fabs(ev.angle - theta) > 1e-9)
            continue;
        for (int id : ev.involved) {
            const Edge& e = si.es.edges[id];
            for (double t : {e.t_lo, e.t_hi}) {
                const Point2 p = e.point_at(t);
                const double r = e.clearance_at_t(t);
                if (!best || r > best->radius)
                    best = LecAnswer{from_side_frame(side, p, gi.square_lo, gi.square_hi),
                                     r, id, false};
            }
        }
    }
    return best;
}

}  // namespace

MaybeAnswer query_general(const GeneralIndex& gi, const Line2& line,
                          uint64_t* comparisons) {
    const double lo = gi.square_lo, hi = gi.square_hi;
    const Point2 corners[4] = {{lo, lo}, {hi, lo}, {hi, hi}, {lo, hi}};

    MaybeAnswer best;
    for (int side = 0; side < 4; ++side) {
        const Segment2 seg{corners[side], corners[(side + 1) % 4]};
        const LineSegHit hit = line_segment_intersection(line, seg);
        if (hit.kind != LineSegHit::At) continue;
        const Point2 q = to_side_frame(side, hit.p, lo, hi);
        Point2 d = dir_to_side_frame(side, line.direction());
        double theta = std::atan2(d.y, d.x);
        if (theta < 0) theta += kPi;
        if (theta <= 0 || theta >= kPi) continue;
        best = side_query(gi, side, q.x, theta, comparisons);
        break;
    }

    // collinear-with-an-edge queries resolve via the exact line table
    const auto it = gi.collinear.find({line.a, line.b, line.c});
    if (it != gi.collinear.end()) {
        for (int id : it->second) {
            const Edge& e = gi.es.edges[id];
            for (double t : {e.t_lo, e.t_hi}) {
                const double r = e.clearance_at_t(t);
                if (!best || r > best->radius)
                    best = LecAnswer{e.point_at(t), r, id, false};
            }
        }
    }
    return best;
}

}  // namespace lec
