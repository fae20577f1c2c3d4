// Event enumeration for the arbitrary-query-line index: all pivot abscissas
#include <cstdio>
// in (0, L) where the landing sequence of rays from (c, 0) changes. Events
// come from five mechanisms:
//   - the pivot crossing an edge's supporting line (domain collapse),
//   - two clearance curves becoming tangent (a crossing pair born or dying),
//   - a crossing passing through a shared-endpoint (junction) angle,
//   - a curve's domain endpoint crossing another curve,
//   - three curves concurrent at one angle.
// Pairs and triples are pruned with conservative per-block angular ranges
// (endpoint angles are monotone in c), then localized by sampling and
// bisection to kEpsRoot.

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "lec/general_index.hpp"

namespace lec {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct EdgeGeom {
    Point2 A, B;       // endpoints at t_lo / t_hi
    double rA = 0, rB = 0;
    int vA = -1, vB = -1;
    Point2 site;
    double collapse_c = -1.0;  // x-intercept of the supporting line, or <0
};

struct Ctx {
    const EdgeSet& es;
    double L;
    std::vector<EdgeGeom> geom;

    explicit Ctx(const EdgeSet& e, double len) : es(e), L(len) {
        geom.resize(es.edges.size());
        for (const Edge& ed : es.edges) {
            EdgeGeom g;
            g.A = ed.geom.a;
            g.B = ed.geom.b;
            g.vA = ed.vertex_ids[0];
            g.vB = ed.vertex_ids[1];
            g.site = es.sites[ed.sites[0]];
            g.rA = dist(g.A, g.site);
            g.rB = dist(g.B, g.site);
            if (std::fabs(ed.line.a) > 1e-12) {
                const double x = -ed.line.c / ed.line.a;
                if (x > kEpsRoot && x < L - kEpsRoot) g.collapse_c = x;
            }
            geom[ed.id] = g;
        }
    }

    static double angle_from(Point2 p, double c) { return std::atan2(p.y, p.x - c); }

    std::optional<PivotCurve> curve(int j, double c) const {
        try {
            return project_to_pivot(arc_for_edge(es.edges[j]), es, {c, 0.0});
        } catch (const CollinearPivot&) {
            return std::nullopt;
        }
    }

    std::optional<double> shared_dir(int i, int j, double c) const {
        return shared_endpoint_dir(es, i, j, {c, 0.0});
    }

    bool incident(int edge, int vertex) const {
        return geom[edge].vA == vertex || geom[edge].vB == vertex;
    }

    // Distance from the point where ray (c,0)->through-angle-theta meets edge
    // i's supporting line to edge i's site. Caller guarantees theta is inside
    // edge i's domain.
    double value_on_line(int i, double theta, double c) const {
        const Edge& e = es.edges[i];
        const Point2 w{std::cos(theta), std::sin(theta)};
        const double den = e.line.a * w.x + e.line.b * w.y;
        const double h = -(e.line.a * c + e.line.c);
        const double r = h / den;
        const Point2 x{c + r * w.x, r * w.y};
        return dist(x, geom[i].site);
    }
};

struct Blocks {
    int B;
    std::vector<double> c0, c1;
    std::vector<double> lo, hi;  // [block * nE + edge]
    int nE;

    Blocks(const Ctx& ctx, int blocks) : B(blocks), nE(static_cast<int>(ctx.geom.size())) {
        c0.resize(B);
        c1.resize(B);
        lo.assign(static_cast<size_t>(B) * nE, 0.0);
        hi.assign(static_cast<size_t>(B) * nE, 0.0);
        for (int b = 0; b < B; ++b) {
            c0[b] = ctx.L * b / B;
            c1[b] = ctx.L * (b + 1) / B;
            for (int j = 0; j < nE; ++j) {
                const EdgeGeom& g = ctx.geom[j];
                // Endpoint angles are increasing in c, so the block hull is
                // [min at c0, max at c1]; a collapse inside the block makes
                // the domain sweep the whole upper range.
                double a0 = Ctx::angle_from(g.A, c0[b]);
                double b0 = Ctx::angle_from(g.B, c0[b]);
                double a1 = Ctx::angle_from(g.A, c1[b]);
                double b1 = Ctx::angle_from(g.B, c1[b]);
                double l = std::min(a0, b0);
                double h = std::max(a1, b1);
                if (g.collapse_c >= c0[b] - 1e-12 && g.collapse_c <= c1[b] + 1e-12) {
                    l = 0.0;
                    h = kPi;
                }
                lo[static_cast<size_t>(b) * nE + j] = l;
                hi[static_cast<size_t>(b) * nE + j] = h;
            }
        }
    }

    double elo(int b, int j) const { return lo[static_cast<size_t>(b) * nE + j]; }
    double ehi(int b, int j) const { return hi[static_cast<size_t>(b) * nE + j]; }
    bool overlap(int b, int i, int j) const {
        return elo(b, i) <= ehi(b, j) && elo(b, j) <= ehi(b, i);
    }
};

// Generic scalar root scan: samples f over [lo,hi] (skipping knots where it
// is undefined) and bisects every sign change.
template <typename F>
void scan_roots(F&& f, double lo, double hi, int samples, std::vector<double>& out) {
    if (!(hi > lo)) return;
    double px = lo;
    double pv = f(px);
    for (int k = 1; k <= samples; ++k) {
        const double x = lo + (hi - lo) * k / samples;
        const double v = f(x);
        if (std::isfinite(pv) && std::isfinite(v) && ((pv < 0) != (v < 0))) {
            double a = px, b = x, fa = pv;
            for (int it = 0; it < 60; ++it) {
                const double m = 0.5 * (a + b);
                const double fm = f(m);
                if (!std::isfinite(fm)) break;
                if ((fa < 0) == (fm < 0)) {
                    a = m;
                    fa = fm;
                } else {
                    b = m;
                }
            }
            out.push_back(0.5 * (a + b));
        }
        px = x;
        pv = v;
    }
}

struct RawEvent {
    double x, angle;
    GEvent::Source src;
    std::vector<int> involved;
};

// ---- domain collapses -------------------------------------------------

void collapse_events(const Ctx& ctx, std::vector<RawEvent>& out) {
    std::map<int, std::vector<int>> hull_groups;  // hull side -> edges
    for (const Edge& e : ctx.es.edges) {
        if (ctx.geom[e.id].collapse_c < 0) continue;
        if (e.kind == EdgeKind::HullSegment)
            hull_groups[e.hull_side].push_back(e.id);
        else {
            const double c = ctx.geom[e.id].collapse_c;
            out.push_back({c, std::atan2(e.line.a, -e.line.b), GEvent::SrcCollapse, {e.id}});
        }
    }
    for (auto& [side, edges] : hull_groups) {
        const Edge& e = ctx.es.edges[edges.front()];
        const double c = ctx.geom[edges.front()].collapse_c;
        out.push_back({c, std::atan2(e.line.a, -e.line.b), GEvent::SrcCollapse, edges});
    }
}

// ---- endpoint crossings -------------------------------------------------

// x-intercept of the line through p and q (where a pivot sees them aligned).
std::optional<double> aligned_c(Point2 p, Point2 q) {
    if (std::fabs(p.y - q.y) < 1e-15) return std::nullopt;
    return (p.y * q.x - p.x * q.y) / (p.y - q.y);
}

void endpoint_events(const Ctx& ctx, const Blocks& blk, std::vector<RawEvent>& out) {
    const int nE = blk.nE;
    for (int j = 0; j < nE; ++j) {
        for (int side = 0; side < 2; ++side) {
            const Point2 V = side ? ctx.geom[j].B : ctx.geom[j].A;
            const int vid = side ? ctx.geom[j].vB : ctx.geom[j].vA;
            const double rV = side ? ctx.geom[j].rB : ctx.geom[j].rA;
            for (int i = 0; i < nE; ++i) {
                if (i == j || ctx.incident(i, vid)) continue;
                // windows where the blocks say theta_V can lie inside dom_i
                double wlo = -1, whi = -1;
                std::vector<std::pair<double, double>> windows;
                for (int b = 0; b < blk.B; ++b) {
                    const double tvlo = Ctx::angle_from(V, blk.c0[b]);
                    const double tvhi = Ctx::angle_from(V, blk.c1[b]);
                    const bool on = tvlo <= blk.ehi(b, i) && blk.elo(b, i) <= tvhi;
                    if (on) {
                        if (wlo < 0) wlo = blk.c0[b];
                        whi = blk.c1[b];
                    } else if (wlo >= 0) {
                        windows.push_back({wlo, whi});
                        wlo = -1;
                    }
                }
                if (wlo >= 0) windows.push_back({wlo, whi});

                for (auto [w0, w1] : windows) {
                    // split at validity boundaries and at i's collapse
                    std::vector<double> knots{w0, w1};
                    if (auto ca = aligned_c(V, ctx.geom[i].A); ca && *ca > w0 && *ca < w1)
                        knots.push_back(*ca);
                    if (auto cb = aligned_c(V, ctx.geom[i].B); cb && *cb > w0 && *cb < w1)
                        knots.push_back(*cb);
                    const double cc = ctx.geom[i].collapse_c;
                    if (cc > w0 && cc < w1) knots.push_back(cc);
                    std::sort(knots.begin(), knots.end());

                    for (size_t k = 0; k + 1 < knots.size(); ++k) {
                        const double a = knots[k], b = knots[k + 1];
                        if (b - a < 1e-12) continue;
                        // validity test at the midpoint
                        const double cm = 0.5 * (a + b);
                        const auto ci = ctx.curve(i, cm);
                        if (!ci || !ci->contains(Ctx::angle_from(V, cm))) continue;
                        auto g = [&](double c) -> double {
                            return ctx.value_on_line(i, Ctx::angle_from(V, c), c) - rV;
                        };
                        std::vector<double> roots;
                        const int ns = std::max(4, static_cast<int>(16 * (b - a) / ctx.L));
                        scan_roots(g, a + 1e-12, b - 1e-12, ns, roots);
                        for (double c : roots)
                            out.push_back(
                                {c, Ctx::angle_from(V, c), GEvent::SrcEndpoint, {i, j}});
                    }
                }
            }
        }
    }
}

// ---- shared-endpoint junction flips --------------------------------------

void junction_events(const Ctx& ctx, std::vector<RawEvent>& out) {
    const int nE = static_cast<int>(ctx.geom.size());
    std::map<int, std::vector<int>> by_vertex;
    for (int j = 0; j < nE; ++j) {
        by_vertex[ctx.geom[j].vA].push_back(j);
        by_vertex[ctx.geom[j].vB].push_back(j);
    }
    for (auto& [vid, edges] : by_vertex) {
        if (vid < 0) continue;
        for (size_t a = 0; a < edges.size(); ++a) {
            for (size_t b = a + 1; b < edges.size(); ++b) {
                const int i = edges[a], j = edges[b];
                const Point2 W =
                    (ctx.geom[i].vA == vid) ? ctx.geom[i].A : ctx.geom[i].B;
                // The deflated difference polynomial evaluated at the pinned
                // direction flips sign exactly when a crossing passes the
                // junction.
                auto h = [&](double c) -> double {
                    const auto ci = ctx.curve(i, c);
                    const auto cj = ctx.curve(j, c);
                    if (!ci || !cj) return std::numeric_limits<double>::quiet_NaN();
                    const double thw = Ctx::angle_from(W, c);
                    const double eps = 1e-6;
                    // order of the two curves just inside their common side
                    double probe = thw;
                    if (ci->contains(thw + eps) && cj->contains(thw + eps))
                        probe = thw + eps;
                    else if (ci->contains(thw - eps) && cj->contains(thw - eps))
                        probe = thw - eps;
                    else
                        return std::numeric_limits<double>::quiet_NaN();
                    return ci->value(probe) - cj->value(probe);
                };
                std::vector<double> roots;
                scan_roots(h, 1e-9, ctx.L - 1e-9, 48, roots);
                for (double c : roots)
                    out.push_back(
                        {c, Ctx::angle_from(W, c), GEvent::SrcJunction, {i, j}});
            }
        }
    }
}

// ---- pair tangencies (crossing-count changes) -----------------------------

int crossing_count(const Ctx& ctx, int i, int j, double c) {
    const auto ci = ctx.curve(i, c);
    const auto cj = ctx.curve(j, c);
    if (!ci || !cj) return -1;  // undefined at collapse
    try {
        return static_cast<int>(
            curve_intersections(*ci, *cj, ctx.shared_dir(i, j, c)).size());
    } catch (const IdenticalCurves&) {
        return -1;
    }
}

void tangency_events(const Ctx& ctx, const Blocks& blk, std::vector<RawEvent>& out) {
    const int nE = blk.nE;
    for (int i = 0; i < nE; ++i) {
        for (int j = i + 1; j < nE; ++j) {
            std::vector<std::pair<double, double>> windows;
            double wlo = -1, whi = -1;
            for (int b = 0; b < blk.B; ++b) {
                if (blk.overlap(b, i, j)) {
                    if (wlo < 0) wlo = blk.c0[b];
                    whi = blk.c1[b];
                } else if (wlo >= 0) {
                    windows.push_back({wlo, whi});
                    wlo = -1;
                }
            }
            if (wlo >= 0) windows.push_back({wlo, whi});

            for (auto [w0, w1] : windows) {
                w0 = std::max(w0, 1e-9);
                w1 = std::min(w1, ctx.L - 1e-9);
                if (w1 <= w0) continue;
                std::vector<double> knots{w0, w1};
                for (int e : {i, j}) {
                    const double cc = ctx.geom[e].collapse_c;
                    if (cc > w0 && cc < w1) {
                        knots.push_back(cc - 1e-11);
                        knots.push_back(cc + 1e-11);
                    }
                }
                std::sort(knots.begin(), knots.end());

                for (size_t k = 0; k + 1 < knots.size(); ++k) {
                    const double a = knots[k], b = knots[k + 1];
                    if (b - a < 1e-11) continue;
                    const int ns = std::max(4, static_cast<int>(24 * (b - a) / ctx.L));
                    // recursive count-change localization
                    struct Frame {
                        double a, b;
                        int ca, cb, depth;
                    };
                    std::vector<Frame> stack;
                    int prev = crossing_count(ctx, i, j, a);
                    double px = a;
                    for (int s = 1; s <= ns; ++s) {
                        const double x = a + (b - a) * s / ns;
                        const int cnt = crossing_count(ctx, i, j, x);
                        if (prev >= 0 && cnt >= 0 && cnt != prev)
                            stack.push_back({px, x, prev, cnt, 0});
                        px = x;
                        prev = cnt;
                    }
                    while (!stack.empty()) {
                        Frame f = stack.back();
                        stack.pop_back();
                        if (f.b - f.a < 1e-11 || f.depth > 48) {
                            if (std::abs(f.cb - f.ca) >= 2 || f.depth > 48) {
                                // tangency (or unresolved pile-up): report at
                                // the collapsing pair's location
                                const double c_star = 0.5 * (f.a + f.b);
                                const double c_probe = (f.cb > f.ca) ? f.b : f.a;
                                const auto ci = ctx.curve(i, c_probe);
                                const auto cj = ctx.curve(j, c_probe);
                                if (!ci || !cj) continue;
                                std::vector<CurveHit> hits;
                                try {
                                    hits = curve_intersections(
                                        *ci, *cj, ctx.shared_dir(i, j, c_probe));
                                } catch (const IdenticalCurves&) {
                                    continue;
                                }
                                double theta = -1, best_gap = 1e9;
                                for (size_t q = 0; q + 1 < hits.size(); ++q) {
                                    const double gap =
                                        hits[q + 1].param - hits[q].param;
                                    if (gap < best_gap) {
                                        best_gap = gap;
                                        theta =
                                            0.5 * (hits[q].param + hits[q + 1].param);
                                    }
                                }
                                if (hits.size() == 1) theta = hits[0].param;
                                if (theta >= 0)
                                    out.push_back({c_star, theta, GEvent::SrcTangency,
                                                   {i, j}});
                            }
                            // count changes of 1 are domain-boundary passages,
                            // enumerated as endpoint/junction events
                            continue;
                        }
                        const double m = 0.5 * (f.a + f.b);
                        const int cm = crossing_count(ctx, i, j, m);
                        if (cm < 0) continue;
                        if (cm != f.ca) stack.push_back({f.a, m, f.ca, cm, f.depth + 1});
                        if (cm != f.cb) stack.push_back({m, f.b, cm, f.cb, f.depth + 1});
                    }
                }
            }
        }
    }
}

// ---- triple concurrencies -------------------------------------------------

void concurrency_events(const Ctx& ctx, const Blocks& blk, std::vector<RawEvent>& out) {
    const int nE = blk.nE;
    // candidate triples per merged c-window
    std::set<std::tuple<int, int, int, int>> seen;  // (i,j,k,block-run-start)

    for (int b = 0; b < blk.B; ++b) {
        // active edges sorted by lo
        std::vector<int> act(nE);
        for (int e = 0; e < nE; ++e) act[e] = e;
        std::sort(act.begin(), act.end(),
                  [&](int x, int y) { return blk.elo(b, x) < blk.elo(b, y); });
        for (int ii = 0; ii < nE; ++ii) {
            const int i = act[ii];
            for (int jj = ii + 1; jj < nE; ++jj) {
                const int j = act[jj];
                if (blk.elo(b, j) > blk.ehi(b, i)) break;
                const double plo = std::max(blk.elo(b, i), blk.elo(b, j));
                const double phi = std::min(blk.ehi(b, i), blk.ehi(b, j));
                for (int kk = jj + 1; kk < nE; ++kk) {
                    const int k = act[kk];
                    if (blk.elo(b, k) > phi) break;
                    if (blk.ehi(b, k) < plo) continue;
                    int x = i, y = j, z = k;
                    if (x > y) std::swap(x, y);
                    if (y > z) std::swap(y, z);
                    if (x > y) std::swap(x, y);
                    seen.insert({x, y, z, b});
                }
            }
        }
    }

    // merge consecutive blocks per triple
    std::map<std::tuple<int, int, int>, std::vector<std::pair<double, double>>> wins;
    for (auto [i, j, k, b] : seen) {
        auto& v = wins[{i, j, k}];
        const double c0 = blk.c0[b], c1 = blk.c1[b];
        if (!v.empty() && std::fabs(v.back().second - c0) < 1e-15)
            v.back().second = c1;
        else
            v.push_back({c0, c1});
    }

    for (auto& [key, windows] : wins) {
        const auto [i, j, k] = key;
        for (auto [w0raw, w1raw] : windows) {
            const double w0 = std::max(w0raw, 1e-9);
            const double w1 = std::min(w1raw, ctx.L - 1e-9);
            if (w1 <= w0) continue;

            // track (i,j) crossing branches against curve k
            auto branches = [&](double c) {
                std::vector<std::pair<double, double>> br;  // (theta, d_k - d_i)
                const auto ci = ctx.curve(i, c);
                const auto cj = ctx.curve(j, c);
                const auto ck = ctx.curve(k, c);
                if (!ci || !cj || !ck) return br;
                std::vector<CurveHit> hits;
                try {
                    hits = curve_intersections(*ci, *cj, ctx.shared_dir(i, j, c));
                } catch (const IdenticalCurves&) {
                    return br;
                }
                for (const CurveHit& h : hits) {
                    if (!ck->contains(h.param))
                        br.push_back({h.param, std::numeric_limits<double>::quiet_NaN()});
                    else
                        br.push_back({h.param, ck->value(h.param) - ci->value(h.param)});
                }
                return br;
            };

            const int ns = std::max(4, static_cast<int>(24 * (w1 - w0) / ctx.L));
            struct Frame {
                double a, b;
                int depth;
            };
            std::vector<Frame> stack;
            for (int s = 0; s < ns; ++s)
                stack.push_back(
                    {w0 + (w1 - w0) * s / ns, w0 + (w1 - w0) * (s + 1) / ns, 0});

            while (!stack.empty()) {
                Frame f = stack.back();
                stack.pop_back();
                const auto ba = branches(f.a);
                const auto bb = branches(f.b);
                if (ba.empty() && bb.empty()) continue;
                if (ba.size() != bb.size()) {
                    if (f.b - f.a > 1e-11 && f.depth <= 48) {
                        const double m = 0.5 * (f.a + f.b);
                        stack.push_back({f.a, m, f.depth + 1});
                        stack.push_back({m, f.b, f.depth + 1});
                    }
                    continue;
                }
                bool refined = false;
                for (size_t r = 0; r < ba.size(); ++r) {
                    const double va = ba[r].second, vb = bb[r].second;
                    if (!std::isfinite(va) || !std::isfinite(vb)) continue;
                    if ((va < 0) == (vb < 0)) continue;
                    if (f.b - f.a > 1e-11 && f.depth <= 48) {
                        const double m = 0.5 * (f.a + f.b);
                        stack.push_back({f.a, m, f.depth + 1});
                        stack.push_back({m, f.b, f.depth + 1});
                        refined = true;
                        break;
                    }
                    // converged: concurrency at branch r
                    const double c_star = 0.5 * (f.a + f.b);
                    const double theta = 0.5 * (ba[r].first + bb[r].first);
                    out.push_back({c_star, theta, GEvent::SrcConcurrency, {i, j, k}});
                }
                (void)refined;
            }
        }
    }
}

// ---- aligned equal-clearance junction swaps -------------------------------

// When two junction vertices with (near-)equal clearance become collinear
// with the pivot, the pinned transitions anchored at them swap angular
// order. With distinct clearances the lower structure is occluded and the
// swap is invisible, so only near-ties are enumerated.
void vertex_swap_events(const Ctx& ctx, std::vector<RawEvent>& out) {
    struct Vert {
        int id;
        Point2 p;
        double r;
        std::vector<int> arcs;
    };
    std::map<int, Vert> verts;
    for (size_t j = 0; j < ctx.geom.size(); ++j) {
        const EdgeGeom& g = ctx.geom[j];
        for (int side = 0; side < 2; ++side) {
            const int vid = side ? g.vB : g.vA;
            auto& v = verts[vid];
            v.id = vid;
            v.p = side ? g.B : g.A;
            v.r = side ? g.rB : g.rA;
            v.arcs.push_back(static_cast<int>(j));
        }
    }
    std::vector<const Vert*> by_r;
    for (auto& [id, v] : verts) by_r.push_back(&v);
    std::sort(by_r.begin(), by_r.end(),
              [](const Vert* a, const Vert* b) { return a->r < b->r; });
    for (size_t i = 0; i < by_r.size(); ++i) {
        for (size_t j = i + 1; j < by_r.size(); ++j) {
            const Vert& a = *by_r[i];
            const Vert& b = *by_r[j];
            if (b.r - a.r > 1e-6 * (1.0 + a.r)) break;
            const auto c = aligned_c(a.p, b.p);
            if (!c || *c < kEpsRoot || *c > ctx.L - kEpsRoot) continue;
            RawEvent ev;
            ev.x = *c;
            ev.angle = Ctx::angle_from(a.p, *c);
            if (ev.angle <= 0 || ev.angle >= kPi) continue;
            ev.src = GEvent::SrcVertexSwap;
            ev.involved = a.arcs;
            ev.involved.insert(ev.involved.end(), b.arcs.begin(), b.arcs.end());
            out.push_back(std::move(ev));
        }
    }
}

}  // namespace

std::vector<GEvent> enumerate_events(const EdgeSet& es, double length) {
    Ctx ctx(es, length);
    const int nE = static_cast<int>(es.edges.size());
    Blocks blk(ctx, std::clamp(nE / 4, 8, 64));

    std::vector<RawEvent> raw;
    collapse_events(ctx, raw);
    endpoint_events(ctx, blk, raw);
    junction_events(ctx, raw);
    tangency_events(ctx, blk, raw);
    concurrency_events(ctx, blk, raw);
    vertex_swap_events(ctx, raw);

    for (RawEvent& r : raw) std::sort(r.involved.begin(), r.involved.end());
    std::sort(raw.begin(), raw.end(), [](const RawEvent& a, const RawEvent& b) {
        if (a.x != b.x) return a.x < b.x;
        if (a.angle != b.angle) return a.angle < b.angle;
        return a.involved < b.involved;
    });

    // Coincidence handling: same (x, angle) within kEpsRoot. Events sharing
    // arcs merge benignly; otherwise (or when 4+ curves tie for the top
    // value there) the input is degenerate.
    std::vector<GEvent> events;
    size_t g = 0;
    while (g < raw.size()) {
        size_t h = g + 1;
        while (h < raw.size() && raw[h].x - raw[g].x <= kEpsRoot &&
               std::fabs(raw[h].angle - raw[g].angle) <= kEpsRoot)
            ++h;
        std::set<int> arcs(raw[g].involved.begin(), raw[g].involved.end());
        for (size_t t = g + 1; t < h; ++t)
            arcs.insert(raw[t].involved.begin(), raw[t].involved.end());
        if (h - g > 1) {
            // Degeneracy test at the coincidence: four or more simultaneous
            // LEC centers on the ray, counted as distinct landing points at
            // the top value, or one landing point carried by >= 4 arcs (a
            // degree-4 junction, i.e. cocircular sites). Collapsed (edge-on)
            // edges contribute their best endpoint.
            const double c = raw[g].x;
            const double th = raw[g].angle;
            double top = 0.0;
            std::vector<std::pair<Point2, double>> landings;
            for (int e = 0; e < nE; ++e) {
                const auto cv = ctx.curve(e, c);
                if (cv && cv->contains(th, 1e-9)) {
                    landings.push_back({cv->point_at(th), cv->value(th)});
                    top = std::max(top, landings.back().second);
                } else if (!cv) {
                    const double dline = std::fabs(es.edges[e].line.eval({c, 0.0}));
                    if (dline <= 1e-9) {
                        const bool hiB = ctx.geom[e].rB >= ctx.geom[e].rA;
                        landings.push_back({hiB ? ctx.geom[e].B : ctx.geom[e].A,
                                            std::max(ctx.geom[e].rA, ctx.geom[e].rB)});
                        top = std::max(top, landings.back().second);
                    }
                }
            }
            std::vector<std::pair<Point2, int>> points;  // distinct tops
            for (auto& [p, v] : landings) {
                if (v < top - 1e-9 * (1.0 + top)) continue;
                bool found = false;
                for (auto& [q, mult] : points) {
                    if (dist(p, q) <= 1e-9) {
                        ++mult;
                        found = true;
                    }
                }
                if (!found) points.push_back({p, 1});
            }
            int max_mult = 0;
            for (auto& [q, mult] : points) max_mult = std::max(max_mult, mult);
            if (points.size() >= 4 || max_mult >= 4) {
#ifdef LEC_DEBUG_EVENTS
                std::fprintf(stderr, "coincidence at x=%.15f th=%.15f pts=%zu:\n",
                             raw[g].x, raw[g].angle, points.size());
                for (size_t t = g; t < h; ++t) {
                    std::fprintf(stderr, "  src=%d x=%.15f th=%.15f involved:",
                                 (int)raw[t].src, raw[t].x, raw[t].angle);
                    for (int a : raw[t].involved) std::fprintf(stderr, " %d", a);
                    std::fprintf(stderr, "\n");
                }
#endif
                std::set<int> sites;
                for (int e : arcs) {
                    sites.insert(es.edges[e].sites[0]);
                    if (es.edges[e].sites[1] >= 0) sites.insert(es.edges[e].sites[1]);
                }
                throw DegeneracyDetected({sites.begin(), sites.end()});
            }
        }
        GEvent ev;
        ev.x = raw[g].x;
        ev.angle = raw[g].angle;
        ev.source = raw[g].src;
        ev.involved.assign(arcs.begin(), arcs.end());
        events.push_back(std::move(ev));
        g = h;
    }

    // Chain-merge clusters of events packed tighter than the probing
    // resolution (near-degenerate but separable inputs): the intervals
    // between them cannot be probed meaningfully, and no query can land
    // inside them either.
    std::vector<GEvent> merged;
    double chain_start = -1.0;
    for (GEvent& ev : events) {
        if (!merged.empty() && ev.x - merged.back().x <= 3e-8 &&
            std::fabs(ev.angle - merged.back().angle) <= 1e-5 &&
            ev.x - chain_start <= 1e-6) {
            GEvent& prev = merged.back();
            std::set<int> inv(prev.involved.begin(), prev.involved.end());
            inv.insert(ev.involved.begin(), ev.involved.end());
            prev.involved.assign(inv.begin(), inv.end());
            prev.x = ev.x;  // apply once everything in the chain has happened
            continue;
        }
        chain_start = ev.x;
        merged.push_back(std::move(ev));
    }
    return merged;
}

}  // namespace lec
