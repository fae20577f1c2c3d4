#include "lec/diagram.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <map>
#include <unordered_map>

namespace lec {

std::vector<Point2> convex_hull(const std::vector<Point2>& points) {
    if (points.size() < 3) throw DegenerateInput("convex hull needs at least 3 points");
    std::vector<int> idx(points.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        if (points[a].x != points[b].x) return points[a].x < points[b].x;
        return points[a].y < points[b].y;
    });
    idx.erase(std::unique(idx.begin(), idx.end(),
                          [&](int a, int b) { return points[a] == points[b]; }),
              idx.end());

    auto build = [&](auto begin, auto end) {
        std::vector<int> chain;
        for (auto it = begin; it != end; ++it) {
            while (chain.size() >= 2 &&
                   orient2d(points[chain[chain.size() - 2]], points[chain.back()], points[*it]) <= 0)
                chain.pop_back();
            chain.push_back(*it);
        }
        return chain;
    };

    std::vector<int> lower = build(idx.begin(), idx.end());
    std::vector<int> upper = build(idx.rbegin(), idx.rend());

    std::vector<Point2> hull;
    for (size_t i = 0; i + 1 < lower.size(); ++i) hull.push_back(points[lower[i]]);
    for (size_t i = 0; i + 1 < upper.size(); ++i) hull.push_back(points[upper[i]]);
    if (hull.size() < 3) throw DegenerateInput("all points collinear");
    return hull;
}

bool point_in_convex_polygon(const std::vector<Point2>& poly, Point2 p) {
    for (size_t i = 0; i < poly.size(); ++i) {
        if (orient2d(poly[i], poly[(i + 1) % poly.size()], p) < 0) return false;
    }
    return true;
}

namespace {

constexpr int kGhost = -1;

struct Tri {
    std::array<int, 3> v{kGhost, kGhost, kGhost};
    std::array<int, 3> n{-1, -1, -1};  // neighbor opposite v[i]
    bool alive = false;

    int ghost_pos() const {
        for (int i = 0; i < 3; ++i)
            if (v[i] == kGhost) return i;
        return -1;
    }
    int vertex_pos(int vi) const {
        for (int i = 0; i < 3; ++i)
            if (v[i] == vi) return i;
        return -1;
    }
};

class Delaunay {
public:
    explicit Delaunay(const std::vector<Point2>& pts) : pts_(pts) {
        if (pts.size() < 3) throw DegenerateInput("voronoi needs at least 3 points");
        std::vector<int> order = morton_order();
        size_t used = init_first_triangle(order);
        for (size_t k = 0; k < order.size(); ++k) {
            if (consumed_[order[k]]) continue;
            insert(order[k]);
            (void)used;
        }
    }

    const std::vector<Tri>& tris() const { return tris_; }
    const std::vector<Point2>& pts() const { return pts_; }

private:
    const std::vector<Point2>& pts_;
    std::vector<Tri> tris_;
    std::vector<char> consumed_;
    int last_real_ = -1;

    std::vector<int> morton_order() const {
        double xmin = pts_[0].x, xmax = pts_[0].x, ymin = pts_[0].y, ymax = pts_[0].y;
        for (const Point2& p : pts_) {
            xmin = std::min(xmin, p.x);
            xmax = std::max(xmax, p.x);
            ymin = std::min(ymin, p.y);
            ymax = std::max(ymax, p.y);
        }
        const double sx = xmax > xmin ? 1.0 / (xmax - xmin) : 0.0;
        const double sy = ymax > ymin ? 1.0 / (ymax - ymin) : 0.0;
        auto interleave = [](uint32_t a) {
            uint64_t w = a;
            w = (w | (w << 16)) & 0x0000FFFF0000FFFFull;
            w = (w | (w << 8)) & 0x00FF00FF00FF00FFull;
            w = (w | (w << 4)) & 0x0F0F0F0F0F0F0F0Full;
            w = (w | (w << 2)) & 0x3333333333333333ull;
            w = (w | (w << 1)) & 0x5555555555555555ull;
            return w;
        };
        std::vector<std::pair<uint64_t, int>> keyed(pts_.size());
        for (size_t i = 0; i < pts_.size(); ++i) {
            const auto qx = static_cast<uint32_t>((pts_[i].x - xmin) * sx * 65535.0);
            const auto qy = static_cast<uint32_t>((pts_[i].y - ymin) * sy * 65535.0);
            keyed[i] = {interleave(qx) | (interleave(qy) << 1), static_cast<int>(i)};
        }
        std::sort(keyed.begin(), keyed.end());
        std::vector<int> order(pts_.size());
        for (size_t i = 0; i < pts_.size(); ++i) order[i] = keyed[i].second;
        return order;
    }

    size_t init_first_triangle(const std::vector<int>& order) {
        consumed_.assign(pts_.size(), 0);
        const int a = order[0];
        int b = -1;
        for (size_t i = 1; i < order.size(); ++i) {
            if (pts_[order[i]] != pts_[a]) {
                b = order[i];
                break;
            }
        }
        int c = -1;
        if (b >= 0) {
            for (size_t i = 1; i < order.size(); ++i) {
                if (order[i] == b) continue;
                if (orient2d(pts_[a], pts_[b], pts_[order[i]]) != 0) {
                    c = order[i];
                    break;
                }
            }
        }
        if (c < 0) throw DegenerateInput("all points collinear");

        std::array<int, 3> t{a, b, c};
        if (orient2d(pts_[a], pts_[b], pts_[c]) < 0) std::swap(t[1], t[2]);

        const int real = new_tri({t[0], t[1], t[2]});
        const int gab = new_tri({t[1], t[0], kGhost});
        const int gbc = new_tri({t[2], t[1], kGhost});
        const int gca = new_tri({t[0], t[2], kGhost});
        link_all({real, gab, gbc, gca});
        last_real_ = real;
        consumed_[a] = consumed_[b] = consumed_[c] = 1;
        return 3;
    }

    int new_tri(std::array<int, 3> v) {
        Tri t;
        t.v = v;
        t.alive = true;
        tris_.push_back(t);
        return static_cast<int>(tris_.size()) - 1;
    }

    // Adjacency wiring by undirected-edge matching; used only at startup.
    void link_all(const std::vector<int>& ids) {
        std::map<std::pair<int, int>, std::pair<int, int>> half;  // edge -> (tri, opp)
        for (int id : ids) {
            for (int i = 0; i < 3; ++i) {
                int u = tris_[id].v[(i + 1) % 3];
                int w = tris_[id].v[(i + 2) % 3];
                if (u > w) std::swap(u, w);
                auto key = std::make_pair(u, w);
                auto it = half.find(key);
                if (it == half.end()) {
                    half[key] = {id, i};
                } else {
                    tris_[id].n[i] = it->second.first;
                    tris_[it->second.first].n[it->second.second] = id;
                }
            }
        }
    }

    bool in_circumcircle(const Tri& t, Point2 p) const {
        const int g = t.ghost_pos();
        if (g < 0) return incircle(pts_[t.v[0]], pts_[t.v[1]], pts_[t.v[2]], p) > 0;
        const Point2 a = pts_[t.v[(g + 1) % 3]];
        const Point2 b = pts_[t.v[(g + 2) % 3]];
        const int o = orient2d(a, b, p);
        if (o != 0) return o > 0;
        // On the hull edge's line: inside iff strictly between the endpoints.
        return dot(p - a, b - a) > 0 && dot(p - b, a - b) > 0;
    }

    int locate(Point2 p) const {
        int cur = last_real_;
        if (tris_[cur].ghost_pos() >= 0) cur = tris_[cur].n[2];
        int prev = -1;
        for (size_t step = 0; step < tris_.size() * 4 + 16; ++step) {
            const Tri& t = tris_[cur];
            if (t.ghost_pos() >= 0) return cur;  // outside the current hull
            int next = -1;
            for (int i = 0; i < 3; ++i) {
                const int nb = t.n[i];
                if (nb == prev) continue;
                if (orient2d(pts_[t.v[(i + 1) % 3]], pts_[t.v[(i + 2) % 3]], p) < 0) {
                    next = nb;
                    break;
                }
            }
            if (next < 0) return cur;
            prev = cur;
            cur = next;
        }
        throw std::runtime_error("delaunay walk failed to terminate");
    }

    void insert(int pi) {
        const Point2 p = pts_[pi];
        int seed = locate(p);
        if (!in_circumcircle(tris_[seed], p)) {
            // Point exactly on the hull boundary between two vertices can land
            // on a real triangle whose ghost neighbor holds the containing edge.
            bool found = false;
            for (int i = 0; i < 3 && !found; ++i) {
                const int nb = tris_[seed].n[i];
                if (nb >= 0 && in_circumcircle(tris_[nb], p)) {
                    seed = nb;
                    found = true;
                }
            }
            if (!found) throw DegenerateInput("duplicate point in input");
        }

        // Cavity = connected component of circumcircle-containing triangles.
        std::vector<int> cavity;
        std::vector<int> stack{seed};
        std::vector<char> in_cav(tris_.size(), 0);
        in_cav[seed] = 1;
        while (!stack.empty()) {
            const int t = stack.back();
            stack.pop_back();
            cavity.push_back(t);
            for (int i = 0; i < 3; ++i) {
                const int nb = tris_[t].n[i];
                if (nb < 0 || in_cav[nb]) continue;
                if (in_circumcircle(tris_[nb], p)) {
                    in_cav[nb] = 1;
                    stack.push_back(nb);
                }
            }
        }
        for (int t : cavity) {
            for (int i = 0; i < 3; ++i) {
                if (tris_[t].v[i] >= 0 && pts_[tris_[t].v[i]] == p)
                    throw DegenerateInput("duplicate point in input");
            }
        }

        struct Boundary {
            int u, w;      // directed edge of the cavity boundary
            int outside;   // neighbor triangle beyond it
        };
        std::vector<Boundary> rim;
        for (int t : cavity) {
            for (int i = 0; i < 3; ++i) {
                const int nb = tris_[t].n[i];
                if (nb >= 0 && in_cav[nb]) continue;
                rim.push_back({tris_[t].v[(i + 1) % 3], tris_[t].v[(i + 2) % 3], nb});
            }
        }
        for (int t : cavity) tris_[t].alive = false;

        std::unordered_map<int, int> start2tri(rim.size() * 2);
        std::vector<int> created;
        created.reserve(rim.size());
        for (const Boundary& e : rim) {
            const int nt = new_tri({e.u, e.w, pi});
            created.push_back(nt);
            start2tri[e.u + 2] = nt;  // +2 shifts kGhost to a valid key
        }
        for (size_t k = 0; k < rim.size(); ++k) {
            const int nt = created[k];
            tris_[nt].n[2] = rim[k].outside;
            if (rim[k].outside >= 0) {
                Tri& out = tris_[rim[k].outside];
                for (int i = 0; i < 3; ++i) {
                    int u = out.v[(i + 1) % 3];
                    int w = out.v[(i + 2) % 3];
                    if (u == rim[k].w && w == rim[k].u) out.n[i] = nt;
                }
            }
            const int right = start2tri.at(rim[k].w + 2);
            tris_[nt].n[0] = right;     // edge (w, pi)
            tris_[right].n[1] = nt;     // its edge (pi, w)
        }
        last_real_ = created.empty() ? last_real_ : created.front();
        for (int t : created) {
            if (tris_[t].ghost_pos() < 0) {
                last_real_ = t;
                break;
            }
        }
    }
};

Point2 circumcenter(Point2 a, Point2 b, Point2 c) {
    const double bx = b.x - a.x, by = b.y - a.y;
    const double cx = c.x - a.x, cy = c.y - a.y;
    const double d = 2.0 * (bx * cy - by * cx);
    const double b2 = bx * bx + by * by;
    const double c2 = cx * cx + cy * cy;
    return {a.x + (cy * b2 - by * c2) / d, a.y + (bx * c2 - cx * b2) / d};
}

}  // namespace

RawVoronoi voronoi(const std::vector<Point2>& points) {
    Delaunay dt(points);
    const auto& tris = dt.tris();

    RawVoronoi out;
    std::vector<int> vert_of_tri(tris.size(), -1);
    for (size_t t = 0; t < tris.size(); ++t) {
        if (!tris[t].alive || tris[t].ghost_pos() >= 0) continue;
        RawVoronoi::Vertex v;
        v.sites = tris[t].v;
        v.p = circumcenter(points[tris[t].v[0]], points[tris[t].v[1]], points[tris[t].v[2]]);
        vert_of_tri[t] = static_cast<int>(out.vertices.size());
        out.vertices.push_back(v);
    }

    for (size_t t = 0; t < tris.size(); ++t) {
        if (!tris[t].alive || tris[t].ghost_pos() >= 0) continue;
        for (int i = 0; i < 3; ++i) {
            const int nb = tris[t].n[i];
            if (nb < 0 || !tris[nb].alive) continue;
            const int sa = tris[t].v[(i + 1) % 3];
            const int sb = tris[t].v[(i + 2) % 3];
            if (tris[nb].ghost_pos() < 0) {
                if (nb < static_cast<int>(t)) continue;  // emit each pair once
                RawVoronoi::Edge e;
                e.site_a = std::min(sa, sb);
                e.site_b = std::max(sa, sb);
                e.v0 = vert_of_tri[t];
                e.v1 = vert_of_tri[nb];
                out.edges.push_back(e);
            } else {
                RawVoronoi::Edge e;
                e.site_a = std::min(sa, sb);
                e.site_b = std::max(sa, sb);
                e.v0 = vert_of_tri[t];
                e.v1 = -1;
                const Point2 d = points[sb] - points[sa];
                const double n = norm(d);
                e.ray_dir = {d.y / n, -d.x / n};  // outward: right of the CCW edge
                out.edges.push_back(e);
            }
        }
    }

    std::sort(out.edges.begin(), out.edges.end(), [](const auto& a, const auto& b) {
        return std::make_pair(a.site_a, a.site_b) < std::make_pair(b.site_a, b.site_b);
    });
    return out;
}

namespace {

// Uniform-grid nearest-site lookup; ties broken by smallest index.
class SiteGrid {
public:
    explicit SiteGrid(const std::vector<Point2>& sites) : sites_(sites) {
        xmin_ = ymin_ = std::numeric_limits<double>::max();
        double xmax = -xmin_, ymax = -ymin_;
        for (const Point2& p : sites) {
            xmin_ = std::min(xmin_, p.x);
            ymin_ = std::min(ymin_, p.y);
            xmax = std::max(xmax, p.x);
            ymax = std::max(ymax, p.y);
        }
        res_ = std::max(1, static_cast<int>(std::sqrt(static_cast<double>(sites.size()))));
        inv_w_ = res_ / std::max(xmax - xmin_, 1e-300);
        inv_h_ = res_ / std::max(ymax - ymin_, 1e-300);
        cells_.resize(static_cast<size_t>(res_) * res_);
        for (size_t i = 0; i < sites.size(); ++i)
            cells_[cell_of(sites[i])].push_back(static_cast<int>(i));
        cell_w_ = 1.0 / inv_w_;
        cell_h_ = 1.0 / inv_h_;
    }

    int nearest(Point2 p) const {
        const int cx = clampi(static_cast<int>((p.x - xmin_) * inv_w_));
        const int cy = clampi(static_cast<int>((p.y - ymin_) * inv_h_));
        int best = -1;
        double best_d = std::numeric_limits<double>::max();
        for (int ring = 0; ring < 2 * res_; ++ring) {
            bool any = false;
            for (int dy = -ring; dy <= ring; ++dy) {
                for (int dx = -ring; dx <= ring; ++dx) {
                    if (std::max(std::abs(dx), std::abs(dy)) != ring) continue;
                    const int gx = cx + dx, gy = cy + dy;
                    if (gx < 0 || gy < 0 || gx >= res_ || gy >= res_) continue;
                    any = true;
                    for (int i : cells_[static_cast<size_t>(gy) * res_ + gx]) {
                        const double d = dist(p, sites_[i]);
                        if (d < best_d - kEpsGeom || (std::fabs(d - best_d) <= kEpsGeom && i < best)) {
                            best_d = d;
                            best = i;
                        }
                    }
                }
            }
            if (best >= 0 && ring > 0) {
                // A further ring cannot beat the current best once the ring's
                // nearest possible distance exceeds it.
                const double ring_min = (ring - 1) * std::min(cell_w_, cell_h_);
                if (ring_min > best_d) break;
            }
            if (!any && best >= 0) break;
        }
        return best;
    }

private:
    int clampi(int v) const { return std::clamp(v, 0, res_ - 1); }
    size_t cell_of(Point2 p) const {
        return static_cast<size_t>(clampi(static_cast<int>((p.y - ymin_) * inv_h_))) * res_ +
               clampi(static_cast<int>((p.x - xmin_) * inv_w_));
    }

    const std::vector<Point2>& sites_;
    double xmin_, ymin_, inv_w_, inv_h_, cell_w_, cell_h_;
    int res_;
    std::vector<std::vector<int>> cells_;
};

}  // namespace

EdgeSet build_edge_set(const std::vector<Point2>& points) {
    EdgeSet es;
    es.sites = points;
    es.hull = convex_hull(points);
    const RawVoronoi raw = voronoi(points);
    const size_t h = es.hull.size();

    const double scale = 1.0 + [&] {
        double m = 0.0;
        for (const Point2& p : points) m = std::max(m, norm(p));
        return m;
    }();
    const double eps = kEpsGeom * scale;

    // Shared endpoint id space: circumcenters, then hull vertices, then
    // hull-crossing points registered on demand. Edge geometry snaps to the
    // coordinate table so junction angles agree bit-exactly across edges.
    for (const auto& v : raw.vertices) es.vertices.push_back(v.p);
    for (const Point2& p : es.hull) es.vertices.push_back(p);
    int next_vertex = static_cast<int>(raw.vertices.size() + h);
    std::vector<std::vector<std::pair<double, int>>> side_cross(h);  // (param, id)
    std::vector<double> side_len(h);
    std::vector<Point2> side_dir(h);
    for (size_t i = 0; i < h; ++i) {
        const Point2 d = es.hull[(i + 1) % h] - es.hull[i];
        side_len[i] = norm(d);
        side_dir[i] = (1.0 / side_len[i]) * d;
    }

    auto register_crossing = [&](int side, Point2 p) -> int {
        const double t = dot(p - es.hull[side], side_dir[side]);
        if (t <= eps) return static_cast<int>(raw.vertices.size()) + side;
        if (t >= side_len[side] - eps)
            return static_cast<int>(raw.vertices.size()) + static_cast<int>((side + 1) % h);
        for (auto& [tt, id] : side_cross[side])
            if (std::fabs(tt - t) <= eps) return id;
        side_cross[side].push_back({t, next_vertex});
        es.vertices.push_back(p);
        return next_vertex++;
    };

    // Clip every Voronoi edge (segment or ray) to the closed hull.
    for (const RawVoronoi::Edge& re : raw.edges) {
        const Point2 o = raw.vertices[re.v0].p;
        Point2 u;
        double tmax;
        if (re.v1 >= 0) {
            const Point2 d = raw.vertices[re.v1].p - o;
            tmax = norm(d);
            if (tmax <= eps) continue;
            u = (1.0 / tmax) * d;
        } else {
            u = re.ray_dir;
            tmax = std::numeric_limits<double>::infinity();
        }

        double t0 = 0.0, t1 = tmax;
        int side0 = -1, side1 = -1;
        bool empty = false;
        for (size_t i = 0; i < h && !empty; ++i) {
            const Point2 a = es.hull[i];
            const Point2 n{-side_dir[i].y, side_dir[i].x};  // inward
            const double f0 = dot(o - a, n);
            const double du = dot(u, n);
            if (std::fabs(du) <= kEpsGeom) {
                if (f0 < -eps) empty = true;
                continue;
            }
            const double tc = -f0 / du;
            if (du > 0.0) {
                if (tc > t0) {
                    t0 = tc;
                    side0 = static_cast<int>(i);
                }
            } else {
                if (tc < t1) {
                    t1 = tc;
                    side1 = static_cast<int>(i);
                }
            }
        }
        if (empty || t0 > t1 + eps || !std::isfinite(t1)) continue;

        int va = (side0 < 0) ? re.v0 : register_crossing(side0, o + t0 * u);
        int vb;
        if (side1 < 0) {
            vb = re.v1;  // unclipped far endpoint (segments only)
        } else {
            vb = register_crossing(side1, o + t1 * u);
        }
        if (t1 - t0 <= eps) continue;  // tangent or zero-length leftovers

        Edge e;
        e.kind = EdgeKind::VoronoiEdge;
        e.sites = {re.site_a, re.site_b};
        const Point2 p1 = points[re.site_a];
        const Point2 p2 = points[re.site_b];
        e.foot = 0.5 * (p1 + p2);
        e.rho = 0.5 * dist(p1, p2);
        e.line = Line2::through(o, o + u);
        e.geom = Segment2{es.vertices[va], es.vertices[vb]};
        double ta = e.param_of(e.geom.a);
        double tb = e.param_of(e.geom.b);
        if (ta > tb) {
            std::swap(ta, tb);
            std::swap(e.geom.a, e.geom.b);
            std::swap(va, vb);
        }
        e.t_lo = ta;
        e.t_hi = tb;
        e.vertex_ids = {va, vb};
        es.edges.push_back(e);
    }

    // Hull boundary split at hull vertices and registered crossings.
    SiteGrid grid(points);
    for (size_t i = 0; i < h; ++i) {
        std::vector<std::pair<double, int>> cuts = side_cross[i];
        cuts.push_back({0.0, static_cast<int>(raw.vertices.size() + i)});
        cuts.push_back({side_len[i], static_cast<int>(raw.vertices.size() + (i + 1) % h)});
        std::sort(cuts.begin(), cuts.end());
        const Point2 a = es.hull[i];
        const Line2 line = Line2::through(a, es.hull[(i + 1) % h]);
        for (size_t k = 0; k + 1 < cuts.size(); ++k) {
            if (cuts[k + 1].first - cuts[k].first <= eps) continue;
            const Point2 pa = es.vertices[cuts[k].second];
            const Point2 pb = es.vertices[cuts[k + 1].second];
            const int site = grid.nearest(0.5 * (pa + pb));
            Edge e;
            e.kind = EdgeKind::HullSegment;
            e.sites = {site, -1};
            e.line = line;
            const double f = line.eval(points[site]);
            e.foot = {points[site].x - f * line.a, points[site].y - f * line.b};
            e.rho = std::fabs(f);
            e.geom = Segment2{pa, pb};
            double ta = e.param_of(pa);
            double tb = e.param_of(pb);
            int va = cuts[k].second, vb = cuts[k + 1].second;
            if (ta > tb) {
                std::swap(ta, tb);
                std::swap(e.geom.a, e.geom.b);
                std::swap(va, vb);
            }
            e.t_lo = ta;
            e.t_hi = tb;
            e.vertex_ids = {va, vb};
            e.hull_side = static_cast<int>(i);
            es.edges.push_back(e);
        }
    }

    for (size_t i = 0; i < es.edges.size(); ++i) es.edges[i].id = static_cast<int>(i);
    es.vertex_count = next_vertex;
    return es;
}

}  // namespace lec
