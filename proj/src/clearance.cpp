#include "lec/clearance.hpp"

#include <algorithm>
#include <cmath>

namespace lec {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

double normalize_angle(double theta) {
    theta = std::fmod(theta, kTwoPi);
    if (theta < 0.0) theta += kTwoPi;
    if (theta >= kTwoPi) theta = 0.0;
    return theta;
}

ArcByT arc_for_edge(const Edge& e) {
    ArcByT a;
    a.edge = e.id;
    a.rho = e.rho;
    a.t_lo = e.t_lo;
    a.t_hi = e.t_hi;
    return a;
}

YCurve project_to_y(const ArcByT& arc, const EdgeSet& es) {
    const Edge& e = es.edges[arc.edge];
    const double uy = e.line.direction().y;

    YCurve c;
    c.edge = arc.edge;
    if (std::fabs(uy) <= kEpsGeom) {
        c.degenerate = true;
        c.degen_y = e.foot.y;
        c.degen_value = std::max(arc.value(arc.t_lo), arc.value(arc.t_hi));
        c.y_lo = c.y_hi = c.degen_y;
        return c;
    }

    // t = (y - foot.y)/uy, so q(y) = ((y - y0)/uy)^2 + rho^2.
    const double y0 = e.foot.y;
    const double inv2 = 1.0 / (uy * uy);
    c.qa = inv2;
    c.qb = -2.0 * y0 * inv2;
    c.qc = y0 * y0 * inv2 + arc.rho * arc.rho;
    const double ya = y0 + arc.t_lo * uy;
    const double yb = y0 + arc.t_hi * uy;
    c.y_lo = std::min(ya, yb);
    c.y_hi = std::max(ya, yb);
    return c;
}

bool PivotCurve::contains(double theta, double slack) const {
    double d = theta - th_start;
    d = std::fmod(d, kTwoPi);
    if (d < 0.0) d += kTwoPi;
    if (d <= width + slack) return true;
    return d >= kTwoPi - slack;  // just below the start, within slack
}

Point2 PivotCurve::point_at(double theta) const {
    const Point2 w{std::cos(theta), std::sin(theta)};
    const double e = normal.x * w.x + normal.y * w.y;
    const double r = h / e;
    return {pivot.x + r * w.x, pivot.y + r * w.y};
}

std::array<double, 3> PivotCurve::num_quadratic() const {
    const Point2 p = site - pivot;
    const double p2 = sqnorm(p);
    return {h * h - 2.0 * h * p.x * normal.x + p2 * normal.x * normal.x,
            -2.0 * h * (p.x * normal.y + p.y * normal.x) + 2.0 * p2 * normal.x * normal.y,
            h * h - 2.0 * h * p.y * normal.y + p2 * normal.y * normal.y};
}

std::array<double, 3> PivotCurve::den_quadratic() const {
    return {normal.x * normal.x, 2.0 * normal.x * normal.y, normal.y * normal.y};
}

std::optional<std::array<double, 4>> PivotCurve::slope_form() const {
    if (std::fabs(normal.y) <= kEpsGeom) return std::nullopt;
    const auto n = num_quadratic();
    const double s = 1.0 / (normal.y * normal.y);
    return std::array<double, 4>{n[2] * s, n[1] * s, n[0] * s, -normal.x / normal.y};
}

PivotCurve project_to_pivot(const ArcByT& arc, const EdgeSet& es, Point2 v) {
    const Edge& e = es.edges[arc.edge];
    if (std::fabs(e.line.eval(v)) <= kEpsGeom * (1.0 + norm(v))) throw CollinearPivot();

    PivotCurve c;
    c.edge = arc.edge;
    c.pivot = v;
    c.site = es.sites[e.sites[0]];
    c.normal = {e.line.a, e.line.b};
    c.h = e.line.a * (e.foot.x - v.x) + e.line.b * (e.foot.y - v.y);

    // geom endpoints are snapped to the shared vertex table, so edges meeting
    // at a vertex get bit-identical domain angles
    const Point2 pa = e.geom.a - v;
    const Point2 pb = e.geom.b - v;
    const double ta = normalize_angle(std::atan2(pa.y, pa.x));
    const double tb = normalize_angle(std::atan2(pb.y, pb.x));
    double d = tb - ta;
    if (d < 0.0) d += kTwoPi;
    if (d <= 3.14159265358979323846) {
        c.th_start = ta;
        c.width = d;
    } else {
        c.th_start = tb;
        c.width = kTwoPi - d;
    }
    return c;
}

std::vector<CurveHit> curve_intersections(const YCurve& a, const YCurve& b) {
    if (a.degenerate || b.degenerate) return {};
    const double lo = std::max(a.y_lo, b.y_lo);
    const double hi = std::min(a.y_hi, b.y_hi);
    if (!(lo < hi)) return {};

    const Poly diff{{a.qc - b.qc, a.qb - b.qb, a.qa - b.qa}};
    const double scale = std::max({std::fabs(a.qa), std::fabs(a.qb), std::fabs(a.qc),
                                   std::fabs(b.qa), std::fabs(b.qb), std::fabs(b.qc), 1.0});
    if (diff.max_abs_coeff() <= 1e-14 * scale) throw IdenticalCurves();

    std::vector<CurveHit> out;
    for (const PolyRoot& r : poly_roots(diff, lo, hi, kEpsRoot))
        out.push_back({r.x, r.multiplicity >= 2});
    return out;
}

std::optional<std::pair<double, double>> common_domain(const PivotCurve& a,
                                                       const PivotCurve& b) {
    // Intersect [a.th_start, +a.width] with [b.th_start, +b.width] on the
    // circle; widths < pi guarantee at most one component.
    double rel = b.th_start - a.th_start;
    rel = std::fmod(rel, kTwoPi);
    if (rel < 0.0) rel += kTwoPi;
    double lo, hi;
    if (rel <= a.width) {
        lo = rel;
        hi = std::min(a.width, rel + b.width);
    } else if (rel + b.width >= kTwoPi) {
        lo = 0.0;
        hi = std::min(a.width, rel + b.width - kTwoPi);
    } else {
        return std::nullopt;
    }
    if (hi < lo) return std::nullopt;
    return std::make_pair(a.th_start + lo, hi - lo);  // (start, width)
}

namespace {

// Homogeneous polynomial sum_k coeff[k] * c^(d-k) * s^k with d = size-1.
std::vector<double> homog_product_diff(const std::array<double, 3>& na,
                                       const std::array<double, 3>& da,
                                       const std::array<double, 3>& nb,
                                       const std::array<double, 3>& db) {
    std::vector<double> out(5, 0.0);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out[i + j] += na[i] * db[j] - nb[i] * da[j];
    return out;
}

std::vector<double> deflate_homog(const std::vector<double>& f, double theta) {
    const double cw = std::cos(theta);
    const double sw = std::sin(theta);
    const size_t d = f.size() - 1;
    std::vector<double> g(d, 0.0);
    if (std::fabs(sw) <= std::fabs(cw)) {
        // F = (s - m c) * G with m = sw/cw; divide the m-chart poly.
        const double m = sw / cw;
        // f as poly in m: f[0] + f[1] m + ...; synthetic division by (m - m0)
        // from the top coefficient down.
        double carry = f[d];
        for (size_t k = d; k-- > 0;) {
            g[k] = carry;
            carry = f[k] + carry * m;
        }
        // remainder `carry` is the (near-zero) pinned-root residual
    } else {
        const double u = cw / sw;
        double carry = f[0];
        for (size_t k = 0; k + 1 < f.size(); ++k) {
            g[k] = carry;
            carry = f[k + 1] + carry * u;
        }
    }
    return g;
}

// All projective roots of a homogeneous polynomial in (cos,sin), reported as
// direction angles in [0, pi) with multiplicities.
std::vector<PolyRoot> homog_roots(const std::vector<double>& f) {
    const size_t d = f.size() - 1;
    std::vector<double> rev(f.rbegin(), f.rend());
    const Poly pm{f};        // chart m = s/c, |m| <= 1
    const Poly pu{rev};      // chart u = c/s, |u| < 1

    std::vector<PolyRoot> out;
    for (const PolyRoot& r : poly_roots(pm, -1.0, 1.0, 1e-12))
        out.push_back({normalize_angle(std::atan2(r.x, 1.0)), r.multiplicity});
    for (const PolyRoot& r : poly_roots(pu, -1.0, 1.0, 1e-12))
        out.push_back({normalize_angle(std::atan2(1.0, r.x)), r.multiplicity});
    (void)d;
    return out;
}

}  // namespace

std::vector<CurveHit> curve_intersections(const PivotCurve& a, const PivotCurve& b,
                                          std::optional<double> shared_dir) {
    const auto dom = common_domain(a, b);
    if (!dom) return {};

    std::vector<double> f =
        homog_product_diff(a.num_quadratic(), a.den_quadratic(), b.num_quadratic(),
                           b.den_quadratic());

    double scale = 0.0;
    for (double c : a.num_quadratic()) scale = std::max(scale, std::fabs(c));
    for (double c : b.num_quadratic()) scale = std::max(scale, std::fabs(c));
    scale = std::max(scale, 1e-30);
    double fmax = 0.0;
    for (double c : f) fmax = std::max(fmax, std::fabs(c));
    if (fmax <= 1e-13 * scale) throw IdenticalCurves();

    if (shared_dir) f = deflate_homog(f, *shared_dir);

    const auto [lo, width] = *dom;
    std::vector<CurveHit> out;
    for (const PolyRoot& root : homog_roots(f)) {
        for (int k = 0; k < 2; ++k) {
            const double theta = normalize_angle(root.x + k * 3.14159265358979323846);
            double rel = theta - lo;
            rel = std::fmod(rel, kTwoPi);
            if (rel < 0.0) rel += kTwoPi;
            if (rel > width) continue;
            if (shared_dir) {
                double dsh = std::fabs(theta - normalize_angle(*shared_dir));
                dsh = std::min(dsh, kTwoPi - dsh);
                if (dsh <= 1e-9) continue;  // the pinned junction root itself
            }
            // Guard against spurious roots introduced by squaring.
            const double va = a.value(theta);
            const double vb = b.value(theta);
            if (std::fabs(va - vb) > 1e-8 * (1.0 + std::max(va, vb))) continue;
            out.push_back({theta, root.multiplicity >= 2});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const CurveHit& x, const CurveHit& y) { return x.param < y.param; });
    // Chart duplicates collapse to one hit.
    std::vector<CurveHit> dedup;
    for (const CurveHit& hit : out) {
        if (!dedup.empty() && std::fabs(hit.param - dedup.back().param) <= 2e-10)
            dedup.back().tangential = dedup.back().tangential || hit.tangential;
        else
            dedup.push_back(hit);
    }
    return dedup;
}

}  // namespace lec
