#include "lec/geometry.hpp"

#include <algorithm>
#include <cassert>

namespace lec {

double dist(Point2 p, Point2 q) { return std::hypot(p.x - q.x, p.y - q.y); }

Line2 Line2::from_coeffs(double a, double b, double c) {
    const double n = std::hypot(a, b);
    if (!(n > 0.0)) throw std::invalid_argument("Line2: (a,b) must be nonzero");
    a /= n;
    b /= n;
    c /= n;
    if (a < 0.0 || (a == 0.0 && b < 0.0)) {
        a = -a;
        b = -b;
        c = -c;
    }
    if (a == 0.0) a = 0.0;  // normalize -0.0
    if (b == 0.0) b = 0.0;
    if (c == 0.0) c = 0.0;
    return Line2{a, b, c};
}

Line2 Line2::through(Point2 p, Point2 q) {
    return from_coeffs(q.y - p.y, p.x - q.x, cross(q, p));
}

Line2 Line2::horizontal(double y) { return from_coeffs(0.0, 1.0, -y); }

LineSegHit line_segment_intersection(const Line2& l, const Segment2& s) {
    const double fa = l.eval(s.a);
    const double fb = l.eval(s.b);
    const double scale = 1.0 + std::max(norm(s.a), norm(s.b));
    const double tol = kEpsGeom * scale;

    if (std::fabs(fa) <= tol && std::fabs(fb) <= tol) {
        LineSegHit hit;
        hit.kind = LineSegHit::Overlap;
        return hit;
    }
    if ((fa > tol && fb > tol) || (fa < -tol && fb < -tol)) return {};

    LineSegHit hit;
    hit.kind = LineSegHit::At;
    if (std::fabs(fa) <= tol) {
        hit.t = 0.0;
        hit.p = s.a;
    } else if (std::fabs(fb) <= tol) {
        hit.t = 1.0;
        hit.p = s.b;
    } else {
        hit.t = std::clamp(fa / (fa - fb), 0.0, 1.0);
        hit.p = s.a + hit.t * (s.b - s.a);
    }
    return hit;
}

int Poly::degree() const {
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
        if (coeffs[static_cast<size_t>(i)] != 0.0) return i;
    return -1;
}

double Poly::eval(double x) const {
    double v = 0.0;
    for (size_t i = coeffs.size(); i-- > 0;) v = v * x + coeffs[i];
    return v;
}

Poly Poly::derivative() const {
    Poly d;
    if (coeffs.size() <= 1) return d;
    d.coeffs.resize(coeffs.size() - 1);
    for (size_t i = 1; i < coeffs.size(); ++i)
        d.coeffs[i - 1] = coeffs[i] * static_cast<double>(i);
    return d;
}

double Poly::max_abs_coeff() const {
    double m = 0.0;
    for (double c : coeffs) m = std::max(m, std::fabs(c));
    return m;
}

namespace {

// Bisection with Newton acceleration on a bracketing interval [a,b] with
// p(a), p(b) of opposite sign. Never leaves the bracket, so it always
// converges; Newton only shortcuts the final iterations.
double refine_root(const Poly& p, const Poly& dp, double a, double b, double fa, double) {
    double x = 0.5 * (a + b);
    for (int iter = 0; iter < 128; ++iter) {
        const double fx = p.eval(x);
        if (fx == 0.0) return x;
        if ((fa < 0.0) == (fx < 0.0)) {
            a = x;
            fa = fx;
        } else {
            b = x;
        }
        const double d = dp.eval(x);
        double next = (d != 0.0) ? x - fx / d : x;
        if (!(next > a && next < b)) next = 0.5 * (a + b);
        if (std::fabs(next - x) <= 1e-16 * (1.0 + std::fabs(x))) return next;
        x = next;
    }
    return x;
}

}  // namespace

std::vector<PolyRoot> poly_roots(const Poly& p, double lo, double hi, double tol) {
    std::vector<PolyRoot> out;
    const int deg = p.degree();
    if (deg <= 0 || !(lo < hi)) return out;

    if (deg == 1) {
        const double r = -p.coeffs[0] / p.coeffs[1];
        if (r >= lo - tol && r <= hi + tol) out.push_back({std::clamp(r, lo, hi), 1});
        return out;
    }

    const Poly dp = p.derivative();

    // Critical points partition [lo,hi] into monotone pieces.
    std::vector<double> knots;
    knots.push_back(lo);
    for (const PolyRoot& c : poly_roots(dp, lo, hi, tol))
        if (c.x > lo && c.x < hi) knots.push_back(c.x);
    knots.push_back(hi);
    std::sort(knots.begin(), knots.end());

    const double fscale = tol * (1.0 + p.max_abs_coeff());

    std::vector<double> roots;
    std::vector<int> mult;
    auto push_root = [&](double r, int m) {
        if (!roots.empty() && std::fabs(r - roots.back()) < tol) {
            mult.back() = std::max(mult.back(), m);
            return;
        }
        roots.push_back(r);
        mult.push_back(m);
    };

    for (size_t i = 0; i + 1 < knots.size(); ++i) {
        const double a = knots[i];
        const double b = knots[i + 1];
        const double fa = p.eval(a);
        const double fb = p.eval(b);

        if (i == 0 && std::fabs(fa) <= fscale) push_root(a, 1);

        if ((fa > 0.0 && fb < 0.0) || (fa < 0.0 && fb > 0.0)) {
            push_root(refine_root(p, dp, a, b, fa, fb), 1);
        } else if (std::fabs(fb) <= fscale) {
            // Either a simple root sitting on a knot or a tangency at a
            // critical point; the latter is an even-multiplicity root.
            const bool at_crit = (i + 2 < knots.size());
            push_root(b, at_crit ? 2 : 1);
        }
    }

    out.reserve(roots.size());
    for (size_t i = 0; i < roots.size(); ++i) out.push_back({roots[i], mult[i]});
    return out;
}

}  // namespace lec
