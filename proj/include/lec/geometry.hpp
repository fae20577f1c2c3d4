#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lec {

// Coincidence tolerance for metric decisions (point/line incidence, clipping).
inline constexpr double kEpsGeom = 1e-12;
// Localization tolerance for polynomial roots and event abscissas.
inline constexpr double kEpsRoot = 1e-10;

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Point2& a, const Point2& b) { return !(a == b); }
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
inline double sqnorm(Point2 a) { return a.x * a.x + a.y * a.y; }

double dist(Point2 p, Point2 q);

struct Segment2 {
    Point2 a;
    Point2 b;
    bool degenerate = false;  // zero-length segments must be flagged explicitly
};

// Line {p : a*x + b*y + c = 0} stored canonically: (a,b) unit,
// first nonzero of (a,b) positive.
struct Line2 {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;

    static Line2 from_coeffs(double a, double b, double c);
    static Line2 through(Point2 p, Point2 q);
    static Line2 horizontal(double y);  // y = const

    double eval(Point2 p) const { return a * p.x + b * p.y + c; }
    // Unit direction vector, perpendicular to the canonical normal.
    Point2 direction() const { return {-b, a}; }

    friend bool operator==(const Line2& l, const Line2& r) {
        return l.a == r.a && l.b == r.b && l.c == r.c;
    }
};

struct DegenerateInput : std::runtime_error {
    explicit DegenerateInput(const std::string& what) : std::runtime_error(what) {}
};

// Sign of twice the signed area of (p,q,r): +1 CCW, -1 CW, 0 collinear.
// Exact: fast double filter, adaptive/exact fallback on near-zero.
int orient2d(Point2 p, Point2 q, Point2 r);

// +1 if d lies strictly inside the circumcircle of CCW triangle (a,b,c),
// -1 strictly outside, 0 cocircular. Exact like orient2d.
int incircle(Point2 a, Point2 b, Point2 c, Point2 d);

struct LineSegHit {
    enum Kind { None, At, Overlap } kind = None;
    Point2 p{};     // valid for kind == At
    double t = 0.0; // segment parameter in [0,1], valid for kind == At
};

LineSegHit line_segment_intersection(const Line2& l, const Segment2& s);

// Dense univariate polynomial, coefficients[i] multiplies x^i. Degree <= 4
// is all the callers need, but the solver is generic over small degrees.
struct Poly {
    std::vector<double> coeffs;

    static Poly from_coeffs(std::vector<double> c) { return Poly{std::move(c)}; }
    int degree() const;
    double eval(double x) const;
    Poly derivative() const;
    double max_abs_coeff() const;
};

struct PolyRoot {
    double x = 0.0;
    int multiplicity = 1;  // 2 flags a tangency (double root)
};

// All real roots in [lo,hi], ascending, deduplicated at distance < tol.
// Root isolation between derivative critical points, then bisection with
// Newton polishing; tangential (even-multiplicity) roots are detected by
// residual magnitude at critical points.
std::vector<PolyRoot> poly_roots(const Poly& p, double lo, double hi, double tol = kEpsRoot);

}  // namespace lec
