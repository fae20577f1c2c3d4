#pragma once

#include <optional>

#include "lec/diagram.hpp"

namespace lec {

struct IdenticalCurves : std::runtime_error {
    IdenticalCurves() : std::runtime_error("curves coincide on an interval") {}
};

struct CollinearPivot : std::runtime_error {
    CollinearPivot() : std::runtime_error("pivot lies on the edge's supporting line") {}
};

// Clearance along an edge as a function of the signed arclength t from the
// foot of the inducing site(s): clearance(t) = sqrt(t^2 + rho^2). For a
// Voronoi edge rho = dist(p1,p2)/2; for a hull segment rho is the distance
// from its single site to the supporting line (0 when the site is a hull
// vertex of the segment, which degenerates the arc to a straight line).
struct ArcByT {
    int edge = -1;
    double rho = 0.0;
    double t_lo = 0.0;
    double t_hi = 0.0;

    double value(double t) const { return std::hypot(t, rho); }
    double w() const { return 2.0 * rho; }  // dist(p1,p2) for Voronoi edges
};

ArcByT arc_for_edge(const Edge& e);

// Orthographic projection of an arc onto the y-axis: value(y) = sqrt(q(y))
// with q quadratic. Horizontal edges collapse to a single y and are kept as
// degenerate records carrying the maximum clearance over the edge.
struct YCurve {
    int edge = -1;
    double qa = 0.0, qb = 0.0, qc = 0.0;  // q(y) = qa*y^2 + qb*y + qc
    double y_lo = 0.0, y_hi = 0.0;
    bool degenerate = false;
    double degen_y = 0.0;
    double degen_value = 0.0;

    double q(double y) const { return (qa * y + qb) * y + qc; }
    double value(double y) const { return std::sqrt(std::max(0.0, q(y))); }
};

YCurve project_to_y(const ArcByT& arc, const EdgeSet& es);

// Projection onto the sweep angle of a ray anchored at a pivot v. The
// squared clearance is a ratio of homogeneous quadratics in (cos t, sin t);
// in the slope chart m = tan t this is the rational form
// (a1*m^2 + a2*m + a3) / (m - a4)^2 whenever the chart applies.
struct PivotCurve {
    int edge = -1;
    Point2 pivot{};
    Point2 site{};
    Point2 normal{};   // supporting line normal (unit)
    double h = 0.0;    // line offset in the pivot frame
    double th_start = 0.0;  // domain start in [0, 2*pi)
    double width = 0.0;     // domain width in (0, pi)

    double th_end() const { return th_start + width; }
    bool contains(double theta, double slack = 0.0) const;
    // Ray/edge intersection point; only meaningful inside the domain.
    Point2 point_at(double theta) const;
    double value(double theta) const { return dist(point_at(theta), site); }
    // Squared-clearance numerator/denominator in the (c^2, c*s, s^2) basis.
    std::array<double, 3> num_quadratic() const;
    std::array<double, 3> den_quadratic() const;
    // Slope-chart constants (a1..a4); empty for edges with horizontal normal.
    std::optional<std::array<double, 4>> slope_form() const;
};

// Throws CollinearPivot when v lies on the supporting line of the edge.
PivotCurve project_to_pivot(const ArcByT& arc, const EdgeSet& es, Point2 v);

struct CurveHit {
    double param = 0.0;
    bool tangential = false;
};

// Equal-value parameters inside the common domain, ascending. Throws
// IdenticalCurves when the squared-value functions coincide.
std::vector<CurveHit> curve_intersections(const YCurve& a, const YCurve& b);

// Pivot-curve intersections; when the two edges share an endpoint, pass its
// direction angle so the identically-equal root there can be deflated away.
std::vector<CurveHit> curve_intersections(const PivotCurve& a, const PivotCurve& b,
                                          std::optional<double> shared_dir = std::nullopt);

// Circular-arc intersection of the two curve domains (single arc or empty).
std::optional<std::pair<double, double>> common_domain(const PivotCurve& a,
                                                       const PivotCurve& b);

double normalize_angle(double theta);  // into [0, 2*pi)

}  // namespace lec
