#pragma once

#include <array>
#include <vector>

#include "lec/geometry.hpp"

namespace lec {

// Counter-clockwise convex hull with a minimal vertex set (no three
// consecutive collinear vertices). Throws DegenerateInput for fewer than 3
// points or an all-collinear input.
std::vector<Point2> convex_hull(const std::vector<Point2>& points);

bool point_in_convex_polygon(const std::vector<Point2>& poly, Point2 p);

// Raw Voronoi diagram, represented as the dual of the Delaunay
// triangulation: one vertex per triangle (its circumcenter), one edge per
// Delaunay edge. Hull-adjacent edges are rays.
struct RawVoronoi {
    struct Vertex {
        Point2 p;
        std::array<int, 3> sites;  // the triangle whose circumcenter this is
    };
    struct Edge {
        int site_a = -1;
        int site_b = -1;
        int v0 = -1;          // vertex index; always valid
        int v1 = -1;          // -1 for a ray
        Point2 ray_dir{};     // unit, valid when v1 == -1
    };
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
};

RawVoronoi voronoi(const std::vector<Point2>& points);

enum class EdgeKind : uint8_t { VoronoiEdge = 0, HullSegment = 1 };

// One element of the edge set E: a clipped internal Voronoi edge or a hull
// boundary piece, together with the inducing site(s) and the clearance
// parameterization (foot of the site(s) on the supporting line, half-width
// rho = distance from the inducing site to that line).
struct Edge {
    int id = -1;
    EdgeKind kind = EdgeKind::VoronoiEdge;
    Segment2 geom;
    std::array<int, 2> sites{-1, -1};  // sites[1] == -1 for hull segments
    Line2 line;                        // canonical supporting line
    Point2 foot;                       // projection of the inducing site(s)
    double rho = 0.0;                  // dist(site, line); w/2 for Voronoi edges
    double t_lo = 0.0;                 // signed extent along line.direction()
    double t_hi = 0.0;                 // measured from foot, t_lo <= t_hi
    std::array<int, 2> vertex_ids{-1, -1};  // shared-endpoint identity (a, b)
    int hull_side = -1;                // index of the hull side (hull segments)

    Point2 point_at(double t) const { return foot + t * line.direction(); }
    double param_of(Point2 p) const { return dot(p - foot, line.direction()); }
    double clearance_at_t(double t) const { return std::hypot(t, rho); }
};

struct EdgeSet {
    std::vector<Point2> sites;
    std::vector<Point2> hull;          // CCW
    std::vector<Edge> edges;
    // Shared endpoint coordinates, indexed by Edge::vertex_ids. Edge geometry
    // is snapped to these so edges incident to one vertex agree bit-exactly.
    std::vector<Point2> vertices;
    int vertex_count = 0;
};

// Builds E: Voronoi edges clipped to the closed hull plus the hull boundary
// split at hull vertices and Voronoi crossing points. Every edge carries its
// inducing site(s); clip results shorter than kEpsGeom are discarded.
EdgeSet build_edge_set(const std::vector<Point2>& points);

}  // namespace lec
