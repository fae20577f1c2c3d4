#pragma once

#include "lec/answer.hpp"
#include "lec/diagram.hpp"

namespace lec {

// Minimum distance from p to any site: the radius of the largest empty
// circle centered at p.
double clearance_at(const std::vector<Point2>& points, Point2 p);

// Brute-force reference: every intersection of the line with an element of E
// is a candidate center (both endpoints for a collinear overlap); the best
// candidate wins, ties resolved by smallest edge id then lexicographic
// center. Deliberately shares nothing with the envelope-based query paths
// beyond the edge set itself.
MaybeAnswer oracle_query(const EdgeSet& es, const Line2& line);

}  // namespace lec
