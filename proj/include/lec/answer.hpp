#pragma once

#include <optional>

#include "lec/geometry.hpp"

namespace lec {

// One largest-empty-circle answer. Multiple optima can exist; every query
// path reports exactly one, with deterministic tie-breaking, and `tie`
// records that an equal-radius alternative was seen.
struct LecAnswer {
    Point2 center{};
    double radius = 0.0;
    int edge_id = -1;
    bool tie = false;
};

using MaybeAnswer = std::optional<LecAnswer>;

}  // namespace lec
