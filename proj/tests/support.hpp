#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "lec/diagram.hpp"
#include "lec/oracle.hpp"

namespace lec::testing {

// Deterministic RNG; test expectations must not depend on libstdc++
// distribution internals.
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    double uniform() { return (next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    int uniform_int(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(next() % static_cast<uint64_t>(hi - lo + 1));
    }
};

// The worked triangle used throughout: circumcenter (0.5,0.425), R = 0.375.
inline std::vector<Point2> reference_triangle() {
    return {{0.2, 0.2}, {0.8, 0.2}, {0.5, 0.8}};
}

inline std::vector<Point2> cocircular_grid() {
    return {{0.25, 0.25}, {0.75, 0.25}, {0.25, 0.75}, {0.75, 0.75}};
}

inline std::vector<Point2> random_points(Rng& rng, int n, double lo = 0.05, double hi = 0.95) {
    std::vector<Point2> pts(n);
    for (auto& p : pts) p = {rng.uniform(lo, hi), rng.uniform(lo, hi)};
    return pts;
}

}  // namespace lec::testing
