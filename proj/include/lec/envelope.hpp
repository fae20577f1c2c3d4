#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "lec/geometry.hpp"

namespace lec {

struct OutOfDomain : std::runtime_error {
    OutOfDomain() : std::runtime_error("parameter outside envelope domain") {}
};

struct EnvCurveRef {
    int id = -1;
    double lo = 0.0;
    double hi = 0.0;  // closed interval domain, lo <= hi
};

// Callbacks the generic envelope needs from a curve family: pointwise value
// and the (bounded) pairwise-crossing primitive. Crossings must be reported
// strictly inside (lo,hi), ascending; tangential touches may be included or
// omitted, both are handled.
struct EnvelopeOps {
    std::function<double(int id, double x)> value;
    std::function<std::vector<double>(int a, int b, double lo, double hi)> crossings;
};

// Maximal-interval decomposition of the pointwise maximum. ids[i] is the
// dominating curve on [breaks[i], breaks[i+1]) (-1 where no curve is
// defined); the final piece is closed on the right.
struct Envelope {
    double lo = 0.0;
    double hi = 0.0;
    std::vector<double> breaks;  // size == ids.size() + 1
    std::vector<int> ids;

    struct Hit {
        int id = -1;       // -1: no curve defined at the parameter
        int piece = -1;
        double break_lo = 0.0;
        double break_hi = 0.0;
    };
    // O(log pieces) binary search; throws OutOfDomain outside [lo,hi].
    Hit lookup(double x, uint64_t* comparisons = nullptr) const;

    size_t piece_count() const { return ids.size(); }
    std::vector<int> piece_sequence() const;  // ids with the "none" pieces dropped
};

// Merge-based divide and conquer; deterministic, ties broken by lower id.
Envelope upper_envelope(const std::vector<EnvCurveRef>& curves, const EnvelopeOps& ops,
                        double domain_lo, double domain_hi);

// True iff `ids` is an (n,s) Davenport-Schinzel sequence: no two adjacent
// equal symbols and no alternating subsequence a,b,a,b,... of length s+2.
bool ds_validate(const std::vector<int>& ids, int s);

// Merges sub-gap_tol "none" pieces and sub-1e-12 slivers (numeric residue at
// shared domain endpoints) into their neighbors.
void absorb_envelope_slivers(Envelope& env, double gap_tol);

}  // namespace lec
