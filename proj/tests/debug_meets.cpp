// Scratch harness; not part of the suite.
#include <cstdio>

#include "lec/general_index.hpp"
#include "lec/oracle.hpp"
#include "support.hpp"

using namespace lec;

namespace {

std::vector<SeqItem> fresh(const EdgeSet& ses, double c) {
    const PivotIndex p = build_pivot(ses, {c, 0.0});
    std::vector<SeqItem> items;
    for (size_t t = 0; t < p.seq.ids.size(); ++t)
        items.push_back({p.seq.ids[t],
                         t < p.seq.meets.size() ? p.seq.meets[t] : uint8_t(0)});
    return items;
}

void show(const char* tag, const std::vector<SeqItem>& s) {
    std::printf("%s:", tag);
    for (const auto& it : s) std::printf(" %d(m%d)", it.id, it.meet);
    std::printf("\n");
}

}  // namespace

int main() {
    auto pts = testing::reference_triangle();
    const EdgeSet es = build_edge_set(pts);
    const EdgeSet ses = edge_set_to_side_frame(es, 0, 0, 1);
    auto evs = enumerate_events(ses, 1.0);

    // replicate application step by step with from-scratch checks
    for (size_t e = 0; e + 1 <= evs.size(); ++e) {
        const double lo = evs[e].x;
        const double hi = e + 1 < evs.size() ? evs[e + 1].x : 1.0;
        const double mid = 0.5 * (lo + hi);
        auto want = fresh(ses, mid);
        std::printf("interval %zu (%.6f..%.6f) event src=%d x=%.9f th=%.9f: ", e, lo, hi,
                    (int)evs[e].source, evs[e].x, evs[e].angle);
        show("want", want);
    }
    auto w0 = fresh(ses, evs.empty() ? 0.5 : evs[0].x * 0.5);
    show("v0", w0);
    return 0;
}
