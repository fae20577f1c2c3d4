#include "lec/envelope.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace lec {

namespace {

struct Builder {
    const EnvelopeOps& ops;
    double lo, hi;

    Envelope single(const EnvCurveRef& c) const {
        Envelope env;
        env.lo = lo;
        env.hi = hi;
        const double a = std::max(lo, c.lo);
        const double b = std::min(hi, c.hi);
        env.breaks.push_back(lo);
        if (a >= b) {  // curve domain misses [lo,hi]
            env.breaks.push_back(hi);
            env.ids.push_back(-1);
            return env;
        }
        if (a > lo) {
            env.breaks.push_back(a);
            env.ids.push_back(-1);
        }
        env.breaks.push_back(b);
        env.ids.push_back(c.id);
        if (b < hi) {
            env.breaks.push_back(hi);
            env.ids.push_back(-1);
        }
        return env;
    }

    static void append(Envelope& env, double up_to, int id) {
        if (up_to <= env.breaks.back()) return;
        if (!env.ids.empty() && env.ids.back() == id) {
            env.breaks.back() = up_to;
        } else {
            env.breaks.push_back(up_to);
            env.ids.push_back(id);
        }
    }

    int winner(int a, int b, double x) const {
        if (a < 0) return b;
        if (b < 0) return a;
        const double va = ops.value(a, x);
        const double vb = ops.value(b, x);
        if (va > vb) return a;
        if (vb > va) return b;
        return std::min(a, b);  // exact tie: lower id, keeps sequences deterministic
    }

    Envelope merge(const Envelope& A, const Envelope& B) const {
        Envelope env;
        env.lo = lo;
        env.hi = hi;
        env.breaks.push_back(lo);

        size_t ia = 0, ib = 0;
        double x0 = lo;
        while (x0 < hi) {
            while (ia + 1 < A.breaks.size() && A.breaks[ia + 1] <= x0) ++ia;
            while (ib + 1 < B.breaks.size() && B.breaks[ib + 1] <= x0) ++ib;
            const double xa = (ia + 1 < A.breaks.size()) ? A.breaks[ia + 1] : hi;
            const double xb = (ib + 1 < B.breaks.size()) ? B.breaks[ib + 1] : hi;
            const double x1 = std::min(hi, std::min(xa, xb));
            if (x1 <= x0) break;

            const int ca = (ia < A.ids.size()) ? A.ids[ia] : -1;
            const int cb = (ib < B.ids.size()) ? B.ids[ib] : -1;
            if (ca < 0 || cb < 0 || ca == cb) {
                append(env, x1, ca < 0 ? cb : ca);
            } else {
                std::vector<double> cuts = ops.crossings(ca, cb, x0, x1);
                cuts.push_back(x1);
                double a = x0;
                for (double b : cuts) {
                    if (b <= a) continue;
                    append(env, b, winner(ca, cb, 0.5 * (a + b)));
                    a = b;
                }
            }
            x0 = x1;
        }
        if (env.ids.empty()) {
            env.breaks.push_back(hi);
            env.ids.push_back(-1);
        }
        env.breaks.back() = hi;
        return env;
    }

    Envelope build(const std::vector<EnvCurveRef>& curves, size_t begin, size_t end) const {
        if (end - begin == 1) return single(curves[begin]);
        const size_t mid = begin + (end - begin) / 2;
        return merge(build(curves, begin, mid), build(curves, mid, end));
    }
};

}  // namespace

Envelope upper_envelope(const std::vector<EnvCurveRef>& curves, const EnvelopeOps& ops,
                        double domain_lo, double domain_hi) {
    Builder b{ops, domain_lo, domain_hi};
    if (curves.empty()) {
        Envelope env;
        env.lo = domain_lo;
        env.hi = domain_hi;
        env.breaks = {domain_lo, domain_hi};
        env.ids = {-1};
        return env;
    }
    return b.build(curves, 0, curves.size());
}

Envelope::Hit Envelope::lookup(double x, uint64_t* comparisons) const {
    if (!(x >= lo && x <= hi)) throw OutOfDomain();
    size_t a = 0, b = ids.size();  // piece range
    while (b - a > 1) {
        const size_t m = a + (b - a) / 2;
        if (comparisons) ++*comparisons;
        if (x < breaks[m])
            b = m;
        else
            a = m;
    }
    return Hit{ids[a], static_cast<int>(a), breaks[a], breaks[a + 1]};
}

std::vector<int> Envelope::piece_sequence() const {
    std::vector<int> out;
    for (int id : ids)
        if (id >= 0) out.push_back(id);
    return out;
}

void absorb_envelope_slivers(Envelope& env, double gap_tol) {
    std::vector<double> breaks{env.breaks.front()};
    std::vector<int> ids;
    for (size_t i = 0; i < env.ids.size(); ++i) {
        const double w = env.breaks[i + 1] - env.breaks[i];
        const int id = env.ids[i];
        const bool sliver = (id < 0 && w <= gap_tol) || w <= 1e-12;
        if (sliver && !ids.empty()) {
            breaks.back() = env.breaks[i + 1];
            continue;
        }
        if (!ids.empty() && ids.back() == id) {
            breaks.back() = env.breaks[i + 1];
            continue;
        }
        ids.push_back(id);
        breaks.push_back(env.breaks[i + 1]);
    }
    while (ids.size() >= 2 &&
           ((ids.front() < 0 && breaks[1] - breaks[0] <= gap_tol) ||
            breaks[1] - breaks[0] <= 1e-12)) {
        breaks.erase(breaks.begin() + 1);
        ids.erase(ids.begin());
        if (ids.size() >= 2 && ids[0] == ids[1]) {  // re-coalesce
            breaks.erase(breaks.begin() + 1);
            ids.erase(ids.begin());
        }
    }
    env.breaks = std::move(breaks);
    env.ids = std::move(ids);
}

bool ds_validate(const std::vector<int>& ids, int s) {
    if (s < 1) return false;
    for (size_t i = 0; i + 1 < ids.size(); ++i)
        if (ids[i] == ids[i + 1]) return false;

    const int forbidden = s + 2;           // alternation length that must not occur
    const int min_occ = (forbidden + 1) / 2;

    std::map<int, std::vector<int>> pos;
    for (size_t i = 0; i < ids.size(); ++i) pos[ids[i]].push_back(static_cast<int>(i));

    std::vector<const std::vector<int>*> heavy;
    std::vector<int> heavy_sym;
    for (auto& [sym, p] : pos) {
        if (static_cast<int>(p.size()) >= min_occ) {
            heavy.push_back(&p);
            heavy_sym.push_back(sym);
        }
    }
    // An alternation of length s+2 needs both symbols at least min_occ times
    // (up to one less for the minority symbol), so check heavy symbols against
    // every partner and heavy pairs against each other.
    auto blocks = [&](const std::vector<int>& pa, const std::vector<int>& pb) {
        int count = 0;
        int last = -2;  // -2: start, 0: from a, 1: from b
        size_t i = 0, j = 0;
        while (i < pa.size() || j < pb.size()) {
            const bool take_a = j >= pb.size() || (i < pa.size() && pa[i] < pb[j]);
            const int cur = take_a ? 0 : 1;
            if (cur != last) {
                ++count;
                last = cur;
            }
            take_a ? ++i : ++j;
        }
        return count;
    };
    for (size_t hi = 0; hi < heavy.size(); ++hi) {
        for (auto& [sym, p] : pos) {
            if (sym == heavy_sym[hi]) continue;
            if (static_cast<int>(p.size()) < min_occ - 1) continue;
            if (blocks(*heavy[hi], p) >= forbidden) return false;
        }
    }
    return true;
}

}  // namespace lec
