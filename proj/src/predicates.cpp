// Exact-sign geometric predicates: double-precision fast path guarded by a
// forward error bound, exact rational arithmetic when the filter is
// inconclusive. Filter constants follow Shewchuk's analysis.

#include "lec/geometry.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace lec {
namespace {

using BigRat = boost::multiprecision::cpp_rational;

const double kEpsilon = std::ldexp(1.0, -53);
const double kCcwErrBound = (3.0 + 16.0 * kEpsilon) * kEpsilon;
const double kIccErrBound = (10.0 + 96.0 * kEpsilon) * kEpsilon;

inline int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

int orient2d_exact(Point2 p, Point2 q, Point2 r) {
    const BigRat px(p.x), py(p.y), qx(q.x), qy(q.y), rx(r.x), ry(r.y);
    const BigRat det = (qx - px) * (ry - py) - (qy - py) * (rx - px);
    return det.sign();
}

int incircle_exact(Point2 a, Point2 b, Point2 c, Point2 d) {
    const BigRat adx = BigRat(a.x) - BigRat(d.x);
    const BigRat ady = BigRat(a.y) - BigRat(d.y);
    const BigRat bdx = BigRat(b.x) - BigRat(d.x);
    const BigRat bdy = BigRat(b.y) - BigRat(d.y);
    const BigRat cdx = BigRat(c.x) - BigRat(d.x);
    const BigRat cdy = BigRat(c.y) - BigRat(d.y);

    const BigRat alift = adx * adx + ady * ady;
    const BigRat blift = bdx * bdx + bdy * bdy;
    const BigRat clift = cdx * cdx + cdy * cdy;

    const BigRat det = alift * (bdx * cdy - bdy * cdx) -
                       blift * (adx * cdy - ady * cdx) +
                       clift * (adx * bdy - ady * bdx);
    return det.sign();
}

}  // namespace

int orient2d(Point2 p, Point2 q, Point2 r) {
    const double detleft = (q.x - p.x) * (r.y - p.y);
    const double detright = (q.y - p.y) * (r.x - p.x);
    const double det = detleft - detright;

    double detsum;
    if (detleft > 0.0) {
        if (detright <= 0.0) return sign_of(det);
        detsum = detleft + detright;
    } else if (detleft < 0.0) {
        if (detright >= 0.0) return sign_of(det);
        detsum = -detleft - detright;
    } else {
        return sign_of(det);
    }

    const double errbound = kCcwErrBound * detsum;
    if (det >= errbound || -det >= errbound) return sign_of(det);
    return orient2d_exact(p, q, r);
}

int incircle(Point2 a, Point2 b, Point2 c, Point2 d) {
    const double adx = a.x - d.x;
    const double ady = a.y - d.y;
    const double bdx = b.x - d.x;
    const double bdy = b.y - d.y;
    const double cdx = c.x - d.x;
    const double cdy = c.y - d.y;

    const double bdxcdy = bdx * cdy;
    const double cdxbdy = cdx * bdy;
    const double alift = adx * adx + ady * ady;

    const double cdxady = cdx * ady;
    const double adxcdy = adx * cdy;
    const double blift = bdx * bdx + bdy * bdy;

    const double adxbdy = adx * bdy;
    const double bdxady = bdx * ady;
    const double clift = cdx * cdx + cdy * cdy;

    const double det = alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) +
                       clift * (adxbdy - bdxady);

    const double permanent = (std::fabs(bdxcdy) + std::fabs(cdxbdy)) * alift +
                             (std::fabs(cdxady) + std::fabs(adxcdy)) * blift +
                             (std::fabs(adxbdy) + std::fabs(bdxady)) * clift;
    const double errbound = kIccErrBound * permanent;
    if (det > errbound || -det > errbound) return sign_of(det);
    return incircle_exact(a, b, c, d);
}

}  // namespace lec
