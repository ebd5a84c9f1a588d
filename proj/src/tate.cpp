#include "heegner1/tate.hpp"

#include <mutex>
#include <vector>

namespace heegner1 {

namespace {

// curve coefficients of E(b,c): a1 = 1-c, a2 = a3 = -b, a4 = a6 = 0
RatFuncQ a1() { return RatFuncQ::ofPoly(BivariatePolyQ::constant(1) - BivariatePolyQ::varC()); }
RatFuncQ a2() { return RatFuncQ::ofPoly(-BivariatePolyQ::varB()); }
RatFuncQ a3() { return a2(); }

} // namespace

bool onTateCurve(const TatePoint& p) {
    if (p.infinity) return true;
    // clear denominators: with x = A/B, y = C/D the equation becomes a
    // polynomial identity, avoiding large rational-function reductions
    const BivariatePolyQ &A = p.x.num(), &Bp = p.x.den();
    const BivariatePolyQ &C = p.y.num(), &Dp = p.y.den();
    BivariatePolyQ one = BivariatePolyQ::constant(1);
    BivariatePolyQ e1 = one - BivariatePolyQ::varC();
    BivariatePolyQ bP = BivariatePolyQ::varB();
    BivariatePolyQ B3 = Bp * Bp * Bp;
    BivariatePolyQ lhs = C * C * B3 + e1 * A * C * Bp * Bp * Dp - bP * C * B3 * Dp;
    BivariatePolyQ rhs = (A * A * A - bP * A * A * Bp) * (Dp * Dp);
    return (lhs - rhs).isZero();
}

TatePoint tateNegate(const TatePoint& p) {
    if (p.infinity) return p;
    return TatePoint::affine(p.x, -p.y - a1() * p.x - a3());
}

TatePoint tateAdd(const TatePoint& p1, const TatePoint& p2) {
    if (p1.infinity) return p2;
    if (p2.infinity) return p1;
    RatFuncQ A1 = a1(), A2 = a2(), A3 = a3();
    if (p1.x == p2.x) {
        RatFuncQ negY = -p2.y - A1 * p2.x - A3;
        if (p1.y == negY) return TatePoint::atInfinity();
    }
    RatFuncQ lambda, nu;
    if (p1 == p2) {
        RatFuncQ den = p1.y + p1.y + A1 * p1.x + A3;
        RatFuncQ x2 = p1.x * p1.x;
        lambda = (x2 + x2 + x2 + (A2 + A2) * p1.x - A1 * p1.y) / den;
        nu = (-(p1.x * x2) - A3 * p1.y) / den;
    } else {
        lambda = (p2.y - p1.y) / (p2.x - p1.x);
        nu = p1.y - lambda * p1.x;
    }
    RatFuncQ x3 = lambda * lambda + A1 * lambda - A2 - p1.x - p2.x;
    RatFuncQ y3 = -(lambda + A1) * x3 - nu - A3;
    return TatePoint::affine(std::move(x3), std::move(y3));
}

TatePoint tateMultiple(int n) {
    static std::mutex mu;
    static std::vector<TatePoint> table{TatePoint::atInfinity(), TatePoint::base()};
    std::lock_guard<std::mutex> lk(mu);
    while (static_cast<int>(table.size()) <= n)
        table.push_back(tateAdd(table.back(), TatePoint::base()));
    return table[static_cast<size_t>(n)];
}

} // namespace heegner1
