#ifndef HEEGNER1_TATE_HPP
#define HEEGNER1_TATE_HPP

#include "heegner1/ratfunc.hpp"

namespace heegner1 {

/*
 * Point on the Tate normal form E(b,c): Y^2 + (1-c)XY - bY = X^3 - bX^2,
 * with coordinates in Q(b,c).
 */
struct TatePoint {
    bool infinity = true;
    RatFuncQ x, y;

    static TatePoint atInfinity() { return TatePoint{}; }
    static TatePoint affine(RatFuncQ x, RatFuncQ y) { return TatePoint{false, std::move(x), std::move(y)}; }
    static TatePoint base() { return affine(RatFuncQ(), RatFuncQ()); } // P = (0, 0)

    bool operator==(const TatePoint& o) const {
        if (infinity != o.infinity) return false;
        return infinity || (x == o.x && y == o.y);
    }
};

// checks the curve equation identically in Q(b,c)
bool onTateCurve(const TatePoint& p);

TatePoint tateNegate(const TatePoint& p);
TatePoint tateAdd(const TatePoint& p1, const TatePoint& p2);
TatePoint tateMultiple(int n);

} // namespace heegner1

#endif
