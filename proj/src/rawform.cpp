#include "heegner1/rawform.hpp"

#include "heegner1/errors.hpp"

#include <map>
#include <mutex>

namespace heegner1 {

namespace {

constexpr int kMaxN = 13;

BivariatePolyQ computeRawForm(int N) {
    int k = (N % 2 == 1) ? (N - 1) / 2 : N / 2 - 1;
    TatePoint pk = tateMultiple(k);
    TatePoint pnk = tateMultiple(N - k);
    if (pk.infinity || pnk.infinity) throw UnsupportedN("degenerate torsion condition");
    RatFuncQ diff = pk.x - pnk.x;
    BivariatePolyQ poly = diff.num();
    if (poly.isZero()) throw UnsupportedN("torsion condition vanished identically");

    const BivariatePolyQ factors[] = {
        BivariatePolyQ::varB(),
        BivariatePolyQ::varC(),
        BivariatePolyQ::varB() - BivariatePolyQ::varC(),
        BivariatePolyQ::varB() - BivariatePolyQ::varC() - BivariatePolyQ::varC() * BivariatePolyQ::varC(),
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& f : factors) {
            for (;;) {
                auto q = BivariatePolyQ::divExact(poly, f);
                if (!q || q->isConstant()) break;
                poly = *q;
                changed = true;
            }
        }
    }
    return poly.primitiveCanonical();
}

} // namespace

const BivariatePolyQ& rawForm(int N) {
    if (N < 4 || N > kMaxN) throw UnsupportedN("raw form supported for 4 <= N <= 13");
    static std::mutex mu;
    static std::map<int, BivariatePolyQ> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(N);
    if (it == cache.end()) it = cache.emplace(N, computeRawForm(N)).first;
    return it->second;
}

OptimizedModelReport optimizedModelCheckOf(const BivariatePolyQ& raw11) {
    // b = (1-x)xy(1+xy), c = (1-x)xy, expected divisor y^2 + (x^2+1)y + x
    BivariatePolyQ x = BivariatePolyQ::varB(); // reuse slot b as x
    BivariatePolyQ y = BivariatePolyQ::varC();
    BivariatePolyQ cSub = (BivariatePolyQ::constant(1) - x) * x * y;
    BivariatePolyQ bSub = cSub * (BivariatePolyQ::constant(1) + x * y);
    BivariatePolyQ f = y * y + (x * x + BivariatePolyQ::constant(1)) * y + x;

    OptimizedModelReport rep;
    rep.substituted = raw11.compose(bSub, cSub);
    auto q = BivariatePolyQ::divExact(rep.substituted, f);
    rep.divisible = q.has_value();
    if (q) rep.cofactor = *q;
    return rep;
}

OptimizedModelReport optimizedModelCheck() {
    return optimizedModelCheckOf(rawForm(11));
}

BigComplex evalCurveEquation(const BigComplex& bVal, const BigComplex& cVal, int N, long B) {
    return rawForm(N).evalC(bVal, cVal, B);
}

} // namespace heegner1
