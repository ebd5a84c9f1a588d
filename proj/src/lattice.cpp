#include "heegner1/lattice.hpp"

#include "heegner1/errors.hpp"

namespace heegner1 {

ReducedLattice latticeReduce(const LatticeBasis& basis) {
    BigComplex t = basis.w1 / basis.w2;
    if (t.im().isZero() || t.im().abs().expOf() <= t.errExp() + 4)
        throw DegenerateLattice("Im(w1/w2) vanishes within error radius");

    mpz_class a = 1, b = 0, c = 0, d = 1;
    if (t.im().sign() < 0) {
        // swap periods to fix orientation
        t = basis.w2 / basis.w1;
        a = 0; b = 1; c = 1; d = 0;
    }

    long prec = t.prec();
    Real one = Real::ofLong(1, prec);
    Real slack = Real::ofLong(1, prec).mul2exp(-20);
    for (int iter = 0; iter < 10000; ++iter) {
        mpz_class n = t.re().roundToInt();
        if (n != 0) {
            t = t - BigComplex::fromRat(mpq_class(n), 0, prec);
            a -= n * c;
            b -= n * d;
        }
        Real nrm = t.re() * t.re() + t.im() * t.im();
        if (nrm < one - slack) {
            t = -(BigComplex::fromLong(1, 0, prec) / t);
            mpz_class na = -c, nb = -d, nc = a, nd = b;
            a = na; b = nb; c = nc; d = nd;
        } else {
            break;
        }
    }
    // normalize the boundary representative Re tau = +1/2 to -1/2
    if (t.re() > Real::ofLong(0, prec) &&
        (t.re() - Real::ofRat(mpq_class(1, 2), prec)).abs().expOf() < -(prec / 2)) {
        t = t - BigComplex::fromLong(1, 0, prec);
        a -= c;
        b -= d;
    }

    ReducedLattice out;
    out.tau = t;
    out.scale = basis.w1.mulRat(mpq_class(c)) + basis.w2.mulRat(mpq_class(d));
    out.unimodular = {{{a, b}, {c, d}}};
    return out;
}

} // namespace heegner1
