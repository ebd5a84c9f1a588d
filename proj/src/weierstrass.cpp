#include "heegner1/weierstrass.hpp"

#include "heegner1/errors.hpp"

namespace heegner1 {

namespace {

constexpr long kGuard = 48;

BigComplex one(long prec) { return BigComplex::fromLong(1, 0, prec); }

// q = exp(2 pi i tau)
BigComplex nome(const BigComplex& tau, long prec) {
    Real twoPi = Real::pi(prec).mul2exp(1);
    BigComplex twoPiI(Real(prec), twoPi, -prec + 4);
    return BigComplex::expOf(tau * twoPiI);
}

long seriesLength(long qMagExp, long B) {
    if (qMagExp >= -2) throw PrecisionExhausted("nome too close to the unit circle");
    long n = (B + kGuard + 32) / (-qMagExp) + 8;
    if (n > 200000) throw PrecisionExhausted("series truncation bound out of budget");
    return n;
}

} // namespace

std::pair<BigComplex, BigComplex> eisensteinInvariants(const BigComplex& tau, long B) {
    long prec = std::max(tau.prec(), B + kGuard);
    BigComplex q = nome(tau, prec);
    long qm = q.magExp();
    long nMax = seriesLength(qm, B);

    BigComplex e4 = one(prec), e6 = one(prec);
    BigComplex qn = one(prec);
    for (long n = 1; n <= nMax; ++n) {
        qn = qn * q;
        BigComplex den = one(prec) - qn;
        BigComplex frac = qn / den;
        mpz_class n3 = mpz_class(n) * n * n;
        e4 = e4 + frac.mulRat(mpq_class(240 * n3));
        e6 = e6 - frac.mulRat(mpq_class(504 * n3 * n * n));
        if (n * qm < -(B + kGuard + 16)) break;
    }
    long tail = -(B + 40);
    Real pi = Real::pi(prec);
    Real pi2 = pi * pi;
    // g2 = (2 pi)^4 E4 / 12, g3 = (2 pi)^6 E6 / 216
    BigComplex g2 = e4.mulRat(mpq_class(4, 3)).widenErr(tail);
    g2 = BigComplex(g2.re() * pi2 * pi2, g2.im() * pi2 * pi2, radScale2(g2.rad(), 8));
    g2 = g2.widenErr(g2.magExp() - prec + 2);
    BigComplex g3 = e6.mulRat(mpq_class(8, 27)).widenErr(tail);
    Real pi6 = pi2 * pi2 * pi2;
    g3 = BigComplex(g3.re() * pi6, g3.im() * pi6, radScale2(g3.rad(), 11));
    g3 = g3.widenErr(g3.magExp() - prec + 2);
    return {g2, g3};
}

namespace {

struct ReducedArg {
    BigComplex tau;    // fundamental-domain tau
    BigComplex scale;  // Lambda = scale * (1, tau); wp rescales by scale^-2
    BigComplex zeta;   // reduced argument, lattice coords in [-1/2, 1/2)
};

ReducedArg reduceArgument(const BigComplex& z, const LatticeBasis& basis, long prec) {
    ReducedLattice red = latticeReduce(basis);
    ReducedArg out;
    out.tau = red.tau;
    out.scale = red.scale;
    BigComplex zp = z / red.scale;
    Real x = zp.im() / red.tau.im();
    Real y = zp.re() - x * red.tau.re();
    mpz_class mx = x.roundToInt(), my = y.roundToInt();
    x = x - Real::ofInt(mx, x.prec());
    y = y - Real::ofInt(my, y.prec());
    BigComplex xc = BigComplex::fromReal(x, -prec + 8);
    BigComplex yc = BigComplex::fromReal(y, -prec + 8);
    out.zeta = xc * red.tau + yc;
    if ((x.isZero() || x.expOf() < -(prec / 2)) && (y.isZero() || y.expOf() < -(prec / 2)))
        throw PoleAtZ("argument reduces into the lattice within error radius");
    return out;
}

// wp and wp' on (1, tau) at zeta, q-series; returns values without the
// homogeneity rescaling
std::pair<BigComplex, BigComplex> wpSeries(const BigComplex& tau, const BigComplex& zeta, long B, long prec) {
    BigComplex q = nome(tau, prec);
    long qm = q.magExp();
    long nMax = seriesLength(qm, B) + 2;

    BigComplex u = nome(zeta, prec);
    BigComplex uinv = one(prec) / u;

    BigComplex omu = one(prec) - u;
    if (!omu.definitelyNonzero()) throw PoleAtZ("argument at a lattice point");
    BigComplex p = one(prec).mulRat(mpq_class(1, 12)) + u / (omu * omu);
    BigComplex pp = u * (one(prec) + u) / (omu * omu * omu);

    BigComplex qnu = u, qnuInv = uinv, qn = one(prec);
    for (long n = 1; n <= nMax; ++n) {
        qn = qn * q;
        qnu = qnu * q;
        qnuInv = qnuInv * q;
        BigComplex d1 = one(prec) - qnu;
        BigComplex d2 = one(prec) - qnuInv;
        BigComplex d3 = one(prec) - qn;
        p = p + qnu / (d1 * d1) + qnuInv / (d2 * d2) - (qn / (d3 * d3)).mul2exp(1);
        pp = pp + qnu * (one(prec) + qnu) / (d1 * d1 * d1)
                - qnuInv * (one(prec) + qnuInv) / (d2 * d2 * d2);
        if (2 * n * qm < -2 * (B + kGuard + 16) - qm) break;
    }
    long tail = -(B + 40);
    p = p.withErrExp(eAdd(p.errExp(), tail));
    pp = pp.withErrExp(eAdd(pp.errExp(), tail));

    Real pi = Real::pi(prec);
    Real pi2 = pi * pi;
    // (2 pi i)^2 = -4 pi^2, (2 pi i)^3 = -8 pi^3 i
    BigComplex f2(-pi2.mul2exp(2), Real(prec), -prec + 8);
    BigComplex f3(Real(prec), -pi2.mul2exp(3) * pi, -prec + 8);
    return {p * f2, pp * f3};
}

} // namespace

std::pair<BigComplex, BigComplex> wpPair(const BigComplex& z, const LatticeBasis& basis, long B) {
    long prec = std::max({z.prec(), basis.w1.prec(), B + kGuard});
    ReducedArg ra = reduceArgument(z, basis, prec);
    auto [p, pp] = wpSeries(ra.tau, ra.zeta, B, prec);
    BigComplex s2 = ra.scale * ra.scale;
    return {p / s2, pp / (s2 * ra.scale)};
}

BigComplex wp(const BigComplex& z, const LatticeBasis& basis, long B) {
    return wpPair(z, basis, B).first;
}

BigComplex wpPrime(const BigComplex& z, const LatticeBasis& basis, long B) {
    return wpPair(z, basis, B).second;
}

BigComplex jInvariant(const BigComplex& tau, long B) {
    long prec = std::max(tau.prec(), B + kGuard);
    if (tau.im().sign() <= 0) throw DegenerateLattice("tau not in the upper half plane");
    LatticeBasis basis{tau, BigComplex::fromLong(1, 0, prec)};
    ReducedLattice red = latticeReduce(basis);
    auto [g2, g3] = eisensteinInvariants(red.tau, B);
    BigComplex g2c = g2 * g2 * g2;
    BigComplex disc = g2c - (g3 * g3).mulRat(mpq_class(27));
    return g2c.mulRat(mpq_class(1728)) / disc;
}

std::pair<BigComplex, BigComplex> eisensteinLatticeSum(const BigComplex& tau, long R, long B) {
    long prec = std::max(tau.prec(), B + 16);
    BigComplex g4 = BigComplex::zero(prec), g6 = BigComplex::zero(prec);
    for (long m = -R; m <= R; ++m) {
        for (long n = -R; n <= R; ++n) {
            if (m == 0 && n == 0) continue;
            BigComplex w = tau.mulRat(mpq_class(n)) + BigComplex::fromLong(m, 0, prec);
            BigComplex w2 = w * w;
            BigComplex w4 = w2 * w2;
            g4 = g4 + one(prec) / w4;
            g6 = g6 + one(prec) / (w4 * w2);
        }
    }
    return {g4.mulRat(mpq_class(60)), g6.mulRat(mpq_class(140))};
}

} // namespace heegner1
