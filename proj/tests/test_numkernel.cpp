#include <doctest.h>

#include "heegner1/errors.hpp"
#include "heegner1/lattice.hpp"
#include "heegner1/weierstrass.hpp"

#include <random>

using namespace heegner1;

namespace {

constexpr long B = 300;

BigComplex cplx(const mpq_class& re, const mpq_class& im, long prec = B + 48) {
    return BigComplex::fromRat(re, im, prec);
}

// |a - b| as a log2 exponent, kFloor when the difference rounds to zero
long gap(const BigComplex& a, const BigComplex& b) { return diffMagExp(a, b); }

mpq_class rnd(std::mt19937& g, long den, long lo, long hi) {
    std::uniform_int_distribution<long> d(lo * den, hi * den);
    return mpq_class(d(g), den);
}

} // namespace

TEST_CASE("lattice reduction: w1/w2 = 3 + i lands on tau = i") {
    LatticeBasis basis{cplx(mpq_class(3, 10), mpq_class(1, 10)), cplx(mpq_class(1, 10), 0)};
    ReducedLattice red = latticeReduce(basis);
    CHECK(gap(red.tau, BigComplex::i(B)) < -250);
    // scale carries the whole homothety: Lambda = scale * (tau, 1)
    CHECK(gap(red.scale, cplx(mpq_class(1, 10), 0)) < -250);
}

TEST_CASE("lattice reduction invariants on random rational bases") {
    std::mt19937 g(20240811);
    Real half = Real::ofRat(mpq_class(1, 2), B);
    Real one = Real::ofLong(1, B);
    Real eps = Real::ofLong(1, B).mul2exp(-40);
    for (int iter = 0; iter < 40; ++iter) {
        BigComplex w1 = cplx(rnd(g, 64, -5, 5), rnd(g, 64, -5, 5));
        BigComplex w2 = cplx(rnd(g, 64, -5, 5), rnd(g, 64, -5, 5));
        BigComplex ratio;
        try {
            ratio = w1 / w2;
        } catch (const PrecisionExhausted&) {
            continue;
        }
        if (ratio.im().abs() < Real::ofRat(mpq_class(1, 100), B)) continue;

        ReducedLattice red = latticeReduce({w1, w2});
        CHECK(red.tau.im().sign() > 0);
        CHECK(red.tau.im() > half - eps);
        CHECK(red.tau.re().abs() <= half + eps);
        CHECK(red.tau.absApprox() + eps > one);

        mpz_class det = red.unimodular[0][0] * red.unimodular[1][1]
                      - red.unimodular[0][1] * red.unimodular[1][0];
        CHECK((det == 1 || det == -1));

        // unimodular * (w1, w2)^T = (scale * tau, scale)^T
        auto row = [&](int i) {
            return w1.mulRat(mpq_class(red.unimodular[i][0])) + w2.mulRat(mpq_class(red.unimodular[i][1]));
        };
        CHECK(gap(row(0), red.scale * red.tau) < -250);
        CHECK(gap(row(1), red.scale) < -250);
    }
}

TEST_CASE("degenerate lattice rejected") {
    CHECK_THROWS_AS(latticeReduce({cplx(1, 0), cplx(2, 0)}), DegenerateLattice);
    CHECK_THROWS_AS(latticeReduce({cplx(mpq_class(3, 2), mpq_class(1, 2)), cplx(3, 1)}), DegenerateLattice);
}

TEST_CASE("eisenstein invariants: square and hexagonal degenerations") {
    // square lattice: g3(i) = 0
    auto [g2i, g3i] = eisensteinInvariants(BigComplex::i(B + 48), B);
    CHECK(g3i.consistentWithZero(8));
    CHECK(g2i.definitelyNonzero());
    // hexagonal lattice: g2(zeta6) = 0
    long prec = B + 48;
    BigComplex zeta6(Real::ofRat(mpq_class(1, 2), prec), Real::sqrtOfLong(3, prec).mul2exp(-1), -prec + 8);
    auto [g2h, g3h] = eisensteinInvariants(zeta6, B);
    CHECK(g2h.consistentWithZero(8));
    CHECK(g3h.definitelyNonzero());
}

TEST_CASE("eisenstein invariants against the truncated lattice sum") {
    BigComplex tau = cplx(mpq_class(1, 4), mpq_class(6, 5));
    auto [g2, g3] = eisensteinInvariants(tau, 120);
    auto [s2, s3] = eisensteinLatticeSum(tau, 120, 120);
    // direct sum truncation: G4 tail ~ R^-2, G6 tail ~ R^-4
    CHECK(gap(g2, s2) < -6);
    CHECK(gap(g3, s3) < -20);
}

TEST_CASE("wp: parity, periodicity, homogeneity, differential equation") {
    std::mt19937 g(77);
    for (int iter = 0; iter < 12; ++iter) {
        BigComplex tau = cplx(rnd(g, 128, -1, 1) / 2, mpq_class(9, 10) + rnd(g, 128, 0, 1));
        BigComplex one = BigComplex::fromLong(1, 0, B + 48);
        LatticeBasis basis{one, tau};
        BigComplex z = cplx(rnd(g, 97, -1, 1) / 3 + mpq_class(1, 17), rnd(g, 101, -1, 1) / 3);

        auto [p, pp] = wpPair(z, basis, B);
        auto [pm, ppm] = wpPair(-z, basis, B);
        CHECK(gap(p, pm) < -250);
        CHECK(gap(pp, -ppm) < -250);

        auto [ps, pps] = wpPair(z + tau, basis, B);
        CHECK(gap(p, ps) < -250);
        CHECK(gap(pp, pps) < -250);

        // wp(lambda z; lambda Lambda) = lambda^-2 wp(z; Lambda)
        BigComplex lam = cplx(mpq_class(2, 3), mpq_class(1, 5));
        auto [ph, pph] = wpPair(lam * z, {lam * one, lam * tau}, B);
        CHECK(gap(p, ph * lam * lam) < -250);
        CHECK(gap(pp, pph * lam * lam * lam) < -250);

        // rescale g2, g3 from the reduced lattice back to (1, tau)
        ReducedLattice red = latticeReduce(basis);
        auto [g2r, g3r] = eisensteinInvariants(red.tau, B);
        BigComplex s2 = red.scale * red.scale;
        BigComplex g2 = g2r / (s2 * s2), g3 = g3r / (s2 * s2 * s2);
        BigComplex resid = pp * pp - (p * p * p).mul2exp(2) + g2 * p + g3;
        CHECK(resid.magExp() < -250);
    }
}

TEST_CASE("wp error bound is honest against a higher-precision run") {
    BigComplex tau = cplx(mpq_class(1, 3), mpq_class(7, 5));
    LatticeBasis basis{BigComplex::fromLong(1, 0, B + 48), tau};
    BigComplex z = cplx(mpq_class(2, 7), mpq_class(1, 9));
    BigComplex lo = wp(z, basis, B);
    BigComplex tauHi = cplx(mpq_class(1, 3), mpq_class(7, 5), 2 * B + 48);
    BigComplex zHi = cplx(mpq_class(2, 7), mpq_class(1, 9), 2 * B + 48);
    BigComplex hi = wp(zHi, {BigComplex::fromLong(1, 0, 2 * B + 48), tauHi}, 2 * B);
    CHECK(gap(lo, hi) <= lo.errExp() + 2);
    CHECK(lo.errExp() < -250);
}

TEST_CASE("wp pole detection") {
    LatticeBasis basis{BigComplex::fromLong(1, 0, B + 48), cplx(mpq_class(1, 5), mpq_class(3, 2))};
    CHECK_THROWS_AS(wp(BigComplex::zero(B + 48), basis, B), PoleAtZ);
    CHECK_THROWS_AS(wp(basis.w1 + basis.w2, basis, B), PoleAtZ);
}

TEST_CASE("j-invariant special values and modularity") {
    BigComplex i = BigComplex::i(B + 48);
    CHECK(gap(jInvariant(i, B), BigComplex::fromLong(1728, 0, B + 48)) < -250);
    long prec = B + 48;
    BigComplex zeta6(Real::ofRat(mpq_class(1, 2), prec), Real::sqrtOfLong(3, prec).mul2exp(-1), -prec + 8);
    CHECK(jInvariant(zeta6, B).consistentWithZero(8));

    BigComplex tau = cplx(mpq_class(2, 7), mpq_class(5, 4));
    BigComplex jt = jInvariant(tau, B);
    CHECK(gap(jt, jInvariant(tau + BigComplex::fromLong(1, 0, prec), B)) < -230);
    CHECK(gap(jt, jInvariant(-(BigComplex::fromLong(1, 0, prec) / tau), B)) < -230);
}
