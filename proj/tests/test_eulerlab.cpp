#include <doctest.h>

#include "heegner1/distribution.hpp"
#include "heegner1/errors.hpp"

using namespace heegner1;

namespace {

constexpr long B = 300;

long gap(const BigComplex& a, const BigComplex& b) { return diffMagExp(a, b); }

} // namespace

TEST_CASE("evaluated point is Gamma_1(N)-stable in tau") {
    long prec = B + 48;
    BigComplex tau = BigComplex::fromRat(mpq_class(1, 5), mpq_class(13, 10), prec);
    EvaluatedPoint p1 = evalPointTau(tau, 5, B);
    EvaluatedPoint p2 = evalPointTau(tau + BigComplex::fromLong(1, 0, prec), 5, B);
    CHECK(gap(p1.b, p2.b) < -250);
    CHECK(gap(p1.c, p2.c) < -250);
}

TEST_CASE("c vanishes identically on X1(4)") {
    EvaluatedPoint p = evalPoint({-2, 1, 0, 4}, B);
    CHECK(p.c.consistentWithZero(8));
    CHECK(p.b.definitelyNonzero());
    // frozen: b(sqrt(-2)) = -0.0623618088104574...
    Real want = Real::parse("-0.0623618088104574", B + 48);
    CHECK((p.b.re() - want).abs() < Real::parse("1e-15", B + 48));
    CHECK(p.rawResidualExp.has_value());
    CHECK(*p.rawResidualExp < -250);
}

TEST_CASE("CM point on X1(11) at theta(-7) satisfies the raw form") {
    ImagQuadField f = fieldData(-7);
    EvaluatedPoint p = evalPointExact(thetaOf(f), 11, B);
    REQUIRE(p.rawResidualExp.has_value());
    CHECK(*p.rawResidualExp < -200);
}

TEST_CASE("T_p fiber shapes") {
    DistributionInstance inert{{-2, 1, 0, 4}, 5, RaiseCase::inertPrime};
    FiberResult fi = tpFiber(inert, B);
    CHECK(fi.points.size() == 6);
    CHECK(!fi.diamond.has_value());
    for (auto& pt : fi.points) {
        REQUIRE(pt.rawResidualExp.has_value());
        CHECK(*pt.rawResidualExp < -200);
    }

    DistributionInstance raise{{-2, 3, 0, 4}, 3, RaiseCase::dividesConductor};
    FiberResult fr = tpFiber(raise, B);
    CHECK(fr.points.size() == 3);
    CHECK(fr.diamond.has_value());

    // hypothesis checks
    CHECK_THROWS_AS(tpFiber({{-2, 1, 0, 4}, 3, RaiseCase::inertPrime}, B), CaseMismatch);
    CHECK_THROWS_AS(tpFiber({{-2, 2, 0, 5}, 2, RaiseCase::dividesConductor}, B), CaseMismatch);
}

TEST_CASE("minimal polynomial recognition") {
    long prec = 420;
    Real phi = (Real::ofLong(1, prec) + Real::sqrtOfLong(5, prec)).mul2exp(-1);
    auto p = minPolyGuess(BigComplex::fromReal(phi, -prec + 8), 4, mpz_class(1) << 20);
    REQUIRE(p.has_value());
    CHECK(p->coeffs == std::vector<mpz_class>{-1, -1, 1});

    // j(theta(-7)) = -3375 is recognized at degree 1
    ImagQuadField f7 = fieldData(-7);
    BigComplex j7 = jInvariant(tauToComplex(thetaOf(f7), B + 48), B);
    auto pj = minPolyGuess(j7, 1, mpz_class(1) << 16);
    REQUIRE(pj.has_value());
    CHECK(pj->coeffs == std::vector<mpz_class>{3375, 1});

    // pi has no small relation; the rejection must be certified, not lucky
    BigComplex piC = BigComplex::fromReal(Real::pi(700), -690);
    CHECK(!minPolyGuess(piC, 8, mpz_class(1) << 40).has_value());
    BigComplex piLow = BigComplex::fromReal(Real::pi(300), -290);
    CHECK_THROWS_AS(minPolyGuess(piLow, 8, mpz_class(1) << 40), InsufficientPrecision);
}

TEST_CASE("b(sqrt(-2)) on X1(4) is algebraic of degree 4") {
    EvaluatedPoint p = evalPoint({-2, 1, 0, 4}, B);
    auto poly = minPolyGuess(p.b, 4, mpz_class(1) << 32);
    REQUIRE(poly.has_value());
    // 64 b^4 - 1792 b^3 - 368 b^2 - 32 b - 1, fixed up to the canonical sign
    CHECK(poly->coeffs == std::vector<mpz_class>{-1, -32, -368, -1792, 64});

    VerificationReport ev = algebraicityEvidence(p, 4, B, mpz_class(1) << 32);
    CHECK(ev.verdict == Verdict::verified);
}

TEST_CASE("distribution relation, orbit-matching surrogate") {
    DistributionInstance inst{{-7, 1, 0, 4}, 13, RaiseCase::inertPrime};
    DistributionOptions opt;
    opt.mode = DivisorMode::orbitMatching;
    VerificationReport rep = verifyDistribution(inst, B, opt);
    CHECK(rep.verdict == Verdict::verified);
    CHECK(rep.maxMatchErrorExp < -200);

    opt.corruptFiber = true;
    VerificationReport bad = verifyDistribution(inst, B, opt);
    CHECK(bad.verdict == Verdict::falsified);
}

TEST_CASE("distribution relation, symmetric-function surrogate") {
    DistributionInstance inst{{-2, 1, 0, 4}, 5, RaiseCase::inertPrime};
    DistributionOptions opt; // degree 8, height 2^96, escalates to 1200 bits
    VerificationReport rep = verifyDistribution(inst, B, opt);
    CHECK(rep.verdict == Verdict::verified);
    CHECK(rep.maxMatchErrorExp < -1000);

    opt.corruptFiber = true;
    VerificationReport bad = verifyDistribution(inst, B, opt);
    CHECK(bad.verdict == Verdict::falsified);
}

TEST_CASE("orbit-matching mode rejects discriminants above -7") {
    // 11 is inert in Q(i) and 11 = 1 mod 5, so only the dK guard can fire
    DistributionInstance inst{{-1, 1, 0, 5}, 11, RaiseCase::inertPrime};
    DistributionOptions opt;
    opt.mode = DivisorMode::orbitMatching;
    CHECK_THROWS_AS(verifyDistribution(inst, B, opt), CaseMismatch);
}
