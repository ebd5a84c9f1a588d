#include <doctest.h>

#include "heegner1/errors.hpp"
#include "heegner1/galois.hpp"

using namespace heegner1;

namespace {

constexpr long B = 300;

long gap(const BigComplex& a, const BigComplex& b) { return diffMagExp(a, b); }

bool containsModSign(const std::vector<WMatrix>& g, const WMatrix& w) {
    for (auto& e : g)
        if (wEqModSign(e, w)) return true;
    return false;
}

} // namespace

TEST_CASE("W_{N,theta} group structure") {
    ImagQuadField f = fieldData(-2);

    std::vector<WMatrix> g3 = wGroup(3, f);
    CHECK(g3.size() == 2);
    std::vector<WMatrix> g4 = wGroup(4, f);
    CHECK(g4.size() == 4);

    // identity first
    CHECK(g4[0].t == 1);
    CHECK(g4[0].s == 0);

    // closed under multiplication mod +/-
    for (auto& a : g4)
        for (auto& b : g4) CHECK(containsModSign(g4, wMul(a, b)));

    // determinants are units mod N
    for (auto& w : g4) CHECK(std::gcd(((w.det() % 4) + 4) % 4, 4L) == 1);

    // non-unit determinant rejected
    CHECK_THROWS_AS(makeW(4, 2, 0, f), Error);
}

TEST_CASE("index action") {
    ImagQuadField f = fieldData(-2);
    FrickeIndex r = makeIndex(mpq_class(0), mpq_class(1, 4));
    WMatrix id = makeW(4, 1, 0, f);
    CHECK(indexEq(actIndex(r, id), r));

    // diagonal t*I multiplies both entries by t
    WMatrix w3 = makeW(4, 3, 0, f);
    CHECK(indexEq(actIndex(r, w3), makeIndex(mpq_class(0), mpq_class(3, 4))));

    // composition is contravariant on row vectors: r (ab) = (r a) b
    WMatrix a = makeW(4, 1, 1, f), b2 = makeW(4, 3, 1, f);
    CHECK(indexEq(actIndex(r, wMul(a, b2)), actIndex(actIndex(r, a), b2)));

    // values wrap into [0, 1)
    FrickeIndex s = makeIndex(mpq_class(7, 4), mpq_class(-1, 4));
    CHECK(s.r1 == mpq_class(3, 4));
    CHECK(s.r2 == mpq_class(3, 4));
}

TEST_CASE("identity matrix reproduces the base point") {
    ImagQuadField f = fieldData(-2);
    ExactTau theta = thetaOf(f);
    EvaluatedPoint base = evalPointExact(theta, 4, B);
    GaloisElement id{makeW(4, 1, 0, f), principalForm(f.dK)};
    EvaluatedPoint moved = pointUnderMatrix(theta, id, 4, B);
    CHECK(gap(base.b, moved.b) < -250);
    CHECK(gap(base.c, moved.c) < -250);
}

TEST_CASE("galois orbit of b(theta) for D = -2, N = 4") {
    ImagQuadField f = fieldData(-2);
    std::vector<EvaluatedPoint> orbit = galoisOrbit(f, 4, B);
    CHECK(orbit.size() == 4);

    // orbit values are pairwise distinct
    for (size_t i = 0; i < orbit.size(); ++i)
        for (size_t j = i + 1; j < orbit.size(); ++j)
            CHECK((orbit[i].b - orbit[j].b).definitelyNonzero());

    // elementary symmetric functions are rational: x^4 - 28x^3 - (23/4)x^2 - (1/2)x - 1/64
    // has the orbit as its roots
    long prec = orbit[0].b.prec();
    BigComplex s1 = BigComplex::zero(prec), s2 = BigComplex::zero(prec);
    BigComplex s3 = BigComplex::zero(prec), s4 = BigComplex::fromLong(1, 0, prec);
    for (auto& pt : orbit) s1 = s1 + pt.b;
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = i + 1; j < 4; ++j) s2 = s2 + orbit[i].b * orbit[j].b;
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = i + 1; j < 4; ++j)
            for (size_t k = j + 1; k < 4; ++k) s3 = s3 + orbit[i].b * orbit[j].b * orbit[k].b;
    for (auto& pt : orbit) s4 = s4 * pt.b;

    CHECK(gap(s1, BigComplex::fromLong(28, 0, prec)) < -200);
    CHECK(gap(s2, BigComplex::fromRat(mpq_class(-23, 4), 0, prec)) < -200);
    CHECK(gap(s3, BigComplex::fromRat(mpq_class(1, 2), 0, prec)) < -200);
    CHECK(gap(s4, BigComplex::fromRat(mpq_class(-1, 64), 0, prec)) < -200);
}

TEST_CASE("vienna action") {
    ImagQuadField f = fieldData(-2);
    ExactTau tauK = tauKOf(f);
    EvaluatedPoint base = evalPointExact(tauK, 4, B);

    // C = 1 and C = 1 + N act trivially
    EvaluatedPoint one = viennaAct(f, KElement{1, 0}, tauK, 4, B);
    CHECK(gap(base.b, one.b) < -240);
    EvaluatedPoint five = viennaAct(f, KElement{5, 0}, tauK, 4, B);
    CHECK(gap(base.b, five.b) < -240);
    CHECK(gap(base.c, five.c) < -240);

    // integer C agrees with the diagonal W-matrix action, N = 5 has a
    // nontrivial diagonal class t = 2
    ExactTau tauK5 = tauKOf(f);
    WMatrix w2 = makeW(5, 2, 0, f);
    EvaluatedPoint viaMatrix = pointUnderMatrix(tauK5, {w2, principalForm(f.dK)}, 5, B);
    EvaluatedPoint viaVienna = viennaAct(f, KElement{2, 0}, tauK5, 5, B);
    CHECK(gap(viaMatrix.b, viaVienna.b) < -240);
    CHECK(gap(viaMatrix.c, viaVienna.c) < -240);

    // C with norm not invertible mod N rejected; so is a non-integral C
    CHECK_THROWS_AS(viennaAct(f, KElement{2, 0}, tauK, 4, B), InvalidC);
    CHECK_THROWS_AS(viennaAct(f, KElement{mpq_class(1, 3), 0}, tauK, 4, B), InvalidC);
}

TEST_CASE("beta_Q data is required for non-principal classes") {
    ImagQuadField f = fieldData(-23);
    ExactTau theta = thetaOf(f);
    GaloisElement g{makeW(4, 1, 0, f), QuadFormClass{2, 1, 3}};
    CHECK_THROWS_AS(pointUnderMatrix(theta, g, 4, B), MissingBetaQ);
}
