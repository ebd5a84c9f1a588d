#include <doctest.h>

#include "heegner1/errors.hpp"
#include "heegner1/rawform.hpp"

using namespace heegner1;

namespace {

BivariatePolyQ B() { return BivariatePolyQ::varB(); }
BivariatePolyQ C() { return BivariatePolyQ::varC(); }

RatFuncQ frac(const BivariatePolyQ& n, const BivariatePolyQ& d) { return RatFuncQ(n, d); }

} // namespace

TEST_CASE("small multiples of P = (0,0) in Tate normal form") {
    auto b = B(), c = C();
    CHECK(tateMultiple(1) == TatePoint::base());
    CHECK(tateMultiple(2) == TatePoint::affine(RatFuncQ::ofPoly(b), RatFuncQ::ofPoly(b * c)));
    CHECK(tateMultiple(3) == TatePoint::affine(RatFuncQ::ofPoly(c), RatFuncQ::ofPoly(b - c)));
    CHECK(tateMultiple(4) == TatePoint::affine(frac(b * (b - c), c * c),
                                               -frac(b * b * (b - c - c * c), c * c * c)));
    auto bc2 = b - c - c * c;
    CHECK(tateMultiple(5) == TatePoint::affine(-frac(b * c * bc2, (b - c) * (b - c)),
                                               frac(b * c * c * (b * b - b * c - c * c * c),
                                                    (b - c) * (b - c) * (b - c))));
    auto y6n = c * (b * b + b * b - b * c - b * c - b * c - b * c * c + c * c) * (b - c) * (b - c);
    CHECK(tateMultiple(6) == TatePoint::affine(frac((b - c) * (b * b - b * c - c * c * c), bc2 * bc2),
                                               frac(y6n, bc2 * bc2 * bc2)));
}

TEST_CASE("multiples satisfy the curve equation and the group law") {
    for (int n = 1; n <= 9; ++n) CHECK(onTateCurve(tateMultiple(n)));
    CHECK(tateAdd(tateMultiple(3), tateMultiple(4)) == tateMultiple(7));
    CHECK(tateAdd(tateMultiple(2), tateMultiple(5)) == tateMultiple(7));
    CHECK(tateAdd(tateMultiple(4), tateMultiple(4)) == tateMultiple(8));
    CHECK(tateAdd(tateMultiple(5), tateNegate(tateMultiple(5))) == TatePoint::atInfinity());
    CHECK(tateAdd(TatePoint::atInfinity(), tateMultiple(3)) == tateMultiple(3));
}

TEST_CASE("raw forms of X1(N), 4 <= N <= 13") {
    CHECK(rawForm(4).toText() == "c");
    CHECK(rawForm(5).toText() == "b - c");
    CHECK(rawForm(6).toText() == "c^2 - b + c");
    CHECK(rawForm(7).toText() == "c^3 - b^2 + b*c");
    CHECK(rawForm(8).toText() == "b*c^2 - 2*b^2 + 3*b*c - c^2");
    CHECK(rawForm(9).toText() == "c^5 - b*c^3 + c^4 - b^3 + 3*b^2*c - 3*b*c^2 + c^3");
    CHECK(rawForm(10).toText() == "b*c^4 + c^5 - 3*b^2*c^2 + 3*b*c^3 + b^3 - 2*b^2*c + b*c^2");
    CHECK(rawForm(11).toText() ==
          "b*c^7 - 3*b^2*c^5 + 3*b*c^6 + 4*b^3*c^3 - 9*b^2*c^4 + 6*b*c^5 - c^6 - b^5 + 3*b^4*c "
          "- 3*b^3*c^2 + b^2*c^3");
    CHECK(rawForm(12).toText() ==
          "c^6 - b^3*c^2 + b*c^4 + 3*b^4 - 9*b^3*c + 10*b^2*c^2 - 5*b*c^3 + c^4");
    CHECK(rawForm(13).toText() ==
          "b^2*c^9 - 5*b^3*c^7 + 6*b^2*c^8 - c^10 + 9*b^4*c^5 - 24*b^3*c^6 + 21*b^2*c^7 - 6*b*c^8 "
          "- 4*b^5*c^3 + 15*b^4*c^4 - 21*b^3*c^5 + 13*b^2*c^6 - 3*b*c^7 - b^7 + 6*b^6*c - 15*b^5*c^2 "
          "+ 20*b^4*c^3 - 15*b^3*c^4 + 6*b^2*c^5 - b*c^6");
    CHECK_THROWS_AS(rawForm(3), UnsupportedN);
    CHECK_THROWS_AS(rawForm(14), UnsupportedN);
}

TEST_CASE("raw form is independent of the torsion pairing used") {
    // 11P = O also forces x_{4P} = x_{7P}; the same irreducible factor must show up
    TatePoint p4 = tateMultiple(4), p7 = tateMultiple(7);
    RatFuncQ diff = p4.x - p7.x;
    BivariatePolyQ num = diff.num().primitiveCanonical();
    CHECK(BivariatePolyQ::divExact(num, rawForm(11)).has_value());
}

TEST_CASE("optimized model of X1(11)") {
    OptimizedModelReport rep = optimizedModelCheck();
    CHECK(rep.divisible);
    // divisor f = y^2 + (x^2+1)y + x in the (x, y) slots
    auto x = B(), y = C();
    BivariatePolyQ f = y * y + (x * x + BivariatePolyQ::constant(1)) * y + x;
    CHECK(rep.cofactor * f == rep.substituted);
    CHECK(!rep.cofactor.isZero());

    // perturbed substitution must not be divisible
    BivariatePolyQ broken = rep.substituted + BivariatePolyQ::constant(1);
    CHECK(!BivariatePolyQ::divExact(broken, f).has_value());
}

TEST_CASE("numeric curve-equation residual") {
    long prec = 360;
    // b = c is on X1(5)
    BigComplex b5 = BigComplex::fromRat(mpq_class(2, 3), 0, prec);
    CHECK(evalCurveEquation(b5, b5, 5, 300).consistentWithZero(8));
    // and a generic point is not
    BigComplex c5 = BigComplex::fromRat(mpq_class(1, 2), 0, prec);
    CHECK(evalCurveEquation(b5, c5, 5, 300).definitelyNonzero());
    CHECK(evalCurveEquation(b5, c5, 5, 300).magExp() > -20);
}
