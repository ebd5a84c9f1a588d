#ifndef HEEGNER1_RAWFORM_HPP
#define HEEGNER1_RAWFORM_HPP

#include "heegner1/tate.hpp"

namespace heegner1 {

// defining polynomial of X1(N) in (b, c) from the torsion condition NP = O,
// degenerate loci b, c, b-c, b-c-c^2 divided out, content-free, canonical sign
const BivariatePolyQ& rawForm(int N);

struct OptimizedModelReport {
    bool divisible = false;
    BivariatePolyQ substituted; // raw form after b, c substitution, in (x, y)
    BivariatePolyQ cofactor;
};

OptimizedModelReport optimizedModelCheckOf(const BivariatePolyQ& raw11);
OptimizedModelReport optimizedModelCheck();

BigComplex evalCurveEquation(const BigComplex& bVal, const BigComplex& cVal, int N, long B);

} // namespace heegner1

#endif
