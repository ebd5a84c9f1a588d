#ifndef HEEGNER1_MINPOLY_HPP
#define HEEGNER1_MINPOLY_HPP

#include "heegner1/bigcomplex.hpp"

#include <optional>
#include <string>
#include <vector>

namespace heegner1 {

// integer polynomial, ascending coefficients, primitive, positive leading term
struct IntPoly {
    std::vector<mpz_class> coeffs;
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    std::string toText(const std::string& var = "x") const;
};

std::optional<IntPoly> minPolyGuess(const BigComplex& x, int maxDeg, const mpz_class& heightBound);

} // namespace heegner1

#endif
