#ifndef HEEGNER1_WEIERSTRASS_HPP
#define HEEGNER1_WEIERSTRASS_HPP

#include "heegner1/lattice.hpp"

#include <utility>

namespace heegner1 {

// g2, g3 of the lattice (1, tau); requires Im tau >= sqrt(3)/2
std::pair<BigComplex, BigComplex> eisensteinInvariants(const BigComplex& tau, long B);

BigComplex wp(const BigComplex& z, const LatticeBasis& basis, long B);
BigComplex wpPrime(const BigComplex& z, const LatticeBasis& basis, long B);
// both values with one shared lattice/argument reduction
std::pair<BigComplex, BigComplex> wpPair(const BigComplex& z, const LatticeBasis& basis, long B);

BigComplex jInvariant(const BigComplex& tau, long B);

// truncated direct sum over |m|, |n| <= R; slow, used as a test oracle
std::pair<BigComplex, BigComplex> eisensteinLatticeSum(const BigComplex& tau, long R, long B);

} // namespace heegner1

#endif
