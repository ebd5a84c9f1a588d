#ifndef HEEGNER1_LATTICE_HPP
#define HEEGNER1_LATTICE_HPP

#include "heegner1/bigcomplex.hpp"

#include <array>

namespace heegner1 {

struct LatticeBasis {
    BigComplex w1, w2;
};

/*
 * Lambda = scale * (tau, 1) with tau in the standard fundamental domain.
 * unimodular * (w1, w2)^T = (scale*tau, scale)^T, det = +/-1.
 */
struct ReducedLattice {
    BigComplex tau;
    BigComplex scale;
    std::array<std::array<mpz_class, 2>, 2> unimodular;
};

ReducedLattice latticeReduce(const LatticeBasis& basis);

} // namespace heegner1

#endif
