#ifndef HEEGNER1_LLL_HPP
#define HEEGNER1_LLL_HPP

#include <gmpxx.h>

#include <vector>

namespace heegner1 {

// in-place LLL reduction of the row basis, exact rational Gram-Schmidt
void lllReduce(std::vector<std::vector<mpz_class>>& basis,
               const mpq_class& delta = mpq_class(99, 100));

} // namespace heegner1

#endif
