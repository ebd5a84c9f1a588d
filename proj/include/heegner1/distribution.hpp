#ifndef HEEGNER1_DISTRIBUTION_HPP
#define HEEGNER1_DISTRIBUTION_HPP

#include "heegner1/fiber.hpp"
#include "heegner1/minpoly.hpp"
#include "heegner1/padic.hpp"

namespace heegner1 {

enum class DivisorMode { symmetricFunctions, orbitMatching };

struct DistributionOptions {
    long tolLog2 = -100;
    DivisorMode mode = DivisorMode::symmetricFunctions;
    int degreeBound = 8;
    mpz_class heightBound = mpz_class(1) << 96;
    // negative control: replace one fiber b-value by a junk constant
    bool corruptFiber = false;
    int escalationSteps = 3; // B, 2B, 4B
};

VerificationReport verifyDistribution(const DistributionInstance& inst, long B,
                                      const DistributionOptions& opt = {});

VerificationReport algebraicityEvidence(const EvaluatedPoint& point, int degreeBound, long B,
                                        const mpz_class& heightBound = mpz_class(1) << 96);

} // namespace heegner1

#endif
