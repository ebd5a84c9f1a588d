#ifndef HEEGNER1_COSETS_HPP
#define HEEGNER1_COSETS_HPP

#include "heegner1/quadfield.hpp"

#include <vector>

namespace heegner1 {

enum class RaiseCase { inertPrime, dividesConductor };

// tauPrime = (a + tauK)/c
KElement makeTauPrime(const ImagQuadField& f, long a, long c);

std::vector<KElement> conductorRaiseCosets(const ImagQuadField& f, long c, long p,
                                           RaiseCase caseTag, const KElement& tauPrime);

bool cosetsDistinctCheck(const ImagQuadField& f, const std::vector<KElement>& reps,
                         long p, RaiseCase caseTag, long conductor);

struct RamificationProfile {
    bool splitsCompletelyBelow;
    long relativeDegree;
};

RamificationProfile ramificationProfile(const ImagQuadField& f, long c, long p, long N);

} // namespace heegner1

#endif
