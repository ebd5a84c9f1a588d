#ifndef HEEGNER1_FIBER_HPP
#define HEEGNER1_FIBER_HPP

#include "heegner1/cosets.hpp"
#include "heegner1/galois.hpp"

namespace heegner1 {

struct DistributionInstance {
    CMPointSpec spec;
    long p;
    RaiseCase caseTag;
};

void checkInstance(const DistributionInstance& inst);

struct FiberResult {
    // inert case: p+1 points, the last is P_{p tau'}; p|c case: p points
    std::vector<EvaluatedPoint> points;
    // p|c case only: <p> P_{p tau'}, evaluated with index p/N
    std::optional<EvaluatedPoint> diamond;
};

FiberResult tpFiber(const DistributionInstance& inst, long B);

} // namespace heegner1

#endif
