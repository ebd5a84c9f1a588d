#include "heegner1/fiber.hpp"

#include "heegner1/errors.hpp"

#include <numeric>

namespace heegner1 {

void checkInstance(const DistributionInstance& inst) {
    const CMPointSpec& s = inst.spec;
    if (s.N < 4) throw DegenerateLevel("level must be at least 4");
    if (std::gcd(s.c, s.N) != 1) throw CaseMismatch("conductor not coprime to N");
    ImagQuadField f = fieldData(s.D);
    if (inst.caseTag == RaiseCase::inertPrime) {
        if (std::gcd(inst.p, s.c * s.N) != 1)
            throw CaseMismatch("p must be coprime to c*N in the inert case");
        if (((inst.p % s.N) + s.N) % s.N != 1)
            throw CaseMismatch("p must be 1 mod N in the inert case");
        if (primeSplitting(inst.p, f) != Splitting::inert)
            throw CaseMismatch("p must be inert in K");
    } else {
        if (s.c % inst.p != 0) throw CaseMismatch("p must divide the conductor");
        if (s.N % inst.p == 0 || f.dK % inst.p == 0)
            throw CaseMismatch("p must not divide N*disc(K)");
    }
}

FiberResult tpFiber(const DistributionInstance& inst, long B) {
    checkInstance(inst);
    FiberResult out;
    ExactTau tp = tauPrimeOf(inst.spec);
    long p = inst.p, N = inst.spec.N;
    for (long j = 0; j < p; ++j) {
        ExactTau tj{(tp.re + j) / p, tp.imc / p, tp.m};
        out.points.push_back(evalPointExact(tj, N, B));
    }
    ExactTau pTau{tp.re * p, tp.imc * p, tp.m};
    if (inst.caseTag == RaiseCase::inertPrime) {
        // index stays 1/N: p == 1 mod N absorbs the rescaling
        out.points.push_back(evalPointExact(pTau, N, B));
    } else {
        FrickeIndex i1 = makeIndex(0, mpq_class(p, N));
        FrickeIndex i2 = makeIndex(0, mpq_class(2 * p, N));
        out.diamond = evalPointIndexed(pTau, i1, i2, N, B);
    }
    return out;
}

} // namespace heegner1
