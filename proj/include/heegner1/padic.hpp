#ifndef HEEGNER1_PADIC_HPP
#define HEEGNER1_PADIC_HPP

#include "heegner1/cosets.hpp"

#include <array>
#include <string>
#include <vector>

namespace heegner1 {

// columns are lattice generators written in the basis (1, tauK) of K
struct PadicLatticeBasis {
    std::array<std::array<mpq_class, 2>, 2> m;
    long p;
};

PadicLatticeBasis latticeOf(const ImagQuadField& f, const KElement& g1, const KElement& g2, long p);
// lattice multiplied by a K-element
PadicLatticeBasis latticeMul(const ImagQuadField& f, const KElement& u, const PadicLatticeBasis& L);
PadicLatticeBasis latticeScale(const PadicLatticeBasis& L, const mpq_class& s);

bool latticeEqualAtP(const PadicLatticeBasis& B1, const PadicLatticeBasis& B2);

struct SjCheckRecord {
    long j;
    bool pass;
    std::string note;
};

struct SjLatticeReport {
    bool verified = true;
    long failedJ = -1;
    std::vector<SjCheckRecord> records;
    std::string otherPrimesNote;
    std::string indexNote;
};

SjLatticeReport verifySjLattices(const ImagQuadField& f, long c, long a, long p,
                                 RaiseCase caseTag, bool corruptMultiplier = false);

} // namespace heegner1

#endif
