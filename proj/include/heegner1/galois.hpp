#ifndef HEEGNER1_GALOIS_HPP
#define HEEGNER1_GALOIS_HPP

#include "heegner1/points.hpp"

#include <array>

namespace heegner1 {

/*
 * W_{N,theta} matrix ((t - Btheta*s, -Ctheta*s), (s, t)) over Z/N,
 * determinant t^2 - Btheta*t*s + Ctheta*s^2 a unit mod N.
 */
struct WMatrix {
    long N;
    long t, s; // reduced mod N
    long Btheta, Ctheta;

    std::array<std::array<long, 2>, 2> entries() const;
    long det() const;
    bool isGNType() const { return s == 0; }
    bool operator==(const WMatrix& o) const { return N == o.N && t == o.t && s == o.s; }
};

WMatrix makeW(long N, long t, long s, const ImagQuadField& f);
WMatrix wMul(const WMatrix& a, const WMatrix& b);
// representatives modulo +/-, identity first
std::vector<WMatrix> wGroup(long N, const ImagQuadField& f);
bool wEqModSign(const WMatrix& a, const WMatrix& b);

// row vector r in (1/N)Z^2 / Z^2
struct FrickeIndex {
    mpq_class r1, r2;
};

FrickeIndex makeIndex(const mpq_class& r1, const mpq_class& r2);
FrickeIndex actIndex(const FrickeIndex& r, const std::array<std::array<long, 2>, 2>& m);
FrickeIndex actIndex(const FrickeIndex& r, const WMatrix& w);
bool indexEq(const FrickeIndex& a, const FrickeIndex& b);

struct BetaQEntry {
    QuadFormClass form;
    std::array<std::array<long, 2>, 2> matrix;
};
struct BetaQData {
    std::vector<BetaQEntry> entries;
    std::array<std::array<long, 2>, 2> lift;
};
BetaQData loadBetaQ(const std::string& path);

struct GaloisElement {
    WMatrix alpha;
    QuadFormClass Q; // principal unless beta_Q data is supplied
};

EvaluatedPoint pointUnderMatrix(const ExactTau& tau, const GaloisElement& g, long N, long B,
                                const BetaQData* betaQ = nullptr);

// evaluates a point with both wp-indices mapped by the given index images
EvaluatedPoint evalPointIndexed(const ExactTau& tau, const FrickeIndex& i1,
                                const FrickeIndex& i2, long N, long B);

EvaluatedPoint viennaAct(const ImagQuadField& f, const KElement& C, const ExactTau& tau,
                         long N, long B);

// orbit of the point at theta under wGroup, principal class
std::vector<EvaluatedPoint> galoisOrbit(const ImagQuadField& f, long N, long B);

} // namespace heegner1

#endif
