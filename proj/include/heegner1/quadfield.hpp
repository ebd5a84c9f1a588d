#ifndef HEEGNER1_QUADFIELD_HPP
#define HEEGNER1_QUADFIELD_HPP

#include <gmpxx.h>

#include <string>

namespace heegner1 {

/*
 * K = Q(sqrt(D)), D squarefree negative. tauK = sqrt(D) or (sqrt(D)+1)/2;
 * theta = sqrt(dK)/2 or (-1+sqrt(dK))/2 with minimal polynomial
 * x^2 + Btheta x + Ctheta.
 */
struct ImagQuadField {
    long D;
    long dK;
    long tauTrace; // tauK satisfies x^2 - tauTrace*x + tauNorm
    long tauNorm;
    long Btheta;
    long Ctheta;
};

ImagQuadField fieldData(long D);

enum class Splitting { split, inert, ramified };
Splitting primeSplitting(long p, const ImagQuadField& field);
std::string splittingName(Splitting s);

// element x + y*tauK of K
struct KElement {
    mpq_class x, y;
};

KElement kAdd(const ImagQuadField& f, const KElement& a, const KElement& b);
KElement kSub(const ImagQuadField& f, const KElement& a, const KElement& b);
KElement kMul(const ImagQuadField& f, const KElement& a, const KElement& b);
KElement kConj(const ImagQuadField& f, const KElement& a);
mpq_class kNorm(const ImagQuadField& f, const KElement& a);
KElement kInv(const ImagQuadField& f, const KElement& a);
bool kEq(const KElement& a, const KElement& b);
std::string kStr(const KElement& a);

// theta of the field expressed in the basis (1, tauK)
KElement thetaElement(const ImagQuadField& f);

} // namespace heegner1

#endif
