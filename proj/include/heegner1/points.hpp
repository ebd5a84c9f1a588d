#ifndef HEEGNER1_POINTS_HPP
#define HEEGNER1_POINTS_HPP

#include "heegner1/forms.hpp"
#include "heegner1/report.hpp"
#include "heegner1/weierstrass.hpp"

#include <optional>

namespace heegner1 {

// exact CM value re + imc*sqrt(m), m < 0 squarefree, imc > 0
struct ExactTau {
    mpq_class re;
    mpq_class imc;
    long m;
};

BigComplex tauToComplex(const ExactTau& t, long prec);
std::string tauDesc(const ExactTau& t);

ExactTau tauKOf(const ImagQuadField& f);
ExactTau thetaOf(const ImagQuadField& f);
// theta_Q = (-b + sqrt(dK)) / (2a)
ExactTau thetaOfForm(const ImagQuadField& f, const QuadFormClass& q);

struct CMPointSpec {
    long D;
    long c; // conductor, gcd(c, N) = 1
    long a;
    long N;
};

// tau' = (a + tauK)/c
ExactTau tauPrimeOf(const CMPointSpec& spec);

struct EvaluatedPoint {
    BigComplex b, c;
    long precBits = 0;
    std::string tau;
    std::optional<long> rawResidualExp;
    std::optional<CMPointSpec> spec;
};

// core evaluator: b, c from the wp-values at z1, z2 on the given lattice
EvaluatedPoint evalPointOnBasis(const LatticeBasis& basis, const BigComplex& z1,
                                const BigComplex& z2, long N, long B,
                                const std::string& desc = "");
EvaluatedPoint evalPointTau(const BigComplex& tau, long N, long B, const std::string& desc = "");
EvaluatedPoint evalPointExact(const ExactTau& tau, long N, long B);
EvaluatedPoint evalPoint(const CMPointSpec& spec, long B);

VerificationReport gamma1InvarianceCheck(long N, const std::vector<BigComplex>& taus,
                                         const std::vector<std::array<long, 4>>& matrices,
                                         long B);

} // namespace heegner1

#endif
