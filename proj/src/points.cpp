#include "heegner1/points.hpp"

#include "heegner1/errors.hpp"
#include "heegner1/rawform.hpp"

#include <sstream>

namespace heegner1 {

BigComplex tauToComplex(const ExactTau& t, long prec) {
    if (t.m >= 0) throw InvalidD("CM surd must have negative radicand");
    Real re = Real::ofRat(t.re, prec);
    Real im = Real::ofRat(t.imc, prec) * Real::sqrtOfLong(-t.m, prec);
    BigComplex v(std::move(re), std::move(im), 0);
    return v.withErrExp(v.magExp() - prec + 4);
}

std::string tauDesc(const ExactTau& t) {
    std::ostringstream out;
    out << t.re.get_str() << " + " << t.imc.get_str() << "*sqrt(" << t.m << ")";
    return out.str();
}

ExactTau tauKOf(const ImagQuadField& f) {
    if (f.tauTrace == 0) return {mpq_class(0), mpq_class(1), f.D};
    return {mpq_class(1, 2), mpq_class(1, 2), f.D};
}

ExactTau thetaOf(const ImagQuadField& f) {
    if (f.Btheta == 0) return {mpq_class(0), mpq_class(1), f.D};
    return {mpq_class(-1, 2), mpq_class(1, 2), f.D};
}

ExactTau thetaOfForm(const ImagQuadField& f, const QuadFormClass& q) {
    if (static_cast<long>(q.b) * q.b - 4L * q.a * q.c != f.dK)
        throw InvalidD("form discriminant does not match the field");
    // (-b + sqrt(dK))/(2a); dK = m * s^2 with m squarefree
    long s = (f.dK == 4 * f.D) ? 2 : 1;
    return {mpq_class(-q.b, 2 * q.a), mpq_class(s, 2 * q.a), f.D};
}

ExactTau tauPrimeOf(const CMPointSpec& spec) {
    ImagQuadField f = fieldData(spec.D);
    ExactTau tk = tauKOf(f);
    return {(tk.re + spec.a) / spec.c, tk.imc / spec.c, tk.m};
}

EvaluatedPoint evalPointOnBasis(const LatticeBasis& basis, const BigComplex& z1,
                                const BigComplex& z2, long N, long B,
                                const std::string& desc) {
    if (N <= 3) throw DegenerateLevel("level must be at least 4");
    auto [p1, pp1] = wpPair(z1, basis, B);
    auto [p2, pp2] = wpPair(z2, basis, B);
    if (!pp1.definitelyNonzero())
        throw PoleAtTorsion("wp'(z1) vanishes within error radius");
    BigComplex d = p1 - p2;
    EvaluatedPoint pt;
    pt.b = -(d * d * d) / (pp1 * pp1);
    pt.c = -pp2 / pp1;
    pt.precBits = B;
    pt.tau = desc;
    if (N >= 4 && N <= 13)
        pt.rawResidualExp = evalCurveEquation(pt.b, pt.c, static_cast<int>(N), B).magExp();
    return pt;
}

EvaluatedPoint evalPointTau(const BigComplex& tau, long N, long B, const std::string& desc) {
    long prec = std::max(tau.prec(), B + 48);
    LatticeBasis basis{tau, BigComplex::fromLong(1, 0, prec)};
    BigComplex z1 = BigComplex::fromRat(mpq_class(1, N), 0, prec);
    BigComplex z2 = BigComplex::fromRat(mpq_class(2, N), 0, prec);
    return evalPointOnBasis(basis, z1, z2, N, B, desc);
}

EvaluatedPoint evalPointExact(const ExactTau& tau, long N, long B) {
    return evalPointTau(tauToComplex(tau, B + 48), N, B, tauDesc(tau));
}

EvaluatedPoint evalPoint(const CMPointSpec& spec, long B) {
    if (spec.N <= 3) throw DegenerateLevel("level must be at least 4");
    EvaluatedPoint pt = evalPointExact(tauPrimeOf(spec), spec.N, B);
    pt.spec = spec;
    return pt;
}

VerificationReport gamma1InvarianceCheck(long N, const std::vector<BigComplex>& taus,
                                         const std::vector<std::array<long, 4>>& matrices,
                                         long B) {
    VerificationReport rep;
    long tol = -(B - 60);
    long worst = BigComplex::kFloor;
    for (size_t ti = 0; ti < taus.size(); ++ti) {
        EvaluatedPoint base = evalPointTau(taus[ti], N, B);
        for (size_t mi = 0; mi < matrices.size(); ++mi) {
            const auto& g = matrices[mi];
            long prec = std::max(taus[ti].prec(), B + 48);
            BigComplex num = taus[ti].mulRat(mpq_class(g[0])) + BigComplex::fromLong(g[1], 0, prec);
            BigComplex den = taus[ti].mulRat(mpq_class(g[2])) + BigComplex::fromLong(g[3], 0, prec);
            EvaluatedPoint moved = evalPointTau(num / den, N, B);
            long db = diffMagExp(base.b, moved.b);
            long dc = diffMagExp(base.c, moved.c);
            long dm = std::max(db, dc);
            worst = std::max(worst, dm);
            bool pass = dm < tol;
            std::ostringstream detail;
            detail << "tau#" << ti << " gamma#" << mi << " diff exp " << dm;
            rep.add("modularity", "gamma1-invariance", pass, detail.str());
        }
    }
    rep.maxMatchErrorExp = worst;
    rep.verdict = rep.allPassed() ? Verdict::verified : Verdict::falsified;
    return rep;
}

} // namespace heegner1
