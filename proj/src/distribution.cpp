#include "heegner1/distribution.hpp"

#include "heegner1/errors.hpp"

#include <sstream>

namespace heegner1 {

namespace {

std::vector<BigComplex> elementarySymmetric(const std::vector<BigComplex>& vals, long prec) {
    // coefficients of prod (x + v_i); e[k] after the loop
    std::vector<BigComplex> e(vals.size() + 1, BigComplex::zero(prec));
    e[0] = BigComplex::fromLong(1, 0, prec);
    size_t used = 0;
    for (const auto& v : vals) {
        ++used;
        for (size_t k = used; k >= 1; --k)
            e[k] = e[k] + e[k - 1] * v;
    }
    return e;
}

struct RecognitionOutcome {
    bool recognized = false;
    bool precisionLimited = false;
    std::string poly;
};

RecognitionOutcome tryRecognize(const BigComplex& x, int degreeBound, const mpz_class& heightBound) {
    RecognitionOutcome out;
    try {
        auto p = minPolyGuess(x, degreeBound, heightBound);
        if (p) {
            out.recognized = true;
            out.poly = p->toText();
        }
    } catch (const InsufficientPrecision&) {
        out.precisionLimited = true;
    }
    return out;
}

} // namespace

VerificationReport verifyDistribution(const DistributionInstance& inst, long B,
                                      const DistributionOptions& opt) {
    checkInstance(inst);
    VerificationReport rep;
    const CMPointSpec& s = inst.spec;
    ImagQuadField f = fieldData(s.D);

    // layer 1: exact lattice identities
    SjLatticeReport sj = verifySjLattices(f, s.c, s.a, inst.p, inst.caseTag);
    for (auto& r : sj.records) {
        std::ostringstream name;
        name << "s_j lattice identity, j=" << r.j;
        rep.add("lattice", name.str(), r.pass, r.note);
    }
    rep.add("lattice", "components at l != p", true, sj.otherPrimesNote);

    // layer 2: exact coset system
    KElement tauPrime = makeTauPrime(f, s.a, s.c);
    auto reps = conductorRaiseCosets(f, s.c, inst.p, inst.caseTag, tauPrime);
    size_t expected = inst.caseTag == RaiseCase::inertPrime ? static_cast<size_t>(inst.p) + 1
                                                            : static_cast<size_t>(inst.p);
    rep.add("coset", "representative count", reps.size() == expected,
            "got " + std::to_string(reps.size()) + ", expected " + std::to_string(expected));
    bool distinct = cosetsDistinctCheck(f, reps, inst.p, inst.caseTag, s.c);
    rep.add("coset", "pairwise distinctness", distinct);

    if (!rep.allPassed()) {
        rep.verdict = Verdict::falsified;
        return rep;
    }

    // layer 3: numeric divisor check with precision escalation
    bool inconclusive = false;
    for (int step = 0; step < opt.escalationSteps; ++step) {
        long Bcur = B << step;
        std::vector<ReportItem> attempt;
        bool failed = false;
        inconclusive = false;

        FiberResult fiber = tpFiber(inst, Bcur);
        std::vector<BigComplex> bVals, cVals;
        for (auto& pt : fiber.points) {
            bVals.push_back(pt.b);
            cVals.push_back(pt.c);
        }
        if (opt.corruptFiber && !bVals.empty())
            bVals[0] = BigComplex::fromRat(mpq_class(355, 113), mpq_class(1, 7), bVals[0].prec());

        long worst = BigComplex::kFloor;
        for (auto& pt : fiber.points)
            if (pt.rawResidualExp) worst = std::max(worst, *pt.rawResidualExp);
        attempt.push_back({"divisor", "fiber model membership", worst < opt.tolLog2,
                           "max raw-form residual exp " + std::to_string(worst)});
        if (worst >= opt.tolLog2) failed = true;
        rep.maxMatchErrorExp = worst;

        if (opt.mode == DivisorMode::symmetricFunctions) {
            long prec = Bcur + 48;
            auto eb = elementarySymmetric(bVals, prec);
            auto ec = elementarySymmetric(cVals, prec);
            for (size_t k = 1; k < eb.size(); ++k) {
                auto ob = tryRecognize(eb[k], opt.degreeBound, opt.heightBound);
                std::ostringstream det;
                det << (ob.recognized ? ob.poly : (ob.precisionLimited ? "precision-limited" : "no certified relation"));
                attempt.push_back({"divisor", "e" + std::to_string(k) + "(b-values) recognized",
                                   ob.recognized, det.str()});
                if (!ob.recognized) {
                    failed = failed || !ob.precisionLimited;
                    inconclusive = inconclusive || ob.precisionLimited;
                }
                auto oc = tryRecognize(ec[k], opt.degreeBound, opt.heightBound);
                attempt.push_back({"divisor", "e" + std::to_string(k) + "(c-values) recognized",
                                   oc.recognized,
                                   oc.recognized ? oc.poly
                                                 : (oc.precisionLimited ? "precision-limited" : "no certified relation")});
                if (!oc.recognized) {
                    failed = failed || !oc.precisionLimited;
                    inconclusive = inconclusive || oc.precisionLimited;
                }
            }
            // a single member must not be rational over the base
            auto single = tryRecognize(bVals[0], opt.degreeBound, opt.heightBound);
            attempt.push_back({"divisor", "single fiber b-value not recognized", !single.recognized,
                               single.recognized ? "unexpectedly recognized: " + single.poly
                                                 : (single.precisionLimited ? "precision-limited" : "rejected as expected")});
            if (single.recognized) failed = true;
            if (single.precisionLimited) inconclusive = true;
        } else {
            if (s.c != 1 || f.dK > -7)
                throw CaseMismatch("orbit-matching mode needs c = 1 and dK <= -7");
            // conjugation closure: complex conjugation permutes the fiber
            long tol = std::min(opt.tolLog2, -(Bcur / 3));
            std::vector<bool> taken(bVals.size(), false);
            bool matched = true, ambiguous = false;
            for (auto& v : bVals) {
                BigComplex target = v.conj();
                long best = 1L << 40, second = 1L << 40;
                size_t bestIdx = bVals.size();
                for (size_t j = 0; j < bVals.size(); ++j) {
                    if (taken[j]) continue;
                    long d = diffMagExp(target, bVals[j]);
                    if (d < best) {
                        second = best;
                        best = d;
                        bestIdx = j;
                    } else if (d < second) {
                        second = d;
                    }
                }
                if (bestIdx == bVals.size() || best >= tol) { matched = false; break; }
                if (second < best + 4) ambiguous = true;
                taken[bestIdx] = true;
            }
            attempt.push_back({"divisor", "conjugation closure of the fiber", matched && !ambiguous,
                               ambiguous ? "ambiguous nearest match" : ""});
            if (!(matched && !ambiguous)) failed = true;
            long prec = Bcur + 48;
            auto eb = elementarySymmetric(bVals, prec);
            for (size_t k = 1; k < eb.size(); ++k) {
                bool real = eb[k].im().isZero() || eb[k].im().expOf() < tol;
                attempt.push_back({"divisor", "e" + std::to_string(k) + "(b-values) real", real, ""});
                if (!real) failed = true;
            }
        }

        if (!inconclusive || step == opt.escalationSteps - 1) {
            for (auto& it : attempt) rep.details.push_back(it);
            rep.verdict = failed ? Verdict::falsified
                                 : (inconclusive ? Verdict::inconclusive : Verdict::verified);
            return rep;
        }
    }
    rep.verdict = Verdict::inconclusive;
    return rep;
}

VerificationReport algebraicityEvidence(const EvaluatedPoint& point, int degreeBound, long B,
                                        const mpz_class& heightBound) {
    (void)B;
    VerificationReport rep;
    auto ob = tryRecognize(point.b, degreeBound, heightBound);
    rep.add("algebraicity", "b recognized", ob.recognized,
            ob.recognized ? ob.poly : (ob.precisionLimited ? "precision-limited" : "no certified relation"));
    auto oc = tryRecognize(point.c, degreeBound, heightBound);
    rep.add("algebraicity", "c recognized", oc.recognized,
            oc.recognized ? oc.poly : (oc.precisionLimited ? "precision-limited" : "no certified relation"));
    if (ob.recognized && oc.recognized)
        rep.verdict = Verdict::verified;
    else if (ob.precisionLimited || oc.precisionLimited)
        rep.verdict = Verdict::inconclusive;
    else
        rep.verdict = Verdict::falsified;
    return rep;
}

} // namespace heegner1
