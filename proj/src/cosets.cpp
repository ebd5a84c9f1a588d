#include "heegner1/cosets.hpp"

#include "heegner1/errors.hpp"

#include <numeric>

namespace heegner1 {

namespace {

long vP(mpz_class n, long p) {
    if (n == 0) return -1;
    long v = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p))) {
        n /= p;
        ++v;
    }
    return v;
}

// residue of an exact rational mod M; requires the denominator invertible
mpz_class ratMod(const mpq_class& q, const mpz_class& M) {
    mpz_class den = q.get_den(), inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), M.get_mpz_t()) == 0)
        throw CaseMismatch("denominator not invertible in the finite quotient");
    mpz_class r = (q.get_num() % M) * inv % M;
    if (r < 0) r += M;
    return r;
}

struct ResElt {
    mpz_class x, y;
};

ResElt toRes(const ImagQuadField& f, const KElement& a, const mpz_class& M) {
    (void)f;
    return {ratMod(a.x, M), ratMod(a.y, M)};
}

ResElt resMul(const ImagQuadField& f, const ResElt& a, const ResElt& b, const mpz_class& M) {
    mpz_class yy = a.y * b.y % M;
    mpz_class x = (a.x * b.x % M - yy * f.tauNorm % M) % M;
    mpz_class y = (a.x * b.y + a.y * b.x + yy * f.tauTrace) % M;
    if (x < 0) x += M;
    if (y < 0) y += M;
    return {x, y};
}

ResElt resInv(const ImagQuadField& f, const ResElt& a, const mpz_class& M) {
    // conj(a) / norm(a)
    mpz_class n = (a.x * a.x + a.x * a.y * f.tauTrace + a.y * a.y * f.tauNorm) % M;
    mpz_class inv;
    if (n < 0) n += M;
    if (mpz_invert(inv.get_mpz_t(), n.get_mpz_t(), M.get_mpz_t()) == 0)
        throw CaseMismatch("non-unit element in the finite quotient");
    ResElt c{(a.x + a.y * f.tauTrace) % M, (M - a.y % M) % M};
    c.x = c.x * inv % M;
    c.y = c.y * inv % M;
    return c;
}

} // namespace

KElement makeTauPrime(const ImagQuadField& f, long a, long c) {
    (void)f;
    if (c <= 0) throw CaseMismatch("conductor must be positive");
    return {mpq_class(a, c), mpq_class(1, c)};
}

std::vector<KElement> conductorRaiseCosets(const ImagQuadField& f, long c, long p,
                                           RaiseCase caseTag, const KElement& tauPrime) {
    std::vector<KElement> reps;
    if (caseTag == RaiseCase::inertPrime) {
        if (primeSplitting(p, f) != Splitting::inert)
            throw CaseMismatch("p is not inert");
        if (std::gcd(p, c) != 1) throw CaseMismatch("p divides the conductor");
        if (tauPrime.y != mpq_class(1, c))
            throw CaseMismatch("tauPrime is not of the shape (a+tauK)/c");
        // {a + c*j + tauK : j} = {c*tauPrime + c*j}, then the extra class 1
        for (long j = 0; j < p; ++j)
            reps.push_back({tauPrime.x * c + j, mpq_class(1)});
        reps.push_back({mpq_class(1), mpq_class(0)});
    } else {
        if (c % p != 0) throw CaseMismatch("p does not divide the conductor");
        if (f.dK % p == 0) throw CaseMismatch("p ramifies in K");
        KElement inv = kInv(f, tauPrime);
        for (long j = 0; j < p; ++j) {
            KElement num = kAdd(f, tauPrime, {mpq_class(j), mpq_class(0)});
            reps.push_back(kMul(f, num, inv));
        }
    }
    return reps;
}

bool cosetsDistinctCheck(const ImagQuadField& f, const std::vector<KElement>& reps,
                         long p, RaiseCase caseTag, long conductor) {
    long n = caseTag == RaiseCase::dividesConductor ? vP(conductor, p) : 0;
    mpz_class M;
    mpz_class sep; // classes coincide iff the y-coordinate of u/v vanishes mod sep
    if (caseTag == RaiseCase::inertPrime) {
        M = p;
        sep = p;
    } else {
        mpz_ui_pow_ui(M.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(n + 2));
        mpz_ui_pow_ui(sep.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(n + 1));
    }
    for (size_t i = 0; i < reps.size(); ++i) {
        for (size_t j = i + 1; j < reps.size(); ++j) {
            ResElt u = toRes(f, reps[i], M);
            ResElt v = toRes(f, reps[j], M);
            ResElt w = resMul(f, u, resInv(f, v, M), M);
            if (w.y % sep == 0) return false;
        }
    }
    return true;
}

RamificationProfile ramificationProfile(const ImagQuadField& f, long c, long p, long N) {
    if (primeSplitting(p, f) != Splitting::inert)
        throw HypothesisViolated("p is not inert in K");
    if (((p % N) + N) % N != 1)
        throw HypothesisViolated("p is not congruent to 1 mod N");
    if (std::gcd(p, c) != 1)
        throw HypothesisViolated("p divides the conductor");
    return {true, p + 1};
}

} // namespace heegner1
