#include "heegner1/galois.hpp"

#include "heegner1/errors.hpp"

#include <fstream>
#include <numeric>

namespace heegner1 {

namespace {

long modN(long x, long N) { return ((x % N) + N) % N; }

} // namespace

std::array<std::array<long, 2>, 2> WMatrix::entries() const {
    return {{{modN(t - Btheta * s, N), modN(-Ctheta * s, N)}, {modN(s, N), modN(t, N)}}};
}

long WMatrix::det() const {
    return modN(t * t - Btheta * t * s + Ctheta * s * s, N);
}

WMatrix makeW(long N, long t, long s, const ImagQuadField& f) {
    WMatrix w{N, modN(t, N), modN(s, N), f.Btheta, f.Ctheta};
    if (std::gcd(w.det(), N) != 1) throw Error("W-matrix not invertible mod N");
    return w;
}

WMatrix wMul(const WMatrix& a, const WMatrix& b) {
    if (a.N != b.N) throw Error("mismatched levels");
    // W_{N,theta} is the image of (Z[theta]/N)^*: (t + s*theta) composes by
    // theta^2 = -Btheta*theta - Ctheta
    long N = a.N;
    long t = modN(a.t * b.t - a.s * b.s * a.Ctheta, N);
    long s = modN(a.t * b.s + a.s * b.t - a.s * b.s * a.Btheta, N);
    return WMatrix{N, t, s, a.Btheta, a.Ctheta};
}

bool wEqModSign(const WMatrix& a, const WMatrix& b) {
    if (a.N != b.N) return false;
    long N = a.N;
    return (a.t == b.t && a.s == b.s) ||
           (a.t == modN(-b.t, N) && a.s == modN(-b.s, N));
}

std::vector<WMatrix> wGroup(long N, const ImagQuadField& f) {
    std::vector<WMatrix> out;
    out.push_back(makeW(N, 1, 0, f));
    for (long t = 0; t < N; ++t) {
        for (long s = 0; s < N; ++s) {
            WMatrix w{N, t, s, f.Btheta, f.Ctheta};
            if (std::gcd(w.det(), N) != 1) continue;
            bool seen = false;
            for (auto& x : out)
                if (wEqModSign(x, w)) { seen = true; break; }
            if (!seen) out.push_back(w);
        }
    }
    return out;
}

FrickeIndex makeIndex(const mpq_class& r1, const mpq_class& r2) {
    auto wrap = [](mpq_class v) {
        mpz_class fl;
        mpz_fdiv_q(fl.get_mpz_t(), v.get_num().get_mpz_t(), v.get_den().get_mpz_t());
        return v - fl;
    };
    return {wrap(r1), wrap(r2)};
}

FrickeIndex actIndex(const FrickeIndex& r, const std::array<std::array<long, 2>, 2>& m) {
    return makeIndex(r.r1 * m[0][0] + r.r2 * m[1][0], r.r1 * m[0][1] + r.r2 * m[1][1]);
}

FrickeIndex actIndex(const FrickeIndex& r, const WMatrix& w) {
    return actIndex(r, w.entries());
}

bool indexEq(const FrickeIndex& a, const FrickeIndex& b) {
    return a.r1 == b.r1 && a.r2 == b.r2;
}

BetaQData loadBetaQ(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MissingBetaQ("cannot open beta_Q data file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw MissingBetaQ(std::string("malformed beta_Q data: ") + e.what());
    }
    BetaQData data;
    for (auto& e : j.at("entries")) {
        BetaQEntry entry;
        entry.form = {e.at("form").at(0).get<long>(), e.at("form").at(1).get<long>(),
                      e.at("form").at(2).get<long>()};
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c)
                entry.matrix[r][c] = e.at("matrix").at(r).at(c).get<long>();
        data.entries.push_back(entry);
    }
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            data.lift[r][c] = j.at("lift").at(r).at(c).get<long>();
    return data;
}

EvaluatedPoint evalPointIndexed(const ExactTau& tau, const FrickeIndex& i1,
                                const FrickeIndex& i2, long N, long B) {
    long prec = B + 48;
    BigComplex tc = tauToComplex(tau, prec);
    LatticeBasis basis{tc, BigComplex::fromLong(1, 0, prec)};
    BigComplex z1 = tc.mulRat(i1.r1) + BigComplex::fromRat(i1.r2, 0, prec);
    BigComplex z2 = tc.mulRat(i2.r1) + BigComplex::fromRat(i2.r2, 0, prec);
    return evalPointOnBasis(basis, z1, z2, N, B, tauDesc(tau));
}

EvaluatedPoint pointUnderMatrix(const ExactTau& tau, const GaloisElement& g, long N, long B,
                                const BetaQData* betaQ) {
    std::array<std::array<long, 2>, 2> m = g.alpha.entries();
    ExactTau evalAt = tau;
    if (!isPrincipal(g.Q)) {
        if (betaQ == nullptr) throw MissingBetaQ("no beta_Q data supplied for a non-principal class");
        const BetaQEntry* entry = nullptr;
        for (auto& e : betaQ->entries)
            if (e.form == g.Q) { entry = &e; break; }
        if (entry == nullptr) throw MissingBetaQ("no beta_Q entry for the requested class");
        // compose alpha * beta_Q mod N
        std::array<std::array<long, 2>, 2> p{};
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c)
                p[r][c] = modN(m[r][0] * entry->matrix[0][c] + m[r][1] * entry->matrix[1][c], N);
        m = p;
        ImagQuadField f = fieldData(tau.m);
        evalAt = thetaOfForm(f, g.Q);
    }
    FrickeIndex i1 = actIndex(makeIndex(0, mpq_class(1, N)), m);
    FrickeIndex i2 = actIndex(makeIndex(0, mpq_class(2, N)), m);
    return evalPointIndexed(evalAt, i1, i2, N, B);
}

EvaluatedPoint viennaAct(const ImagQuadField& f, const KElement& C, const ExactTau& tau,
                         long N, long B) {
    if (C.x.get_den() != 1 || C.y.get_den() != 1)
        throw InvalidC("C must be integral");
    mpq_class nrm = kNorm(f, C);
    mpz_class nmod = nrm.get_num() % N;
    mpz_class g;
    mpz_gcd_ui(g.get_mpz_t(), nmod.get_mpz_t(), static_cast<unsigned long>(N));
    if (g != 1) throw InvalidC("C is not invertible mod N");

    long prec = B + 48;
    BigComplex tc = tauToComplex(tau, prec);
    LatticeBasis basis{tc, BigComplex::fromLong(1, 0, prec)};
    ExactTau tk = tauKOf(f);
    BigComplex tkc = tauToComplex(tk, prec);
    BigComplex cVal = tkc.mulRat(C.y) + BigComplex::fromRat(C.x, 0, prec);
    BigComplex z1 = cVal.mulRat(mpq_class(1, N));
    BigComplex z2 = cVal.mulRat(mpq_class(2, N));
    return evalPointOnBasis(basis, z1, z2, N, B, tauDesc(tau));
}

std::vector<EvaluatedPoint> galoisOrbit(const ImagQuadField& f, long N, long B) {
    ExactTau theta = thetaOf(f);
    QuadFormClass principal = principalForm(f.dK);
    std::vector<EvaluatedPoint> out;
    for (auto& w : wGroup(N, f))
        out.push_back(pointUnderMatrix(theta, GaloisElement{w, principal}, N, B));
    return out;
}

} // namespace heegner1
