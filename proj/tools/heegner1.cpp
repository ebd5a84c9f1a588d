#include "heegner1/cache.hpp"
#include "heegner1/config.hpp"
#include "heegner1/distribution.hpp"
#include "heegner1/errors.hpp"
#include "heegner1/rawform.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iostream>

using namespace heegner1;
using nlohmann::json;

namespace {

int exitOf(Verdict v) {
    switch (v) {
        case Verdict::verified: return 0;
        case Verdict::falsified: return 1;
        default: return 2;
    }
}

void emit(const RunConfig& cfg, const json& doc) {
    if (cfg.outputFormat == "text") {
        std::cout << doc.dump(2) << "\n"; // text mode keeps the same content, prettified
    } else {
        std::cout << doc.dump() << "\n";
    }
}

json pointJson(const EvaluatedPoint& pt, size_t digits) {
    json j = {
        {"tau", pt.tau},
        {"precBits", pt.precBits},
        {"b", {{"re", pt.b.re().str(digits)}, {"im", pt.b.im().str(digits)}}},
        {"c", {{"re", pt.c.re().str(digits)}, {"im", pt.c.im().str(digits)}}},
        {"errExp", std::max(pt.b.errExp(), pt.c.errExp())},
    };
    if (pt.rawResidualExp) j["rawResidualExp"] = *pt.rawResidualExp;
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Heegner-type points on X1(N): models, CM values, Galois action, distribution relations"};
    app.require_subcommand(1);

    ConfigFlags flags;
    long precFlag = 0, tolFlag = 0;
    std::string cacheFlag, formatFlag;
    app.add_option("--prec-bits", precFlag, "working precision in bits")->each([&](const std::string& s) {
        flags.precBits = std::stol(s);
    });
    app.add_option("--tol-log2", tolFlag, "log2 of the verification tolerance")->each([&](const std::string& s) {
        flags.tolLog2 = std::stol(s);
    });
    app.add_option("--cache-dir", cacheFlag, "point cache directory")->each([&](const std::string& s) {
        flags.cacheDir = s;
    });
    app.add_option("--format", formatFlag, "output format: json or text")->each([&](const std::string& s) {
        flags.outputFormat = s;
    });

    long D = -2, N = 4, cond = 1, aParam = 0, p = 5, nMult = 2, disc = -4;
    std::string caseName = "inert", modeName = "symmetric";
    bool corrupt = false;
    long maxDeg = 8, heightBits = 96;
    std::string reStr, imStr = "0";
    long Cx = 1, Cy = 0;
    long samples = 5;

    auto* evalCmd = app.add_subcommand("eval-point", "evaluate P_tau for a CM specification");
    evalCmd->add_option("--D", D)->required();
    evalCmd->add_option("--N", N)->required();
    evalCmd->add_option("--c", cond);
    evalCmd->add_option("--a", aParam);

    auto* rawCmd = app.add_subcommand("rawform", "raw-form polynomial of X1(N)");
    rawCmd->add_option("--N", N)->required();

    auto* nmultCmd = app.add_subcommand("nmult", "coordinates of n*(0,0) on the Tate curve");
    nmultCmd->add_option("--n", nMult)->required();

    auto* classCmd = app.add_subcommand("classgroup", "reduced forms of a discriminant");
    classCmd->add_option("--disc", disc)->required();

    auto* splitCmd = app.add_subcommand("splitting", "splitting type of p in Q(sqrt(D))");
    splitCmd->add_option("--p", p)->required();
    splitCmd->add_option("--D", D)->required();

    auto* cosetCmd = app.add_subcommand("cosets", "conductor-raise coset representatives");
    cosetCmd->add_option("--D", D)->required();
    cosetCmd->add_option("--c", cond)->required();
    cosetCmd->add_option("--p", p)->required();
    cosetCmd->add_option("--a", aParam);
    cosetCmd->add_option("--case", caseName, "inert or pc");

    auto* sjCmd = app.add_subcommand("verify-sj", "exact s_j lattice identities");
    sjCmd->add_option("--D", D)->required();
    sjCmd->add_option("--c", cond)->required();
    sjCmd->add_option("--a", aParam);
    sjCmd->add_option("--p", p)->required();
    sjCmd->add_option("--case", caseName, "inert or pc");
    sjCmd->add_flag("--corrupt", corrupt, "negative control: corrupt the multiplier");

    auto* distCmd = app.add_subcommand("verify-distribution", "layered distribution-relation check");
    distCmd->add_option("--D", D)->required();
    distCmd->add_option("--N", N)->required();
    distCmd->add_option("--c", cond);
    distCmd->add_option("--a", aParam);
    distCmd->add_option("--p", p)->required();
    distCmd->add_option("--mode", modeName, "symmetric or orbit");
    distCmd->add_option("--degree-bound", maxDeg);
    distCmd->add_option("--height-bits", heightBits);
    distCmd->add_flag("--corrupt", corrupt, "negative control: corrupt one fiber value");

    auto* viennaCmd = app.add_subcommand("vienna", "sigma action through an O_c multiplier C");
    viennaCmd->add_option("--D", D)->required();
    viennaCmd->add_option("--N", N)->required();
    viennaCmd->add_option("--Cx", Cx, "C = Cx + Cy*tauK");
    viennaCmd->add_option("--Cy", Cy);

    auto* orbitCmd = app.add_subcommand("galois-orbit", "orbit of P_theta under W_{N,theta}");
    orbitCmd->add_option("--D", D)->required();
    orbitCmd->add_option("--N", N)->required();

    auto* minCmd = app.add_subcommand("minpoly", "integer minimal-polynomial recognition");
    minCmd->add_option("--re", reStr, "decimal real part")->required();
    minCmd->add_option("--im", imStr, "decimal imaginary part");
    minCmd->add_option("--max-deg", maxDeg);
    minCmd->add_option("--height-bits", heightBits);

    auto* invCmd = app.add_subcommand("invariance", "Gamma_1(N) invariance of (b, c)");
    invCmd->add_option("--N", N)->required();
    invCmd->add_option("--samples", samples);

    for (auto* sc : app.get_subcommands([](const CLI::App*) { return true; })) sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 3;
    }

    try {
        RunConfig cfg = loadConfig(flags);
        long B = cfg.precBits;
        size_t digits = static_cast<size_t>(B * 302 / 1000) + 4;

        if (evalCmd->parsed()) {
            CMPointSpec spec{D, cond, aParam, N};
            std::optional<EvaluatedPoint> pt;
            CacheKey key{D, N, cond, aParam, B};
            if (!cfg.cacheDir.empty()) {
                try {
                    pt = cacheLoad(cfg.cacheDir, key);
                } catch (const CorruptCache& e) {
                    std::cerr << "warning: " << e.what() << "\n";
                }
            }
            bool fromCache = pt.has_value();
            if (!pt) pt = evalPoint(spec, B);
            if (!fromCache && !cfg.cacheDir.empty()) cacheStore(cfg.cacheDir, *pt);
            json doc = pointJson(*pt, digits);
            doc["cached"] = fromCache;
            bool ok = !pt->rawResidualExp || *pt->rawResidualExp < cfg.tolLog2;
            doc["verdict"] = ok ? "verified" : "falsified";
            emit(cfg, doc);
            return ok ? 0 : 1;
        }
        if (rawCmd->parsed()) {
            const BivariatePolyQ& f = rawForm(static_cast<int>(N));
            emit(cfg, json{{"N", N}, {"poly", f.toText()}, {"terms", f.toJson()}});
            return 0;
        }
        if (nmultCmd->parsed()) {
            TatePoint pt = tateMultiple(static_cast<int>(nMult));
            if (pt.infinity) {
                emit(cfg, json{{"n", nMult}, {"point", "infinity"}});
            } else {
                emit(cfg, json{{"n", nMult}, {"x", pt.x.toText()}, {"y", pt.y.toText()}});
            }
            return 0;
        }
        if (classCmd->parsed()) {
            json forms = json::array();
            for (auto& f : reducedForms(disc)) forms.push_back({f.a, f.b, f.c});
            emit(cfg, json{{"disc", disc}, {"classNumber", forms.size()}, {"forms", forms}});
            return 0;
        }
        if (splitCmd->parsed()) {
            ImagQuadField f = fieldData(D);
            emit(cfg, json{{"p", p}, {"D", D}, {"dK", f.dK}, {"splitting", splittingName(primeSplitting(p, f))}});
            return 0;
        }
        if (cosetCmd->parsed()) {
            ImagQuadField f = fieldData(D);
            RaiseCase tag = caseName == "pc" ? RaiseCase::dividesConductor : RaiseCase::inertPrime;
            auto reps = conductorRaiseCosets(f, cond, p, tag, makeTauPrime(f, aParam, cond));
            bool distinct = cosetsDistinctCheck(f, reps, p, tag, cond);
            json rj = json::array();
            for (auto& r : reps) rj.push_back(kStr(r));
            emit(cfg, json{{"count", reps.size()}, {"distinct", distinct}, {"reps", rj},
                           {"verdict", distinct ? "verified" : "falsified"}});
            return distinct ? 0 : 1;
        }
        if (sjCmd->parsed()) {
            ImagQuadField f = fieldData(D);
            RaiseCase tag = caseName == "pc" ? RaiseCase::dividesConductor : RaiseCase::inertPrime;
            SjLatticeReport rep = verifySjLattices(f, cond, aParam, p, tag, corrupt);
            json recs = json::array();
            for (auto& r : rep.records) recs.push_back({{"j", r.j}, {"pass", r.pass}, {"note", r.note}});
            emit(cfg, json{{"verdict", rep.verified ? "verified" : "falsified"},
                           {"failedJ", rep.failedJ}, {"records", recs},
                           {"otherPrimes", rep.otherPrimesNote}, {"index", rep.indexNote}});
            return rep.verified ? 0 : 1;
        }
        if (distCmd->parsed()) {
            DistributionInstance inst{{D, cond, aParam, N}, p,
                                      cond % p == 0 ? RaiseCase::dividesConductor : RaiseCase::inertPrime};
            DistributionOptions opt;
            opt.tolLog2 = cfg.tolLog2;
            opt.mode = modeName == "orbit" ? DivisorMode::orbitMatching : DivisorMode::symmetricFunctions;
            opt.degreeBound = static_cast<int>(maxDeg);
            opt.heightBound = mpz_class(1) << static_cast<unsigned>(heightBits);
            opt.corruptFiber = corrupt;
            VerificationReport rep = verifyDistribution(inst, B, opt);
            emit(cfg, rep.toJson());
            return exitOf(rep.verdict);
        }
        if (viennaCmd->parsed()) {
            ImagQuadField f = fieldData(D);
            KElement C{mpq_class(Cx), mpq_class(Cy)};
            EvaluatedPoint pt = viennaAct(f, C, tauKOf(f), N, B);
            emit(cfg, pointJson(pt, digits));
            return 0;
        }
        if (orbitCmd->parsed()) {
            ImagQuadField f = fieldData(D);
            json pts = json::array();
            for (auto& pt : galoisOrbit(f, N, B)) pts.push_back(pointJson(pt, digits));
            emit(cfg, json{{"D", D}, {"N", N}, {"orbit", pts}});
            return 0;
        }
        if (minCmd->parsed()) {
            long prec = B + 48;
            BigComplex x(Real::parse(reStr, prec), Real::parse(imStr, prec), -B + 8);
            auto poly = minPolyGuess(x, static_cast<int>(maxDeg), mpz_class(1) << static_cast<unsigned>(heightBits));
            if (poly) {
                emit(cfg, json{{"recognized", true}, {"poly", poly->toText()}, {"degree", poly->degree()}});
                return 0;
            }
            emit(cfg, json{{"recognized", false}});
            return 1;
        }
        if (invCmd->parsed()) {
            long prec = B + 48;
            std::vector<BigComplex> taus;
            for (long i = 0; i < samples; ++i)
                taus.push_back(BigComplex::fromRat(mpq_class(2 * i + 1, 17), mpq_class(i + 13, 11), prec));
            std::vector<std::array<long, 4>> mats = {{1, 1, 0, 1}, {1, 0, N, 1}};
            VerificationReport rep = gamma1InvarianceCheck(N, taus, mats, B);
            emit(cfg, rep.toJson());
            return exitOf(rep.verdict);
        }
        std::cerr << "no subcommand dispatched\n";
        return 3;
    } catch (const InvalidConfig& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 3;
    } catch (const InsufficientPrecision& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return 2;
    } catch (const PrecisionExhausted& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 3;
}
