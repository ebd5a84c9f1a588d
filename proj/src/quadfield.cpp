#include "heegner1/quadfield.hpp"

#include "heegner1/errors.hpp"

#include <sstream>

namespace heegner1 {

namespace {

bool isSquarefree(long n) {
    if (n == 0) return false;
    long m = n < 0 ? -n : n;
    for (long d = 2; d * d <= m; ++d) {
        if (m % (d * d) == 0) return false;
        while (m % d == 0) m /= d;
    }
    return true;
}

long mod4(long n) { return ((n % 4) + 4) % 4; }

} // namespace

ImagQuadField fieldData(long D) {
    if (D >= 0) throw InvalidD("D must be negative");
    if (!isSquarefree(D)) throw InvalidD("D must be squarefree");
    ImagQuadField f;
    f.D = D;
    if (mod4(D) == 1) {
        f.dK = D;
        // tauK = (sqrt(D)+1)/2: x^2 - x + (1-D)/4
        f.tauTrace = 1;
        f.tauNorm = (1 - D) / 4;
    } else {
        f.dK = 4 * D;
        f.tauTrace = 0;
        f.tauNorm = -D;
    }
    if (mod4(f.dK) == 0) {
        // theta = sqrt(dK)/2 = sqrt(D): x^2 - D
        f.Btheta = 0;
        f.Ctheta = -D;
    } else {
        // theta = (-1+sqrt(dK))/2: x^2 + x + (1-dK)/4
        f.Btheta = 1;
        f.Ctheta = (1 - f.dK) / 4;
    }
    return f;
}

Splitting primeSplitting(long p, const ImagQuadField& field) {
    long dK = field.dK;
    if (p == 2) {
        if (dK % 2 == 0) return Splitting::ramified;
        long r = ((dK % 8) + 8) % 8;
        return r == 1 ? Splitting::split : Splitting::inert;
    }
    long r = ((dK % p) + p) % p;
    if (r == 0) return Splitting::ramified;
    // Euler criterion
    long e = (p - 1) / 2, base = r % p, acc = 1;
    while (e > 0) {
        if (e & 1) acc = (acc * base) % p;
        base = (base * base) % p;
        e >>= 1;
    }
    return acc == 1 ? Splitting::split : Splitting::inert;
}

std::string splittingName(Splitting s) {
    switch (s) {
        case Splitting::split: return "split";
        case Splitting::inert: return "inert";
        default: return "ramified";
    }
}

KElement kAdd(const ImagQuadField&, const KElement& a, const KElement& b) {
    return {a.x + b.x, a.y + b.y};
}

KElement kSub(const ImagQuadField&, const KElement& a, const KElement& b) {
    return {a.x - b.x, a.y - b.y};
}

KElement kMul(const ImagQuadField& f, const KElement& a, const KElement& b) {
    // tauK^2 = tauTrace*tauK - tauNorm
    mpq_class yy = a.y * b.y;
    return {a.x * b.x - yy * f.tauNorm, a.x * b.y + a.y * b.x + yy * f.tauTrace};
}

KElement kConj(const ImagQuadField& f, const KElement& a) {
    return {a.x + a.y * f.tauTrace, -a.y};
}

mpq_class kNorm(const ImagQuadField& f, const KElement& a) {
    return a.x * a.x + a.x * a.y * f.tauTrace + a.y * a.y * f.tauNorm;
}

KElement kInv(const ImagQuadField& f, const KElement& a) {
    mpq_class n = kNorm(f, a);
    if (n == 0) throw Error("inverse of zero in K");
    KElement c = kConj(f, a);
    return {c.x / n, c.y / n};
}

bool kEq(const KElement& a, const KElement& b) { return a.x == b.x && a.y == b.y; }

std::string kStr(const KElement& a) {
    std::ostringstream out;
    out << a.x.get_str() << " + " << a.y.get_str() << "*tauK";
    return out.str();
}

KElement thetaElement(const ImagQuadField& f) {
    if (f.tauTrace == 0) {
        // tauK = sqrt(D); theta = sqrt(D) as dK = 4D
        return {mpq_class(0), mpq_class(1)};
    }
    // tauK = (sqrt(D)+1)/2, theta = (-1+sqrt(D))/2 = tauK - 1
    return {mpq_class(-1), mpq_class(1)};
}

} // namespace heegner1
