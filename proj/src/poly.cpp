#include "heegner1/poly.hpp"

#include "heegner1/errors.hpp"

#include <sstream>
#include <vector>

namespace heegner1 {

void BivariatePolyQ::addTerm(const Key& k, const mpq_class& v) {
    if (v == 0) return;
    auto it = t_.find(k);
    if (it == t_.end()) {
        t_.emplace(k, v);
    } else {
        it->second += v;
        if (it->second == 0) t_.erase(it);
    }
}

BivariatePolyQ BivariatePolyQ::constant(const mpq_class& v) {
    BivariatePolyQ p;
    p.addTerm({0, 0}, v);
    return p;
}

BivariatePolyQ BivariatePolyQ::mono(const mpq_class& coeff, int i, int j) {
    BivariatePolyQ p;
    p.addTerm({i, j}, coeff);
    return p;
}

int BivariatePolyQ::totalDegree() const {
    if (t_.empty()) return -1;
    return t_.begin()->first.first + t_.begin()->first.second;
}

int BivariatePolyQ::degB() const {
    int d = -1;
    for (auto& [k, v] : t_) d = std::max(d, k.first);
    return d;
}

int BivariatePolyQ::degC() const {
    int d = -1;
    for (auto& [k, v] : t_) d = std::max(d, k.second);
    return d;
}

mpq_class BivariatePolyQ::coeff(int i, int j) const {
    auto it = t_.find({i, j});
    return it == t_.end() ? mpq_class(0) : it->second;
}

BivariatePolyQ operator+(const BivariatePolyQ& a, const BivariatePolyQ& b) {
    BivariatePolyQ r = a;
    for (auto& [k, v] : b.t_) r.addTerm(k, v);
    return r;
}

BivariatePolyQ operator-(const BivariatePolyQ& a, const BivariatePolyQ& b) {
    BivariatePolyQ r = a;
    for (auto& [k, v] : b.t_) r.addTerm(k, -v);
    return r;
}

BivariatePolyQ operator*(const BivariatePolyQ& a, const BivariatePolyQ& b) {
    BivariatePolyQ r;
    for (auto& [ka, va] : a.t_)
        for (auto& [kb, vb] : b.t_)
            r.addTerm({ka.first + kb.first, ka.second + kb.second}, va * vb);
    return r;
}

BivariatePolyQ BivariatePolyQ::operator-() const {
    BivariatePolyQ r;
    for (auto& [k, v] : t_) r.t_.emplace(k, -v);
    return r;
}

BivariatePolyQ BivariatePolyQ::mulScalar(const mpq_class& s) const {
    BivariatePolyQ r;
    if (s == 0) return r;
    for (auto& [k, v] : t_) r.t_.emplace(k, v * s);
    return r;
}

BivariatePolyQ BivariatePolyQ::pow(unsigned n) const {
    BivariatePolyQ acc = constant(1);
    BivariatePolyQ base = *this;
    while (n > 0) {
        if (n & 1u) acc = acc * base;
        n >>= 1u;
        if (n) base = base * base;
    }
    return acc;
}

BivariatePolyQ BivariatePolyQ::compose(const BivariatePolyQ& forB, const BivariatePolyQ& forC) const {
    // cache powers of the substituted values
    int db = degB(), dc = degC();
    std::vector<BivariatePolyQ> pb(static_cast<size_t>(std::max(db, 0)) + 1);
    std::vector<BivariatePolyQ> pc(static_cast<size_t>(std::max(dc, 0)) + 1);
    pb[0] = constant(1);
    for (int i = 1; i <= db; ++i) pb[static_cast<size_t>(i)] = pb[static_cast<size_t>(i - 1)] * forB;
    pc[0] = constant(1);
    for (int j = 1; j <= dc; ++j) pc[static_cast<size_t>(j)] = pc[static_cast<size_t>(j - 1)] * forC;
    BivariatePolyQ r;
    for (auto& [k, v] : t_)
        r = r + (pb[static_cast<size_t>(k.first)] * pc[static_cast<size_t>(k.second)]).mulScalar(v);
    return r;
}

mpq_class BivariatePolyQ::evalRat(const mpq_class& b, const mpq_class& c) const {
    mpq_class r = 0;
    for (auto& [k, v] : t_) {
        mpq_class t = v;
        for (int i = 0; i < k.first; ++i) t *= b;
        for (int j = 0; j < k.second; ++j) t *= c;
        r += t;
    }
    return r;
}

BigComplex BivariatePolyQ::evalC(const BigComplex& b, const BigComplex& c, long B) const {
    long prec = std::max({b.prec(), c.prec(), B});
    BigComplex r = BigComplex::zero(prec);
    for (auto& [k, v] : t_)
        r = r + (b.pow(static_cast<unsigned>(k.first)) * c.pow(static_cast<unsigned>(k.second))).mulRat(v);
    return r;
}

mpq_class BivariatePolyQ::content() const {
    mpz_class gn = 0, ld = 1;
    for (auto& [k, v] : t_) {
        mpz_class num = v.get_num(), den = v.get_den();
        mpz_gcd(gn.get_mpz_t(), gn.get_mpz_t(), num.get_mpz_t());
        mpz_lcm(ld.get_mpz_t(), ld.get_mpz_t(), den.get_mpz_t());
    }
    if (gn == 0) return 0;
    mpq_class c(gn, ld);
    c.canonicalize();
    return c;
}

BivariatePolyQ BivariatePolyQ::primitiveCanonical() const {
    if (isZero()) return *this;
    mpq_class c = content();
    if (leadingCoeff() < 0) c = -c;
    return mulScalar(1 / c);
}

std::optional<BivariatePolyQ> BivariatePolyQ::divExact(const BivariatePolyQ& a, const BivariatePolyQ& d) {
    if (d.isZero()) throw DivisionFails("division by zero polynomial");
    BivariatePolyQ q, r = a;
    Key ld = d.t_.begin()->first;
    mpq_class lc = d.t_.begin()->second;
    while (!r.isZero()) {
        Key lr = r.t_.begin()->first;
        if (lr.first < ld.first || lr.second < ld.second) return std::nullopt;
        Key m{lr.first - ld.first, lr.second - ld.second};
        mpq_class f = r.t_.begin()->second / lc;
        BivariatePolyQ term = mono(f, m.first, m.second);
        q = q + term;
        r = r - term * d;
    }
    return q;
}

/* ---- integer PRS gcd machinery ------------------------------------------ */

namespace {

using UP = std::vector<mpz_class>; // univariate in c, ascending

void upTrim(UP& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int upDeg(const UP& p) { return static_cast<int>(p.size()) - 1; }

UP upMul(const UP& a, const UP& b) {
    if (a.empty() || b.empty()) return {};
    UP r(a.size() + b.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    upTrim(r);
    return r;
}

UP upSub(const UP& a, const UP& b) {
    UP r = a;
    if (b.size() > r.size()) r.resize(b.size(), mpz_class(0));
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    upTrim(r);
    return r;
}

UP upScale(const UP& a, const mpz_class& s) {
    if (s == 0) return {};
    UP r = a;
    for (auto& x : r) x *= s;
    return r;
}

mpz_class upContent(const UP& a) {
    mpz_class g = 0;
    for (auto& x : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

UP upDivScalarExact(const UP& a, const mpz_class& s) {
    UP r = a;
    for (auto& x : r) {
        mpz_class q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), x.get_mpz_t(), s.get_mpz_t());
        if (rem != 0) throw DivisionFails("inexact scalar division in gcd kernel");
        x = q;
    }
    return r;
}

UP upPrimitive(const UP& a) {
    if (a.empty()) return a;
    mpz_class g = upContent(a);
    if (a.back() < 0) g = -g;
    return upDivScalarExact(a, g);
}

// pseudo-remainder of a by b
UP upPrem(UP a, const UP& b) {
    int db = upDeg(b);
    mpz_class lb = b.back();
    while (upDeg(a) >= db) {
        int shift = upDeg(a) - db;
        mpz_class la = a.back();
        a = upScale(a, lb);
        UP sub(static_cast<size_t>(shift), mpz_class(0));
        sub.insert(sub.end(), b.begin(), b.end());
        a = upSub(a, upScale(sub, la));
    }
    return a;
}

UP upGcd(UP a, UP b) {
    upTrim(a);
    upTrim(b);
    if (a.empty()) return b.empty() ? b : upPrimitive(b);
    if (b.empty()) return upPrimitive(a);
    mpz_class ca = upContent(a), cb = upContent(b), cg;
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    a = upDivScalarExact(a, ca);
    b = upDivScalarExact(b, cb);
    if (upDeg(a) < upDeg(b)) std::swap(a, b);
    while (!b.empty()) {
        UP r = upPrem(a, b);
        a = std::move(b);
        b = r.empty() ? r : upPrimitive(r);
    }
    UP g = upPrimitive(a);
    return upMul(g, UP{cg});
}

std::optional<UP> upDivExact(const UP& a, const UP& b) {
    if (b.empty()) throw DivisionFails("division by zero in gcd kernel");
    UP r = a, q(a.size(), mpz_class(0));
    int db = upDeg(b);
    while (!r.empty() && upDeg(r) >= db) {
        mpz_class qt, rem;
        mpz_tdiv_qr(qt.get_mpz_t(), rem.get_mpz_t(), r.back().get_mpz_t(), b.back().get_mpz_t());
        if (rem != 0) return std::nullopt;
        int shift = upDeg(r) - db;
        q[static_cast<size_t>(shift)] = qt;
        UP sub(static_cast<size_t>(shift), mpz_class(0));
        sub.insert(sub.end(), b.begin(), b.end());
        r = upSub(r, upScale(sub, qt));
    }
    if (!r.empty()) return std::nullopt;
    upTrim(q);
    return q;
}

using BP = std::vector<UP>; // coefficients of b^i, each a polynomial in c

void bpTrim(BP& p) {
    while (!p.empty() && p.back().empty()) p.pop_back();
}

int bpDeg(const BP& p) { return static_cast<int>(p.size()) - 1; }

BP bpSub(const BP& a, const BP& b) {
    BP r = a;
    if (b.size() > r.size()) r.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) r[i] = upSub(r[i], b[i]);
    bpTrim(r);
    return r;
}

BP bpMulUP(const BP& a, const UP& s) {
    BP r = a;
    for (auto& x : r) x = upMul(x, s);
    bpTrim(r);
    return r;
}

UP bpContent(const BP& a) {
    UP g;
    for (auto& x : a) g = upGcd(g, x);
    return g;
}

BP bpDivExactUP(const BP& a, const UP& s) {
    BP r = a;
    for (auto& x : r) {
        auto q = upDivExact(x, s);
        if (!q) throw DivisionFails("inexact content division in gcd kernel");
        x = *q;
    }
    return r;
}

BP bpPrimitive(const BP& a) {
    if (a.empty()) return a;
    UP g = bpContent(a);
    return bpDivExactUP(a, g);
}

BP bpPrem(BP a, const BP& b) {
    int db = bpDeg(b);
    const UP& lb = b.back();
    while (bpDeg(a) >= db && !a.empty()) {
        int shift = bpDeg(a) - db;
        UP la = a.back();
        a = bpMulUP(a, lb);
        BP sub(static_cast<size_t>(shift));
        sub.insert(sub.end(), b.begin(), b.end());
        a = bpSub(a, bpMulUP(sub, la));
    }
    return a;
}

BP bpGcd(BP a, BP b) {
    bpTrim(a);
    bpTrim(b);
    if (a.empty()) return b;
    if (b.empty()) return a;
    UP ca = bpContent(a), cb = bpContent(b);
    UP cg = upGcd(ca, cb);
    a = bpDivExactUP(a, ca);
    b = bpDivExactUP(b, cb);
    if (bpDeg(a) < bpDeg(b)) std::swap(a, b);
    while (!b.empty()) {
        BP r = bpPrem(a, b);
        bpTrim(r);
        a = std::move(b);
        b = r.empty() ? r : bpPrimitive(r);
    }
    return bpMulUP(bpPrimitive(a), cg);
}

BP toBP(const BivariatePolyQ& p, mpz_class& denOut) {
    // clear denominators
    mpz_class l = 1;
    for (auto& [k, v] : p.terms()) {
        mpz_class d = v.get_den();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    denOut = l;
    BP r;
    for (auto& [k, v] : p.terms()) {
        size_t i = static_cast<size_t>(k.first), j = static_cast<size_t>(k.second);
        if (r.size() <= i) r.resize(i + 1);
        if (r[i].size() <= j) r[i].resize(j + 1, mpz_class(0));
        mpq_class scaled = v * l;
        r[i][j] = scaled.get_num();
    }
    for (auto& x : r) upTrim(x);
    bpTrim(r);
    return r;
}

BivariatePolyQ fromBP(const BP& p) {
    BivariatePolyQ r;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = 0; j < p[i].size(); ++j)
            if (p[i][j] != 0)
                r = r + BivariatePolyQ::mono(mpq_class(p[i][j]), static_cast<int>(i), static_cast<int>(j));
    return r;
}

} // namespace

BivariatePolyQ BivariatePolyQ::gcd(const BivariatePolyQ& a, const BivariatePolyQ& b) {
    if (a.isZero()) return b.primitiveCanonical();
    if (b.isZero()) return a.primitiveCanonical();
    mpz_class da, db;
    BP pa = toBP(a, da), pb = toBP(b, db);
    BP g = bpGcd(pa, pb);
    return fromBP(g).primitiveCanonical();
}

/* ---- serialization ------------------------------------------------------ */

std::string BivariatePolyQ::toText(const std::string& vb, const std::string& vc) const {
    if (t_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto& [k, v] : t_) {
        mpq_class av = v < 0 ? mpq_class(-v) : v;
        if (first) {
            if (v < 0) out << "-";
            first = false;
        } else {
            out << (v < 0 ? " - " : " + ");
        }
        bool hasVar = k.first > 0 || k.second > 0;
        bool coeffShown = (av != 1) || !hasVar;
        if (coeffShown) out << av.get_str();
        if (k.first > 0) {
            if (coeffShown) out << "*";
            out << vb;
            if (k.first > 1) out << "^" << k.first;
        }
        if (k.second > 0) {
            if (coeffShown || k.first > 0) out << "*";
            out << vc;
            if (k.second > 1) out << "^" << k.second;
        }
    }
    return out.str();
}

nlohmann::json BivariatePolyQ::toJson() const {
    nlohmann::json terms = nlohmann::json::array();
    for (auto& [k, v] : t_)
        terms.push_back({k.first, k.second, v.get_str()});
    return terms;
}

BivariatePolyQ BivariatePolyQ::fromJson(const nlohmann::json& j) {
    BivariatePolyQ r;
    for (auto& t : j) {
        mpq_class v(t.at(2).get<std::string>());
        v.canonicalize();
        r.addTerm({t.at(0).get<int>(), t.at(1).get<int>()}, v);
    }
    return r;
}

} // namespace heegner1
