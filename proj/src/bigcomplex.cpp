#include "heegner1/bigcomplex.hpp"

#include "heegner1/errors.hpp"

#include <algorithm>
#include <cmath>

namespace heegner1 {

namespace {

// pad to cover double rounding in the radius bookkeeping itself
constexpr double kPad = 1.0 + 1e-9;

// exponent bound of a single real component: |r| <= 2^compExp(r)
long compExp(const Real& r) { return r.isZero() ? BigComplex::kFloor : r.expOf(); }

} // namespace

ErrRad ErrRad::ofExp(long exp) { return {0.5, exp + 1}; }

long ErrRad::ceilExp() const {
    if (m == 0.0) return BigComplex::kFloor;
    return m > 0.5 ? e : e - 1;
}

ErrRad radAdd(const ErrRad& a, const ErrRad& b) {
    if (a.isZero()) return b;
    if (b.isZero()) return a;
    const ErrRad& hi = a.e >= b.e ? a : b;
    const ErrRad& lo = a.e >= b.e ? b : a;
    long d = hi.e - lo.e;
    double m = hi.m;
    if (d < 80) m += std::ldexp(lo.m, static_cast<int>(-d));
    m *= kPad;
    ErrRad r{m, hi.e};
    while (r.m >= 1.0) {
        r.m /= 2;
        ++r.e;
    }
    return r;
}

ErrRad radScale2(const ErrRad& a, long k) {
    if (a.isZero()) return a;
    return {a.m, a.e + k};
}

ErrRad radMul(const ErrRad& a, const ErrRad& b) {
    if (a.isZero() || b.isZero()) return ErrRad::zero();
    ErrRad r{a.m * b.m * kPad, a.e + b.e};
    while (r.m < 0.5) {
        r.m *= 2;
        --r.e;
    }
    while (r.m >= 1.0) {
        r.m /= 2;
        ++r.e;
    }
    return r;
}

long eAdd(long a, long b) {
    long m = std::max(a, b);
    if (m <= BigComplex::kFloor) return BigComplex::kFloor;
    return m + 1;
}

BigComplex::BigComplex(Real re, Real im, long errExp)
    : re_(std::move(re)), im_(std::move(im)),
      rad_(errExp <= kFloor ? ErrRad::zero() : ErrRad::ofExp(errExp)) {}

BigComplex::BigComplex(Real re, Real im, ErrRad rad)
    : re_(std::move(re)), im_(std::move(im)), rad_(rad) {}

BigComplex BigComplex::zero(long prec) { return BigComplex(Real(prec), Real(prec), ErrRad::zero()); }

BigComplex BigComplex::i(long prec) { return fromLong(0, 1, prec); }

BigComplex BigComplex::fromLong(long re, long im, long prec) {
    return BigComplex(Real::ofLong(re, prec), Real::ofLong(im, prec), ErrRad::zero());
}

BigComplex BigComplex::fromRat(const mpq_class& re, const mpq_class& im, long prec) {
    Real r = Real::ofRat(re, prec), i = Real::ofRat(im, prec);
    long m = std::max(compExp(r), compExp(i));
    ErrRad rad = (m == kFloor) ? ErrRad::zero() : ErrRad::ofExp(m - prec + 2);
    return BigComplex(std::move(r), std::move(i), rad);
}

BigComplex BigComplex::fromReal(Real re, long errExp) {
    Real z(re.prec());
    return BigComplex(std::move(re), std::move(z), errExp);
}

long BigComplex::magExp() const {
    long m = std::max(compExp(re_), compExp(im_));
    if (m == kFloor) return errExp();
    return std::max(m + 1, errExp());
}

long BigComplex::magLowExp() const {
    long m = std::max(compExp(re_), compExp(im_));
    if (m == kFloor) return kFloor;
    return m - 1;
}

bool BigComplex::consistentWithZero(long slack) const {
    long m = std::max(compExp(re_), compExp(im_));
    if (m == kFloor) return true;
    return m <= errExp() + slack;
}

namespace {

ErrRad roundingOf(const BigComplex& v) {
    long m = std::max(v.re().isZero() ? BigComplex::kFloor : v.re().expOf(),
                      v.im().isZero() ? BigComplex::kFloor : v.im().expOf());
    if (m == BigComplex::kFloor) return ErrRad::zero();
    return ErrRad::ofExp(m - v.prec() + 2);
}

} // namespace

BigComplex operator+(const BigComplex& a, const BigComplex& b) {
    BigComplex r(a.re_ + b.re_, a.im_ + b.im_, ErrRad::zero());
    r.rad_ = radAdd(radAdd(a.rad_, b.rad_), roundingOf(r));
    return r;
}

BigComplex operator-(const BigComplex& a, const BigComplex& b) {
    BigComplex r(a.re_ - b.re_, a.im_ - b.im_, ErrRad::zero());
    r.rad_ = radAdd(radAdd(a.rad_, b.rad_), roundingOf(r));
    return r;
}

BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    Real re = a.re_ * b.re_ - a.im_ * b.im_;
    Real im = a.re_ * b.im_ + a.im_ * b.re_;
    BigComplex r(std::move(re), std::move(im), ErrRad::zero());
    long ma = a.magExp(), mb = b.magExp();
    // |d(ab)| <= |a| rb + |b| ra + ra rb
    ErrRad cross = radAdd(ma == BigComplex::kFloor ? ErrRad::zero() : radScale2(b.rad_, ma),
                          mb == BigComplex::kFloor ? ErrRad::zero() : radScale2(a.rad_, mb));
    cross = radAdd(cross, radMul(a.rad_, b.rad_));
    r.rad_ = radAdd(cross, roundingOf(r));
    return r;
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    if (!b.definitelyNonzero())
        throw PrecisionExhausted("division by a value indistinguishable from zero");
    long mbLow = b.magLowExp();
    Real den = b.re_ * b.re_ + b.im_ * b.im_;
    Real re = (a.re_ * b.re_ + a.im_ * b.im_) / den;
    Real im = (a.im_ * b.re_ - a.re_ * b.im_) / den;
    BigComplex r(std::move(re), std::move(im), ErrRad::zero());
    long ma = a.magExp();
    // |d(a/b)| <= ra/|b| + |a| rb/|b|^2, with |b| >= 2^mbLow
    ErrRad t1 = radScale2(a.rad_, -mbLow);
    ErrRad t2 = (ma == BigComplex::kFloor) ? ErrRad::zero()
                                           : radScale2(b.rad_, ma - 2 * mbLow + 1);
    r.rad_ = radAdd(radAdd(t1, t2), roundingOf(r));
    return r;
}

BigComplex BigComplex::mulRat(const mpq_class& q) const {
    if (q == 0) return zero(prec());
    Real f = Real::ofRat(q, prec());
    BigComplex r(re_ * f, im_ * f, ErrRad::zero());
    r.rad_ = radAdd(radScale2(rad_, f.expOf()), roundingOf(r));
    return r;
}

BigComplex BigComplex::pow(unsigned n) const {
    BigComplex acc = fromLong(1, 0, prec());
    BigComplex base = *this;
    while (n > 0) {
        if (n & 1u) acc = acc * base;
        n >>= 1u;
        if (n) base = base * base;
    }
    return acc;
}

BigComplex BigComplex::expOf(const BigComplex& w) {
    Real mag = w.re_.exp();
    auto [s, c] = w.im_.sinCos();
    BigComplex r(mag * c, mag * s, ErrRad::zero());
    // |d(e^w)| <= |e^w| (e^{rw} - 1) ~ |e^w| rw, doubled for the higher terms
    ErrRad t = w.rad_.isZero() ? ErrRad::zero() : radScale2(w.rad_, r.magExp() + 1);
    r.rad_ = radAdd(t, roundingOf(r));
    return r;
}

Real BigComplex::absApprox() const {
    return (re_ * re_ + im_ * im_).sqrt();
}

long diffMagExp(const BigComplex& a, const BigComplex& b) {
    return (a - b).magExp();
}

} // namespace heegner1
