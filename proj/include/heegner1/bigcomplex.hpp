#ifndef HEEGNER1_BIGCOMPLEX_HPP
#define HEEGNER1_BIGCOMPLEX_HPP

#include "heegner1/real.hpp"

namespace heegner1 {

// absolute error radius m * 2^e with m in [0.5, 1), or m == 0 for "exact";
// kept separate from the exponent so long chains of additions stay tight
struct ErrRad {
    double m = 0.0;
    long e = 0;

    static ErrRad zero() { return {}; }
    static ErrRad ofExp(long exp); // radius 2^exp
    bool isZero() const { return m == 0.0; }
    long ceilExp() const; // radius <= 2^ceilExp()
};

ErrRad radAdd(const ErrRad& a, const ErrRad& b);
ErrRad radScale2(const ErrRad& a, long k);
ErrRad radMul(const ErrRad& a, const ErrRad& b);

/*
 * Complex value with a tracked absolute error radius covering both
 * components. Propagation is first order and conservative: every operation
 * pads with the rounding error of the underlying mpfr arithmetic.
 */
class BigComplex {
  public:
    // floor for error exponents reported via errExp()
    static constexpr long kFloor = -(1L << 40);

    BigComplex() : re_(64), im_(64) {}
    BigComplex(Real re, Real im, long errExp);
    BigComplex(Real re, Real im, ErrRad rad);

    static BigComplex zero(long prec);
    static BigComplex i(long prec);
    static BigComplex fromLong(long re, long im, long prec);
    static BigComplex fromRat(const mpq_class& re, const mpq_class& im, long prec);
    static BigComplex fromReal(Real re, long errExp);

    const Real& re() const { return re_; }
    const Real& im() const { return im_; }
    const ErrRad& rad() const { return rad_; }
    // log2 bound on the error radius
    long errExp() const { return rad_.isZero() ? kFloor : std::max(rad_.ceilExp(), kFloor); }
    long prec() const { return re_.prec(); }

    // upper bound: |x| <= 2^magExp(); errExp() when the value rounds to 0
    long magExp() const;
    // lower bound: |x| >= 2^magLowExp(); only valid when definitelyNonzero()
    long magLowExp() const;
    bool definitelyNonzero(long slack = 4) const { return magLowExp() > errExp() + slack; }
    bool consistentWithZero(long slack = 2) const;

    BigComplex operator-() const { return BigComplex(-re_, -im_, rad_); }
    BigComplex conj() const { return BigComplex(re_, -im_, rad_); }

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b);
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b);
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b);
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b);

    BigComplex mulRat(const mpq_class& q) const;
    BigComplex mul2exp(long e) const {
        return BigComplex(re_.mul2exp(e), im_.mul2exp(e), radScale2(rad_, e));
    }
    BigComplex pow(unsigned n) const;
    BigComplex withErrExp(long e) const { return BigComplex(re_, im_, ErrRad::ofExp(e)); }
    BigComplex widenErr(long e) const { return BigComplex(re_, im_, radAdd(rad_, ErrRad::ofExp(e))); }

    // e^w
    static BigComplex expOf(const BigComplex& w);

    Real absApprox() const;
    double toDoubleRe() const { return re_.toDouble(); }
    double toDoubleIm() const { return im_.toDouble(); }

  private:
    Real re_, im_;
    ErrRad rad_;
};

// max(a, b) + 1 with floor handling; exponent arithmetic for error sums
long eAdd(long a, long b);

// magnitude exponent of (a - b): distance bound used by comparison tests
long diffMagExp(const BigComplex& a, const BigComplex& b);

} // namespace heegner1

#endif
