#ifndef HEEGNER1_REAL_HPP
#define HEEGNER1_REAL_HPP

#include <mpfr.h>
#include <gmpxx.h>

#include <string>
#include <utility>

namespace heegner1 {

/*
 * Thin RAII wrapper around mpfr_t. Result precision of a binary operation is
 * the max of the operand precisions; rounding is always MPFR_RNDN.
 */
class Real {
  public:
    explicit Real(long prec = 64) { mpfr_init2(v_, static_cast<mpfr_prec_t>(prec)); mpfr_set_zero(v_, 1); }
    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept { mpfr_init2(v_, 2); mpfr_swap(v_, o.v_); }
    Real& operator=(const Real& o) {
        if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
        return *this;
    }
    Real& operator=(Real&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
    ~Real() { mpfr_clear(v_); }

    long prec() const { return static_cast<long>(mpfr_get_prec(v_)); }

    static Real ofLong(long x, long prec) { Real r(prec); mpfr_set_si(r.v_, x, MPFR_RNDN); return r; }
    static Real ofRat(const mpq_class& q, long prec) { Real r(prec); mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN); return r; }
    static Real ofInt(const mpz_class& z, long prec) { Real r(prec); mpfr_set_z(r.v_, z.get_mpz_t(), MPFR_RNDN); return r; }
    static Real pi(long prec) { Real r(prec); mpfr_const_pi(r.v_, MPFR_RNDN); return r; }
    static Real sqrtOfLong(long x, long prec) { Real r(prec); mpfr_sqrt_ui(r.v_, static_cast<unsigned long>(x), MPFR_RNDN); return r; }
    static Real parse(const std::string& s, long prec) { Real r(prec); mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN); return r; }

    bool isZero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    // binary exponent: |x| < 2^expOf(); only meaningful for nonzero x
    long expOf() const { return static_cast<long>(mpfr_get_exp(v_)); }
    double toDouble() const { return mpfr_get_d(v_, MPFR_RNDN); }
    mpz_class roundToInt() const {
        mpz_class z;
        mpfr_t t;
        mpfr_init2(t, mpfr_get_prec(v_));
        mpfr_round(t, v_);
        mpfr_get_z(z.get_mpz_t(), t, MPFR_RNDN);
        mpfr_clear(t);
        return z;
    }
    std::string str(size_t digits) const;

    friend Real operator+(const Real& a, const Real& b) { Real r(std::max(a.prec(), b.prec())); mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    friend Real operator-(const Real& a, const Real& b) { Real r(std::max(a.prec(), b.prec())); mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    friend Real operator*(const Real& a, const Real& b) { Real r(std::max(a.prec(), b.prec())); mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    friend Real operator/(const Real& a, const Real& b) { Real r(std::max(a.prec(), b.prec())); mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    Real operator-() const { Real r(prec()); mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }

    Real sqrt() const { Real r(prec()); mpfr_sqrt(r.v_, v_, MPFR_RNDN); return r; }
    Real exp() const { Real r(prec()); mpfr_exp(r.v_, v_, MPFR_RNDN); return r; }
    Real abs() const { Real r(prec()); mpfr_abs(r.v_, v_, MPFR_RNDN); return r; }
    std::pair<Real, Real> sinCos() const {
        Real s(prec()), c(prec());
        mpfr_sin_cos(s.v_, c.v_, v_, MPFR_RNDN);
        return {std::move(s), std::move(c)};
    }
    Real mul2exp(long e) const { Real r(prec()); mpfr_mul_2si(r.v_, v_, e, MPFR_RNDN); return r; }

    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

  private:
    mpfr_t v_;
};

} // namespace heegner1

#endif
