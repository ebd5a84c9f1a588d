#include "heegner1/ratfunc.hpp"

#include "heegner1/errors.hpp"

namespace heegner1 {

RatFuncQ::RatFuncQ(BivariatePolyQ num, BivariatePolyQ den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.isZero()) throw DivisionFails("zero denominator");
    reduce();
}

void RatFuncQ::reduce() {
    if (num_.isZero()) {
        den_ = BivariatePolyQ::constant(1);
        return;
    }
    BivariatePolyQ g = BivariatePolyQ::gcd(num_, den_);
    if (!g.isConstant()) {
        num_ = *BivariatePolyQ::divExact(num_, g);
        den_ = *BivariatePolyQ::divExact(den_, g);
    }
    mpq_class c = den_.content();
    if (den_.leadingCoeff() < 0) c = -c;
    num_ = num_.mulScalar(1 / c);
    den_ = den_.mulScalar(1 / c);
}

RatFuncQ operator+(const RatFuncQ& a, const RatFuncQ& b) {
    return RatFuncQ(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFuncQ operator-(const RatFuncQ& a, const RatFuncQ& b) {
    return RatFuncQ(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFuncQ operator*(const RatFuncQ& a, const RatFuncQ& b) {
    return RatFuncQ(a.num_ * b.num_, a.den_ * b.den_);
}

RatFuncQ operator/(const RatFuncQ& a, const RatFuncQ& b) {
    if (b.isZero()) throw DivisionFails("division by zero rational function");
    return RatFuncQ(a.num_ * b.den_, a.den_ * b.num_);
}

RatFuncQ RatFuncQ::operator-() const {
    RatFuncQ r = *this;
    r.num_ = -r.num_;
    return r;
}

std::string RatFuncQ::toText(const std::string& vb, const std::string& vc) const {
    std::string n = num_.toText(vb, vc);
    if (den_ == BivariatePolyQ::constant(1)) return n;
    return "(" + n + ")/(" + den_.toText(vb, vc) + ")";
}

} // namespace heegner1
