#ifndef HEEGNER1_RATFUNC_HPP
#define HEEGNER1_RATFUNC_HPP

#include "heegner1/poly.hpp"

namespace heegner1 {

// reduced fraction of BivariatePolyQ; denominator primitive with positive
// leading coefficient, so equality is term-by-term
class RatFuncQ {
  public:
    RatFuncQ() : num_(), den_(BivariatePolyQ::constant(1)) {}
    RatFuncQ(BivariatePolyQ num, BivariatePolyQ den);
    static RatFuncQ ofPoly(BivariatePolyQ p) { return RatFuncQ(std::move(p), BivariatePolyQ::constant(1)); }
    static RatFuncQ constant(const mpq_class& v) { return ofPoly(BivariatePolyQ::constant(v)); }

    const BivariatePolyQ& num() const { return num_; }
    const BivariatePolyQ& den() const { return den_; }
    bool isZero() const { return num_.isZero(); }

    friend RatFuncQ operator+(const RatFuncQ& a, const RatFuncQ& b);
    friend RatFuncQ operator-(const RatFuncQ& a, const RatFuncQ& b);
    friend RatFuncQ operator*(const RatFuncQ& a, const RatFuncQ& b);
    friend RatFuncQ operator/(const RatFuncQ& a, const RatFuncQ& b);
    RatFuncQ operator-() const;
    bool operator==(const RatFuncQ& o) const { return num_ == o.num_ && den_ == o.den_; }

    std::string toText(const std::string& vb = "b", const std::string& vc = "c") const;

  private:
    void reduce();
    BivariatePolyQ num_, den_;
};

} // namespace heegner1

#endif
