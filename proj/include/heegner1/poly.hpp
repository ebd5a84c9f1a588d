#ifndef HEEGNER1_POLY_HPP
#define HEEGNER1_POLY_HPP

#include "heegner1/bigcomplex.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace heegner1 {

/*
 * Sparse bivariate polynomial over Q in variables (b, c), terms kept in
 * descending graded-lex order with b before c.
 */
class BivariatePolyQ {
  public:
    using Key = std::pair<int, int>; // exponents of (b, c)

    struct KeyCmp {
        bool operator()(const Key& a, const Key& b) const {
            int da = a.first + a.second, db = b.first + b.second;
            if (da != db) return da > db;
            if (a.first != b.first) return a.first > b.first;
            return a.second > b.second;
        }
    };
    using TermMap = std::map<Key, mpq_class, KeyCmp>;

    BivariatePolyQ() = default;

    static BivariatePolyQ constant(const mpq_class& v);
    static BivariatePolyQ mono(const mpq_class& coeff, int i, int j);
    static BivariatePolyQ varB() { return mono(1, 1, 0); }
    static BivariatePolyQ varC() { return mono(1, 0, 1); }

    bool isZero() const { return t_.empty(); }
    bool isConstant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first == Key{0, 0}); }
    int totalDegree() const;
    int degB() const;
    int degC() const;
    const TermMap& terms() const { return t_; }
    mpq_class coeff(int i, int j) const;
    mpq_class leadingCoeff() const { return t_.empty() ? mpq_class(0) : t_.begin()->second; }

    friend BivariatePolyQ operator+(const BivariatePolyQ& a, const BivariatePolyQ& b);
    friend BivariatePolyQ operator-(const BivariatePolyQ& a, const BivariatePolyQ& b);
    friend BivariatePolyQ operator*(const BivariatePolyQ& a, const BivariatePolyQ& b);
    BivariatePolyQ operator-() const;
    bool operator==(const BivariatePolyQ& o) const { return t_ == o.t_; }

    BivariatePolyQ mulScalar(const mpq_class& s) const;
    BivariatePolyQ pow(unsigned n) const;

    // substitute polynomials for both variables
    BivariatePolyQ compose(const BivariatePolyQ& forB, const BivariatePolyQ& forC) const;

    mpq_class evalRat(const mpq_class& b, const mpq_class& c) const;
    BigComplex evalC(const BigComplex& b, const BigComplex& c, long B) const;

    // gcd of coefficients, positive (0 for the zero polynomial)
    mpq_class content() const;
    // content removed and leading coefficient made positive
    BivariatePolyQ primitiveCanonical() const;

    static std::optional<BivariatePolyQ> divExact(const BivariatePolyQ& a, const BivariatePolyQ& d);
    static BivariatePolyQ gcd(const BivariatePolyQ& a, const BivariatePolyQ& b);

    std::string toText(const std::string& vb = "b", const std::string& vc = "c") const;
    nlohmann::json toJson() const;
    static BivariatePolyQ fromJson(const nlohmann::json& j);

  private:
    void addTerm(const Key& k, const mpq_class& v);
    TermMap t_;
};

} // namespace heegner1

#endif
