#include "heegner1/minpoly.hpp"

#include "heegner1/errors.hpp"
#include "heegner1/lll.hpp"

#include <sstream>

namespace heegner1 {

std::string IntPoly::toText(const std::string& var) const {
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const mpz_class& c = coeffs[static_cast<size_t>(i)];
        if (c == 0) continue;
        mpz_class a = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (a != 1 || i == 0) out << a.get_str();
        if (i > 0) {
            if (a != 1) out << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    if (first) out << "0";
    return out.str();
}

namespace {

mpz_class scaleToInt(const Real& r, long shift) {
    return r.mul2exp(shift).roundToInt();
}

} // namespace

std::optional<IntPoly> minPolyGuess(const BigComplex& x, int maxDeg, const mpz_class& heightBound) {
    if (maxDeg < 1) throw Error("maxDeg must be at least 1");
    long heightBits = static_cast<long>(mpz_sizeinbase(heightBound.get_mpz_t(), 2));
    if (x.errExp() > -(static_cast<long>(maxDeg) * heightBits + 128))
        throw InsufficientPrecision("errExp too large for certified recognition at this degree/height");

    // powers of x with tracked error
    std::vector<BigComplex> pw(static_cast<size_t>(maxDeg) + 1);
    pw[0] = BigComplex::fromLong(1, 0, x.prec());
    for (int i = 1; i <= maxDeg; ++i) pw[static_cast<size_t>(i)] = pw[static_cast<size_t>(i - 1)] * x;

    long magX = std::max(0L, x.magExp());

    for (int d = 1; d <= maxDeg; ++d) {
        long emax = BigComplex::kFloor;
        for (int i = 0; i <= d; ++i) emax = std::max(emax, pw[static_cast<size_t>(i)].errExp());
        long shift = -emax - 16; // scale factor 2^shift
        if (shift <= heightBits + 64) continue;

        size_t dim = static_cast<size_t>(d) + 1;
        std::vector<std::vector<mpz_class>> basis(dim, std::vector<mpz_class>(dim + 2, mpz_class(0)));
        for (size_t i = 0; i < dim; ++i) {
            basis[i][i] = 1;
            basis[i][dim] = scaleToInt(pw[i].re(), shift);
            basis[i][dim + 1] = scaleToInt(pw[i].im(), shift);
        }
        lllReduce(basis);

        long certBound = x.errExp() + heightBits + d * magX + 16;
        for (const auto& row : basis) {
            IntPoly cand;
            cand.coeffs.assign(row.begin(), row.begin() + static_cast<long>(dim));
            while (!cand.coeffs.empty() && cand.coeffs.back() == 0) cand.coeffs.pop_back();
            if (cand.coeffs.empty() || cand.degree() < 1) continue;
            bool heightOk = true;
            for (auto& c : cand.coeffs)
                if (abs(c) > heightBound) { heightOk = false; break; }
            if (!heightOk) continue;
            // certify |p(x)| against the error budget
            BigComplex val = BigComplex::zero(x.prec());
            for (size_t i = 0; i < cand.coeffs.size(); ++i)
                val = val + pw[i].mulRat(mpq_class(cand.coeffs[i]));
            if (val.magExp() > certBound) continue;
            mpz_class content = 0;
            for (auto& c : cand.coeffs)
                mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
            if (cand.coeffs.back() < 0) content = -content;
            for (auto& c : cand.coeffs) c /= content;
            return cand;
        }
    }
    return std::nullopt;
}

} // namespace heegner1
