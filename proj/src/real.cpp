#include "heegner1/real.hpp"

#include <cstdlib>
#include <sstream>

namespace heegner1 {

std::string Real::str(size_t digits) const {
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return sign() < 0 ? "-inf" : "inf";
    if (isZero()) return "0";
    mpfr_exp_t e;
    char* s = mpfr_get_str(nullptr, &e, 10, digits, v_, MPFR_RNDN);
    std::string mant(s);
    mpfr_free_str(s);
    std::string sgn;
    if (!mant.empty() && mant[0] == '-') { sgn = "-"; mant.erase(0, 1); }
    // mant is digits with implied decimal point before the first one: 0.mant * 10^e
    std::ostringstream out;
    out << sgn << "0." << mant << "e" << e;
    return out.str();
}

} // namespace heegner1
