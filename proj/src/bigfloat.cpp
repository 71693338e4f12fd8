#include "qtmom/bigfloat.hpp"

#include <cstdlib>
#include <cstring>

namespace qtmom {

std::string BigFloat::to_string(int digits) const {
    if (mpfr_zero_p(x_)) return "0";
    if (mpfr_nan_p(x_)) return "nan";
    if (mpfr_inf_p(x_)) return sign() > 0 ? "inf" : "-inf";
    mpfr_exp_t e;
    char* s = mpfr_get_str(nullptr, &e, 10, static_cast<std::size_t>(digits), x_, MPFR_RNDN);
    std::string mant(s);
    mpfr_free_str(s);
    bool neg = !mant.empty() && mant[0] == '-';
    std::string digits_only = neg ? mant.substr(1) : mant;
    // scientific rendering m.mmm...e<exp>, exponent relative to one leading digit
    std::string out = (neg ? "-" : "");
    out += digits_only.substr(0, 1);
    if (digits_only.size() > 1) out += "." + digits_only.substr(1);
    out += "e" + std::to_string(static_cast<long>(e) - 1);
    return out;
}

std::string decimal_string(const Rational& r, int digits) {
    return BigFloat(r).to_string(digits);
}

} // namespace qtmom
