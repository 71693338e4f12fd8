#pragma once

#include <mpfr.h>

#include <string>

#include "qtmom/rational.hpp"

namespace qtmom {

// Fixed-precision MPFR float for the oracle-side normalization constants and
// high-precision renderings. 256 bits ~ 77 significant decimal digits.
class BigFloat {
  public:
    static constexpr mpfr_prec_t kPrec = 256;

    BigFloat() { mpfr_init2(x_, kPrec); mpfr_set_zero(x_, 1); }
    explicit BigFloat(double d) { mpfr_init2(x_, kPrec); mpfr_set_d(x_, d, MPFR_RNDN); }
    explicit BigFloat(long n) { mpfr_init2(x_, kPrec); mpfr_set_si(x_, n, MPFR_RNDN); }
    explicit BigFloat(const Rational& r) {
        mpfr_init2(x_, kPrec);
        mpfr_set_q(x_, r.raw().get_mpq_t(), MPFR_RNDN);
    }
    BigFloat(const BigFloat& o) { mpfr_init2(x_, kPrec); mpfr_set(x_, o.x_, MPFR_RNDN); }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) mpfr_set(x_, o.x_, MPFR_RNDN);
        return *this;
    }
    ~BigFloat() { mpfr_clear(x_); }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat r; mpfr_add(r.x_, a.x_, b.x_, MPFR_RNDN); return r;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat r; mpfr_sub(r.x_, a.x_, b.x_, MPFR_RNDN); return r;
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r; mpfr_mul(r.x_, a.x_, b.x_, MPFR_RNDN); return r;
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        BigFloat r; mpfr_div(r.x_, a.x_, b.x_, MPFR_RNDN); return r;
    }
    BigFloat operator-() const { BigFloat r; mpfr_neg(r.x_, x_, MPFR_RNDN); return r; }

    static BigFloat exp(const BigFloat& a) { BigFloat r; mpfr_exp(r.x_, a.x_, MPFR_RNDN); return r; }
    static BigFloat log(const BigFloat& a) { BigFloat r; mpfr_log(r.x_, a.x_, MPFR_RNDN); return r; }
    static BigFloat lngamma(const BigFloat& a) { BigFloat r; mpfr_lngamma(r.x_, a.x_, MPFR_RNDN); return r; }

    int sign() const { return mpfr_sgn(x_); }
    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
    long double to_long_double() const { return mpfr_get_ld(x_, MPFR_RNDN); }

    // decimal string with the requested number of significant digits
    std::string to_string(int digits = 30) const;

  private:
    mpfr_t x_;
};

// decimal rendering of an exact rational at the given precision
std::string decimal_string(const Rational& r, int digits = 30);

} // namespace qtmom
