#pragma once

#include <vector>

#include "qtmom/rational.hpp"

namespace qtmom {

// Truncated formal power series in s over Rational. The truncation order is
// exclusive: a series of order N carries coefficients of s^0..s^{N-1}.
// Binary operations truncate to the smaller operand order.
class SeriesQ {
  public:
    SeriesQ() = default;
    explicit SeriesQ(std::size_t order) : c_(order, Rational(0)) {}
    explicit SeriesQ(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {}

    static SeriesQ constant(const Rational& v, std::size_t order);
    // polynomial c0 + c1 s + ... padded/truncated to order
    static SeriesQ poly(std::vector<Rational> coeffs, std::size_t order);

    std::size_t order() const { return c_.size(); }
    const Rational& operator[](std::size_t i) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    SeriesQ truncated(std::size_t order) const;

    SeriesQ operator+(const SeriesQ& o) const;
    SeriesQ operator-(const SeriesQ& o) const;
    SeriesQ operator*(const SeriesQ& o) const;
    // requires o constant term nonzero
    SeriesQ operator/(const SeriesQ& o) const;
    SeriesQ operator-() const;
    SeriesQ scaled(const Rational& v) const;
    bool operator==(const SeriesQ& o) const { return c_ == o.c_; }

    // branch with positive rational constant term; requires the constant
    // term to be the square of a rational
    SeriesQ sqrt() const;

    // multiply by s (order preserved, top coefficient dropped)
    SeriesQ shifted_up() const;
    // divide by s; requires zero constant term
    SeriesQ shifted_down() const;

  private:
    std::vector<Rational> c_;
};

enum class SeriesOp { Add, Sub, Mul, Div };

SeriesQ series_arith(const SeriesQ& lhs, const SeriesQ& rhs, SeriesOp op);

// T_p(u,s) = s/(s-1) (Delta T_p(u,s) - T_{1,p}); delta_series must have zero
// constant term.
SeriesQ diff_to_moments(const SeriesQ& delta_series, const Rational& first_moment_coeff);
// inverse transform; moment series must have zero constant term
SeriesQ moments_to_diffs(const SeriesQ& moment_series, const Rational& first_moment_coeff);

enum class GenFunFamily {
    NarayanaRho,          // rho(u,s), Narayana polynomials
    D0,                   // leading delay-time generating function, param w
    T0,                   // leading transmission generating function, param u
    D1,                   // next-to-leading delay, params (w, beta)
    T1,                   // next-to-leading transmission, params (u, beta, delta)
    D2Beta2,              // second delay correction, beta=2, param w
    T2Beta2Delta,         // second transmission correction, beta=2, params (u, delta)
    DeltaT2Beta2Delta,    // differences of the above
    D2Beta1,              // second delay correction, beta=1, param w
    T2Beta1Delta0,        // second transmission correction, beta=1, delta=0
    DeltaT2Beta1Delta0,   // differences of the above
    T2Beta1DeltaConjectured, // conjectured beta=1 Andreev second correction
    SelbergH              // H(u,v;s) of the Selberg-like leading moments
};

struct GenFunId {
    GenFunFamily family = GenFunFamily::D0;
    Rational u;          // u for T-families and rho, w for D-families
    Rational v;          // second parameter, SelbergH only
    Rational delta;      // T1 / T2Beta2Delta / conjectured family
    int beta = 2;        // D1 / T1 prefactors
};

struct GenFunResult {
    SeriesQ series;
    bool conjecture = false;
};

GenFunResult genfun_eval(const GenFunId& id, std::size_t order);

} // namespace qtmom
