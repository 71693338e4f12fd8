#pragma once

#include <vector>

#include "qtmom/rational.hpp"

namespace qtmom {

// Binomial coefficient, extended to negative upper index via
// C(-m, j) = (-1)^j C(m+j-1, m-1). Zero for k < 0 or (n >= 0 and k > n).
Rational binom_ext(long n, long k);

// Pochhammer symbol (x)_(m) = Gamma(x+m)/Gamma(x). Negative m through the
// reciprocal product; throws PoleError when that product hits zero.
Rational pochhammer(const Rational& x, long m);

// Narayana numbers N(k,j) = C(k,j)C(k,j-1)/k and their negative-index
// extension N(-k,j) = C(k+j,k-1)C(k+j-1,k-1)/k. k = 0 is a DomainError.
Rational narayana(long k, long j);

// N_k(u) = (1/k) sum_{j=1..k} C(k,j)C(k,j-1) u^j, k >= 1
Rational narayana_poly(long k, const Rational& u);

// Dense polynomial over Rational. Degree of the zero polynomial is -1.
class PolyQ {
  public:
    PolyQ() = default;
    explicit PolyQ(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static PolyQ constant(const Rational& v) { return PolyQ({v}); }

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const Rational& coeff(std::size_t i) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& x) const;

    PolyQ operator+(const PolyQ& o) const;
    PolyQ operator-(const PolyQ& o) const;
    PolyQ operator*(const PolyQ& o) const;
    PolyQ scaled(const Rational& s) const;
    bool operator==(const PolyQ& o) const { return c_ == o.c_; }

  private:
    void trim();
    std::vector<Rational> c_;
};

// coefficient form of N_k(u) as a PolyQ in u
PolyQ narayana_poly_coeffs(long k);

// Jacobi polynomial P_n^{(alpha,beta)}(x) by the explicit double-binomial
// sum; exact at rational x. P_{-1} and below are zero by convention so the
// closed-form moment expressions can be written uniformly in k.
Rational jacobi_poly(long n, long alpha, long beta, const Rational& x);
PolyQ jacobi_poly_coeffs(long n, long alpha, long beta);

// Terminating Gauss hypergeometric sum. Requires a or b to be a
// non-positive integer; throws NonTerminatingError otherwise and PoleError
// if (c)_j vanishes before the series terminates.
Rational hyp2f1_terminating(const Rational& a, const Rational& b,
                            const Rational& c, const Rational& z);

inline constexpr long kDefaultBernoulliMaxOrder = 8;

// Generalized Bernoulli polynomial B_i^{(gamma)}(alpha): coefficient of
// t^i/i! in (t/(e^t-1))^gamma e^{alpha t}, by exact series convolution.
Rational gen_bernoulli(long i, const Rational& gamma, const Rational& alpha,
                       long max_order = kDefaultBernoulliMaxOrder);

// Coefficients c_0..c_order with
//   Gamma(z+alpha)/Gamma(z+beta) ~ z^{alpha-beta} sum_i c_i z^{-i}.
std::vector<Rational> gamma_ratio_coeffs(const Rational& alpha, const Rational& beta,
                                         long order,
                                         long max_order = kDefaultBernoulliMaxOrder);

} // namespace qtmom
