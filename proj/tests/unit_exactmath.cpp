#include "doctest.h"

#include "qtmom/special.hpp"

using namespace qtmom;

namespace {
Rational Q(long n, long d = 1) { return Rational(n, d); }
}

TEST_CASE("rational basics") {
    CHECK(Rational::from_string("3/6") == Q(1, 2));
    CHECK(Rational::from_string("-4/2").to_string() == "-2");
    CHECK(Q(1, 3) + Q(1, 6) == Q(1, 2));
    CHECK(Q(2, 3).pow(-2) == Q(9, 4));
    CHECK_THROWS_AS(Rational(1, 0), DomainError);
    CHECK_THROWS_AS(Q(1) / Q(0), DomainError);
    CHECK_THROWS_AS(Rational::from_string("1.5"), DomainError);
    CHECK(Q(7, 2).num() == 7);
    CHECK(Q(-7, 2).den() == 2);
}

TEST_CASE("extended binomial") {
    CHECK(binom_ext(5, 2) == Q(10));
    CHECK(binom_ext(-3, 2) == Q(6));   // (-1)^2 C(4,2)
    CHECK(binom_ext(4, -1) == Q(0));
    CHECK(binom_ext(3, 5) == Q(0));
    CHECK(binom_ext(-2, 3) == Q(-4));  // (-1)^3 C(4,1)
    // C(-k, j) = (-1)^j C(k+j-1, k-1) across a range
    for (long k = 1; k <= 8; ++k)
        for (long j = 0; j <= 10; ++j) {
            Rational sgn = (j % 2 == 0) ? Q(1) : Q(-1);
            CHECK(binom_ext(-k, j) == sgn * binom_ext(k + j - 1, k - 1));
        }
}

TEST_CASE("pochhammer") {
    CHECK(pochhammer(Q(3), 2) == Q(12));
    CHECK(pochhammer(Q(3), -1) == Q(1, 2));   // Gamma(2)/Gamma(3)
    CHECK(pochhammer(Q(1, 2), 3) == Q(15, 8));
    CHECK(pochhammer(Q(5, 2), -2) == Q(1) / (Q(1, 2) * Q(3, 2)));
    CHECK(pochhammer(Q(7), 0) == Q(1));
    // Gamma(z-1)/Gamma(z) = 1/(z-1) stays finite at z = 0
    CHECK(pochhammer(Q(0), -1) == Q(-1));
    CHECK(pochhammer(Q(0), -2) == Q(1, 2));
    CHECK_THROWS_AS(pochhammer(Q(2), -2), PoleError);
    CHECK_THROWS_AS(pochhammer(Q(1), -2), PoleError);
}

TEST_CASE("narayana numbers and polynomials") {
    CHECK(narayana(3, 2) == Q(3));
    CHECK(narayana(2, 0) == Q(0));
    CHECK(narayana(-2, 1) == Q(3));    // (1/2) C(3,1) C(2,1)
    CHECK_THROWS_AS(narayana(0, 1), DomainError);
    CHECK(narayana_poly(1, Q(5)) == Q(5));
    CHECK(narayana_poly(2, Q(1)) == Q(2));
    CHECK(narayana_poly(3, Q(2)) == Q(22));
    CHECK_THROWS_AS(narayana_poly(0, Q(1)), DomainError);

    // positive-index invariant: N(k,j) = C(k,j)C(k,j-1)/k, a nonnegative integer
    for (long k = 1; k <= 30; ++k)
        for (long j = 0; j <= k; ++j) {
            Rational n = narayana(k, j);
            CHECK(n == binom_ext(k, j) * binom_ext(k, j - 1) / Q(k));
            CHECK(n.is_nonneg_integer());
        }

    PolyQ p3 = narayana_poly_coeffs(3);
    CHECK(p3.degree() == 3);
    CHECK(p3.eval(Q(2)) == Q(22));

    PolyQ zero;
    CHECK(zero.degree() == -1);
    CHECK((p3 - p3).degree() == -1);
    CHECK((p3 * PolyQ::constant(Q(2))) == p3.scaled(Q(2)));

    // coefficient form of the Jacobi polynomials agrees with direct evaluation
    for (long nn = 0; nn <= 6; ++nn) {
        PolyQ pj = jacobi_poly_coeffs(nn, 1, 2);
        CHECK(pj.degree() == nn);
        CHECK(pj.eval(Q(5, 3)) == jacobi_poly(nn, 1, 2, Q(5, 3)));
    }
}

TEST_CASE("jacobi polynomials: values and recurrence") {
    CHECK(jacobi_poly(0, 2, 2, Q(7)) == Q(1));
    CHECK(jacobi_poly(1, 1, 0, Q(3)) == Q(5));      // (a+b+2)x/2 + (a-b)/2
    CHECK(jacobi_poly(4, 0, 0, Q(1)) == Q(1));
    CHECK(jacobi_poly(-1, 2, 2, Q(3)) == Q(0));

    const Rational xs[] = {Q(2), Q(-1, 2), Q(7, 3), Q(3), Q(-5, 4)};
    for (long al = 0; al <= 2; ++al)
        for (long be = 0; be <= 2; ++be)
            for (const Rational& x : xs) {
                Rational pm2 = jacobi_poly(0, al, be, x);
                Rational pm1 = jacobi_poly(1, al, be, x);
                for (long n = 2; n <= 30; ++n) {
                    Rational lhs = Q(2 * n) * Q(n + al + be) * Q(2 * n + al + be - 2) *
                                   jacobi_poly(n, al, be, x);
                    Rational rhs =
                        Q(2 * n + al + be - 1) *
                            (Q(2 * n + al + be) * Q(2 * n + al + be - 2) * x +
                             Q(al * al - be * be)) *
                            pm1 -
                        Q(2) * Q(n + al - 1) * Q(n + be - 1) * Q(2 * n + al + be) * pm2;
                    CHECK(lhs == rhs);
                    pm2 = pm1;
                    pm1 = jacobi_poly(n, al, be, x);
                }
            }
}

TEST_CASE("jacobi connection formulas") {
    // 1/(al+n+1)_(-j) written as the product (al+n+1-j)_(j), so the
    // coefficient vanishes cleanly for j > n
    auto conn_coeff = [](long j, long p, long n, long al, long be) {
        return binom_ext(p, j) * pochhammer(Q(al + be + n + 1), p - j) *
               Q(al + be + 2 * n - 2 * j + 1 + p) *
               pochhammer(Q(al + n + 1 - j), j) /
               pochhammer(Q(al + be + 2 * n - j + 1), 1 + p);
    };
    const Rational xs[] = {Q(2), Q(-1, 2), Q(7, 3), Q(3), Q(-5, 4)};
    for (long p = 1; p <= 2; ++p)
        for (long al = 0; al <= 2; ++al)
            for (long be = 0; be <= 2; ++be)
                for (const Rational& x : xs)
                    for (long n = 1; n <= 20; ++n) {
                        Rational lhs = jacobi_poly(n, al, be, x);
                        Rational s1(0), s2(0);
                        for (long j = 0; j <= p; ++j) {
                            s1 += conn_coeff(j, p, n, al, be) *
                                  jacobi_poly(n - j, al, be + p, x);
                            Rational sgn = (j % 2 == 0) ? Q(1) : Q(-1);
                            s2 += sgn * conn_coeff(j, p, n, be, al) *
                                  jacobi_poly(n - j, al + p, be, x);
                        }
                        CHECK(lhs == s1);
                        CHECK(lhs == s2);
                    }
}

TEST_CASE("terminating 2F1") {
    CHECK(hyp2f1_terminating(Q(0), Q(5), Q(2), Q(9)) == Q(1));
    CHECK(hyp2f1_terminating(Q(-1), Q(1), Q(1), Q(1, 2)) == Q(1, 2));
    CHECK_THROWS_AS(hyp2f1_terminating(Q(1, 2), Q(3), Q(1), Q(1)), NonTerminatingError);
    CHECK_THROWS_AS(hyp2f1_terminating(Q(-3), Q(2), Q(-1), Q(1)), PoleError);

    // bridges to Jacobi polynomials, both identities
    const Rational xs[] = {Q(3), Q(5, 2), Q(-2), Q(7, 4), Q(1, 3)};
    for (long n = 1; n <= 15; ++n)
        for (long al = 0; al <= 2; ++al)
            for (long be = 0; be <= std::min<long>(n, 2); ++be)
                for (const Rational& x : xs) {
                    if (x == Q(1)) continue;
                    // 2F1(-n, -n+be; al+1; x) =
                    //   n!(al)! ... (x-1)^{n-be} P^{(be,al)}_{n-be}((x+1)/(x-1))
                    Rational lhs = hyp2f1_terminating(Q(-n), Q(-n + be), Q(al + 1), x);
                    Rational pref = pochhammer(Q(1), al) * pochhammer(Q(1), n - be) /
                                    pochhammer(Q(1), n + al - be);
                    Rational rhs = pref * (x - Q(1)).pow(n - be) *
                                   jacobi_poly(n - be, be, al, (x + 1) / (x - 1));
                    CHECK(lhs == rhs);
                }
    for (long n = 2; n <= 15; ++n)
        for (long al = 0; al <= std::min<long>(2, n - 1); ++al)
            for (long be = 0; be <= 2; ++be)
                for (const Rational& x : xs) {
                    if (x == Q(1) || x.is_zero()) continue;
                    // 2F1(n, n+be; al+1; 1/x) = (x/(x-1))^{be+n} al!(n-al-1)!/(n-1)!
                    //   P^{(al,be)}_{n-al-1}((x+1)/(x-1));
                    // the left side via Euler's transformation, which makes it
                    // a terminating sum and keeps the check exact:
                    // 2F1(a,b;c;z) = (1-z)^{c-a-b} 2F1(c-a, c-b; c; z)
                    Rational z = Q(1) / x;
                    if (z == Q(1)) continue;
                    Rational lhs = (Q(1) - z).pow(al + 1 - 2 * n - be) *
                                   hyp2f1_terminating(Q(al + 1 - n), Q(al + 1 - n - be),
                                                      Q(al + 1), z);
                    Rational pref = pochhammer(Q(1), al) * pochhammer(Q(1), n - al - 1) /
                                    pochhammer(Q(1), n - 1);
                    Rational rhs = (x / (x - 1)).pow(be + n) * pref *
                                   jacobi_poly(n - al - 1, al, be, (x + 1) / (x - 1));
                    CHECK(lhs == rhs);
                }
}

TEST_CASE("generalized Bernoulli polynomials") {
    CHECK(gen_bernoulli(0, Q(7, 3), Q(-2)) == Q(1));
    CHECK(gen_bernoulli(1, Q(1), Q(0)) == Q(-1, 2));
    // B_1^{(g)}(a) = a - g/2, B_2^{(g)}(a) = a^2 - g a + g(3g-1)/12
    for (long gn = -3; gn <= 3; ++gn)
        for (long an = -2; an <= 2; ++an) {
            Rational g(gn, 2), a(an, 3);
            CHECK(gen_bernoulli(1, g, a) == a - g / Q(2));
            CHECK(gen_bernoulli(2, g, a) ==
                  a * a - g * a + g * (Q(3) * g - 1) / Q(12));
        }
    CHECK_THROWS_AS(gen_bernoulli(9, Q(1), Q(0)), DomainError);
    CHECK_THROWS_AS(gen_bernoulli(-1, Q(1), Q(0)), DomainError);
}

TEST_CASE("gamma ratio coefficients") {
    // alpha = beta: ratio is 1
    auto c = gamma_ratio_coeffs(Q(5, 7), Q(5, 7), 4);
    CHECK(c[0] == Q(1));
    for (std::size_t i = 1; i < c.size(); ++i) CHECK(c[i] == Q(0));

    // Gamma(z+1)/Gamma(z) = z exactly
    c = gamma_ratio_coeffs(Q(1), Q(0), 3);
    CHECK(c[0] == Q(1));
    CHECK(c[1] == Q(0));
    CHECK(c[2] == Q(0));

    // Gamma(z+2)/Gamma(z) = z^2 + z = z^2 (1 + 1/z)
    c = gamma_ratio_coeffs(Q(2), Q(0), 3);
    CHECK(c[0] == Q(1));
    CHECK(c[1] == Q(1));
    CHECK(c[2] == Q(0));
    CHECK(c[3] == Q(0));

    // the explicit 3-term expansion at 20 rational (alpha, beta) points
    for (long i = 0; i < 20; ++i) {
        Rational al(i + 1, 7), be(2 * i - 13, 5);
        auto cc = gamma_ratio_coeffs(al, be, 2);
        CHECK(cc[0] == Q(1));
        CHECK(cc[1] == (al - be) * (al + be - 1) / Q(2));
        Rational choose2 = (al - be) * (al - be - 1) / Q(2);
        CHECK(cc[2] == choose2 *
                           (Q(3) * (al + be - 1) * (al + be - 1) - (al - be + 1)) /
                           Q(12));
    }
}
