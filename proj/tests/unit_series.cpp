#include "doctest.h"

#include "qtmom/series.hpp"
#include "qtmom/special.hpp"

using namespace qtmom;

namespace {
Rational Q(long n, long d = 1) { return Rational(n, d); }

SeriesQ gf(GenFunFamily fam, const Rational& x, std::size_t order, int beta = 2,
           const Rational& delta = Rational(0), const Rational& v = Rational(1)) {
    GenFunId id;
    id.family = fam;
    id.u = x;
    id.v = v;
    id.delta = delta;
    id.beta = beta;
    return genfun_eval(id, order).series;
}
}

TEST_CASE("series ring operations") {
    SeriesQ one_plus = SeriesQ::poly({Q(1), Q(1)}, 3);
    SeriesQ one_minus = SeriesQ::poly({Q(1), Q(-1)}, 3);
    CHECK(one_plus * one_minus == SeriesQ::poly({Q(1), Q(0), Q(-1)}, 3));

    SeriesQ geom = SeriesQ::constant(Q(1), 4) / SeriesQ::poly({Q(1), Q(-1)}, 4);
    CHECK(geom == SeriesQ::poly({Q(1), Q(1), Q(1), Q(1)}, 4));

    SeriesQ prod = SeriesQ::poly({Q(1), Q(-1)}, 5) *
                   (SeriesQ::constant(Q(1), 5) / SeriesQ::poly({Q(1), Q(-1)}, 5));
    CHECK(prod == SeriesQ::constant(Q(1), 5));

    CHECK_THROWS_AS(SeriesQ::constant(Q(1), 3) / SeriesQ::poly({Q(0), Q(1)}, 3),
                    DivisionByZeroSeries);

    // min-order semantics
    SeriesQ a(5), b(3);
    CHECK((a + b).order() == 3);
    CHECK((a * b).order() == 3);

    CHECK(series_arith(one_plus, one_minus, SeriesOp::Add) ==
          SeriesQ::poly({Q(2)}, 3));
}

TEST_CASE("series sqrt") {
    SeriesQ q = SeriesQ::poly({Q(1), Q(-6), Q(1)}, 4);
    CHECK(q.sqrt() == SeriesQ::poly({Q(1), Q(-3), Q(-4), Q(-12)}, 4));
    CHECK(q.sqrt() * q.sqrt() == q);

    CHECK(SeriesQ::constant(Q(4), 2).sqrt() == SeriesQ::constant(Q(2), 2));

    SeriesQ p = SeriesQ::poly({Q(1), Q(1)}, 6);
    CHECK(p.sqrt() * p.sqrt() == p);

    CHECK_THROWS_AS(SeriesQ::poly({Q(2), Q(1)}, 3).sqrt(), NotAPerfectSquareConstant);
    CHECK_THROWS_AS(SeriesQ::poly({Q(0), Q(1)}, 3).sqrt(), NotAPerfectSquareConstant);
}

TEST_CASE("diff_to_moments transform") {
    // Delta = 0, T_1p = c: moments c(s + s^2 + ...)
    SeriesQ zero(6);
    SeriesQ m = diff_to_moments(zero, Q(3));
    CHECK(m == SeriesQ::poly({Q(0), Q(3), Q(3), Q(3), Q(3), Q(3)}, 6));

    // round-trip through the inverse
    SeriesQ delta = SeriesQ::poly({Q(0), Q(2), Q(-1), Q(5, 7)}, 8);
    SeriesQ back = moments_to_diffs(diff_to_moments(delta, Q(4, 3)), Q(4, 3));
    CHECK(back == delta);
}

TEST_CASE("narayana rho and known sequences") {
    SeriesQ rho = gf(GenFunFamily::NarayanaRho, Q(1), 7);
    // Catalan numbers at u = 1
    CHECK(rho[1] == Q(1));
    CHECK(rho[2] == Q(2));
    CHECK(rho[3] == Q(5));
    CHECK(rho[4] == Q(14));
    CHECK(rho[5] == Q(42));
    // coefficients are the Narayana polynomials
    SeriesQ rho2 = gf(GenFunFamily::NarayanaRho, Q(3, 2), 12);
    for (long k = 1; k <= 11; ++k) CHECK(rho2[k] == narayana_poly(k, Q(3, 2)));

    SeriesQ d0 = gf(GenFunFamily::D0, Q(2), 6);
    CHECK(d0[1] == Q(1));
    CHECK(d0[2] == Q(2));
    CHECK(d0[3] == Q(6));
    CHECK(d0[4] == Q(22));
    CHECK(d0[5] == Q(90));

    SeriesQ t0 = gf(GenFunFamily::T0, Q(1), 3);
    CHECK(t0[1] == Q(1, 2));

    SeriesQ d2 = gf(GenFunFamily::D2Beta2, Q(2), 3);
    CHECK(d2[1] == Q(0));
    CHECK(d2[2] == Q(2));  // w/(w-1)^5 at w=2
}

TEST_CASE("leading duality via independent code paths") {
    // transform of Delta T_0 with Aomoto constant equals T0, u = 2
    std::size_t ord = 17;
    Rational u(2);
    SeriesQ dT0(ord);
    {
        std::vector<Rational> c(ord, Q(0));
        for (long k = 1; k < static_cast<long>(ord); ++k)
            c[static_cast<std::size_t>(k)] =
                narayana_poly(k, u * u) / (u + 1).pow(2 * k + 1);
        dT0 = SeriesQ(std::move(c));
    }
    SeriesQ t0 = gf(GenFunFamily::T0, u, ord);
    CHECK(diff_to_moments(dT0, u / (u + 1)) == t0);
}

TEST_CASE("selberg H fixed point") {
    const Rational pts[][2] = {{Q(2), Q(3)}, {Q(3, 2), Q(2)}, {Q(1), Q(1)},
                               {Q(5, 2), Q(7, 3)}, {Q(4), Q(1)}};
    for (const auto& pt : pts) {
        GenFunId id;
        id.family = GenFunFamily::SelbergH;
        id.u = pt[0];
        id.v = pt[1];
        SeriesQ H = genfun_eval(id, 32).series;
        CHECK(H[0] == Q(0));
        // residual of H (u+v-(1+u)s) - us + (1-s) H^2 vanishes identically
        SeriesQ den = SeriesQ::poly({pt[0] + pt[1], -(Q(1) + pt[0])}, 32);
        SeriesQ lhs = H * den;
        SeriesQ rhs = SeriesQ::poly({Q(0), pt[0]}, 32) -
                      SeriesQ::poly({Q(1), Q(-1)}, 32) * (H * H);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("conjectured family is flagged") {
    GenFunId id;
    id.family = GenFunFamily::T2Beta1DeltaConjectured;
    id.u = Q(2);
    id.delta = Q(2);
    id.beta = 1;
    auto r = genfun_eval(id, 8);
    CHECK(r.conjecture);
    GenFunId id2;
    id2.family = GenFunFamily::T2Beta1Delta0;
    id2.u = Q(2);
    CHECK_FALSE(genfun_eval(id2, 8).conjecture);
}

TEST_CASE("parameter domain errors") {
    GenFunId id;
    id.family = GenFunFamily::D0;
    id.u = Q(1);
    CHECK_THROWS_AS(genfun_eval(id, 8), ParameterDomainError);
    id.family = GenFunFamily::T2Beta2Delta;
    id.u = Q(2);
    id.delta = Q(-3);
    CHECK_THROWS_AS(genfun_eval(id, 8), ParameterDomainError);
}
