#include "qtmom/asympt.hpp"

#include "qtmom/moments.hpp"
#include "qtmom/series.hpp"
#include "qtmom/special.hpp"

namespace qtmom {

namespace {

void check_beta(int beta) {
    if (beta != 1 && beta != 2 && beta != 4)
        throw InvalidSymmetryPair("beta must be 1, 2 or 4");
}

void check_order(int beta, int p) {
    if (p < 0 || p > 2)
        throw UnsupportedOrderError("expansion order p=" + std::to_string(p) +
                                    " not available (p <= 2)");
    if (p == 2 && beta == 4)
        throw UnsupportedOrderError("second corrections were not derived for beta=4");
}

void check_delta(const Rational& delta) {
    if (delta <= Rational(-2))
        throw ParameterDomainError("delta must exceed -2");
}

Rational two_over_beta_m1(int beta) { return Rational(2, beta) - Rational(1); }

Rational delay_second_b2(long k, const Rational& w) {
    Rational wt = (w + 1) / (w - 1);
    return Rational((k + 1) * (k + 2)) * w / (Rational(12) * (w - 1).pow(k + 3)) *
           jacobi_poly(k - 2, 2, 2, wt);
}

SeriesQ eval_family(GenFunFamily fam, const Rational& x, const Rational& delta, int beta,
                    std::size_t order) {
    GenFunId id;
    id.family = fam;
    id.u = x;
    id.delta = delta;
    id.beta = beta;
    return genfun_eval(id, order).series;
}

} // namespace

Rational delay_coeff(int beta, long k, int p, const Rational& w) {
    check_beta(beta);
    check_order(beta, p);
    if (k < 1) throw DomainError("delay_coeff: k < 1");
    if (w <= Rational(1)) throw ParameterDomainError("delay_coeff: requires w > 1");
    switch (p) {
        case 0:
            if (k == 1) return Rational(1) / (w - 1);
            return narayana_poly(k - 1, w) / (w - 1).pow(2 * k - 1);
        case 1: {
            Rational s(0);
            for (long j = 0; j <= k; ++j)
                s += (binom_ext(2 * k, 2 * j) - binom_ext(k, j) * binom_ext(k, j)) * w.pow(j);
            return two_over_beta_m1(beta) / (Rational(2) * (w - 1).pow(2 * k)) * s;
        }
        default:
            if (beta == 2) return delay_second_b2(k, w);
            // beta = 1: coefficient defined as the series coefficient
            return eval_family(GenFunFamily::D2Beta1, w, Rational(0), 1,
                               static_cast<std::size_t>(k) + 1)[static_cast<std::size_t>(k)];
    }
}

Rational trans_first_moment_coeff(int beta, const Rational& delta, int p, const Rational& u) {
    Rational factor = Rational(1) - Rational(2, beta) * (delta / 2 + 1);
    return u / (u + 1).pow(p + 1) * factor.pow(p);
}

CoeffResult trans_diff_coeff(int beta, const Rational& delta, long k, int p, const Rational& u) {
    check_beta(beta);
    check_order(beta, p);
    check_delta(delta);
    if (k < 1) throw DomainError("trans_diff_coeff: k < 1");
    switch (p) {
        case 0:
            return {narayana_poly(k, u * u) / (u + 1).pow(2 * k + 1), false};
        case 1: {
            Rational t = two_over_beta_m1(beta) * u * (u - 1).pow(2 * k) / (u + 1).pow(2 * k + 2);
            Rational s1(0), s2(0);
            for (long j = 0; j <= k; ++j) {
                Rational bj = binom_ext(k, j);
                s1 += bj * bj * u.pow(2 * j + 1);
                s2 += bj * binom_ext(k, j + 1) * u.pow(2 * j + 2);
            }
            return {t + delta / Rational(beta) * (s1 - s2) / (u + 1).pow(2 * k + 2), false};
        }
        default: {
            if (beta == 2) return {trans_diff_second_b2_fsum(k, u, delta), false};
            if (delta.is_zero()) {
                SeriesQ d = eval_family(GenFunFamily::DeltaT2Beta1Delta0, u, delta, 1,
                                        static_cast<std::size_t>(k) + 1);
                return {d[static_cast<std::size_t>(k)], false};
            }
            SeriesQ t = eval_family(GenFunFamily::T2Beta1DeltaConjectured, u, delta, 1,
                                    static_cast<std::size_t>(k) + 2);
            return {t[static_cast<std::size_t>(k)] - t[static_cast<std::size_t>(k) + 1], true};
        }
    }
}

CoeffResult trans_coeff(int beta, const Rational& delta, long k, int p, const Rational& u) {
    check_beta(beta);
    check_order(beta, p);
    check_delta(delta);
    if (k < 1) throw DomainError("trans_coeff: k < 1");
    if (p == 2 && beta == 1 && !delta.is_zero()) {
        SeriesQ t = eval_family(GenFunFamily::T2Beta1DeltaConjectured, u, delta, 1,
                                static_cast<std::size_t>(k) + 1);
        return {t[static_cast<std::size_t>(k)], true};
    }
    Rational total = trans_first_moment_coeff(beta, delta, p, u);
    bool conj = false;
    for (long j = 1; j < k; ++j) {
        CoeffResult d = trans_diff_coeff(beta, delta, j, p, u);
        total -= d.value;
        conj = conj || d.conjecture;
    }
    if (p == 0) {
        Rational nov = trans_leading_novaes(k, u);
        if (nov != total)
            throw InternalIdentityViolation(
                "trans_coeff: Novaes route disagrees with the difference assembly at k=" +
                std::to_string(k));
    }
    return {total, conj};
}

Rational selberg_like_diff_coeff(long k, const Rational& u, const Rational& v) {
    if (k < 1) throw DomainError("selberg_like_diff_coeff: k < 1");
    Rational s(0);
    for (long j = 0; j <= k; ++j) {
        Rational c = binom_ext(k, j) * binom_ext(k, j - 1);
        if (!c.is_zero())
            s += c * v.pow(j) * u.pow(k - j + 1) * (u + v - 1).pow(k - j + 1);
    }
    return s / Rational(k) / (u + v).pow(2 * k + 1);
}

Rational selberg_like_coeff(int beta, long k, int p, const Rational& u, const Rational& v) {
    check_beta(beta);
    if (p < 0 || p > 1)
        throw UnsupportedOrderError("selberg_like_coeff: only p in {0,1} available");
    if (k < 1) throw DomainError("selberg_like_coeff: k < 1");
    if (u < Rational(1) || v < Rational(1))
        throw ParameterDomainError("selberg_like_coeff: u, v >= 1 required");
    if (p == 0) {
        Rational m = u / (u + v);
        for (long j = 1; j < k; ++j) m -= selberg_like_diff_coeff(j, u, v);
        return m;
    }
    Rational y = u * (u + v - 1) / v;
    Rational s(0);
    for (long j = 0; j <= k; ++j)
        s += (binom_ext(2 * k, 2 * j) - binom_ext(k, j) * binom_ext(k, j)) * y.pow(j);
    return two_over_beta_m1(beta) * v.pow(k) / (Rational(2) * (u + v).pow(2 * k)) * s;
}

Rational laguerre_pos_leading_narayana(long k, const Rational& w) {
    return narayana_poly(k, w);
}

Rational laguerre_pos_leading_novaes(long k, const Rational& w) {
    Rational s(0);
    for (long j = 0; j <= (k - 1) / 2; ++j)
        s += binom_ext(2 * j, j) / Rational(j + 1) * binom_ext(k - 1, 2 * j) * w.pow(j + 1) *
             (w + 1).pow(k - 2 * j - 1);
    return s;
}

Rational laguerre_pos_leading(long k, const Rational& w) {
    if (k < 1) throw DomainError("laguerre_pos_leading: k < 1");
    Rational a = laguerre_pos_leading_narayana(k, w);
    Rational b = laguerre_pos_leading_novaes(k, w);
    if (a != b)
        throw InternalIdentityViolation("laguerre_pos_leading: the two closed forms disagree");
    return a;
}

Rational trans_leading_novaes(long k, const Rational& u) {
    Rational s(0);
    for (long j = 0; j < k; ++j) {
        Rational sgn = (j % 2 == 0) ? Rational(1) : Rational(-1);
        s += binom_ext(k - 1, j) * binom_ext(2 * j, j) * sgn / Rational(j + 1) * u.pow(j + 1) /
             (u + 1).pow(2 * j + 1);
    }
    return s;
}

Rational chu_jacobi_brute(long k, long j, int p) {
    Rational s(0);
    for (long i = 1; i <= j; ++i)
        s += binom_ext(k, j - i) * binom_ext(k, j + i) * Rational(i).pow(p);
    return s;
}

Rational chu_jacobi_closed(long k, long j, int p) {
    switch (p) {
        case 0:
            return (binom_ext(2 * k, 2 * j) - binom_ext(k, j) * binom_ext(k, j)) / Rational(2);
        case 1:
            return Rational(k, 2) * binom_ext(k - 1, j) * binom_ext(k - 1, j - 1);
        case 2:
            return Rational(k, 4) * binom_ext(2 * k - 2, 2 * j - 1);
        default:
            throw DomainError("chu_jacobi_closed: p in {0,1,2}");
    }
}

Rational chu_laguerre_brute(long k, long j, int p) {
    Rational s(0);
    for (long i = 1; i <= j; ++i)
        s += binom_ext(k + j - i - 1, k - 1) * binom_ext(k + j + i - 1, k - 1) * Rational(i).pow(p);
    return s;
}

Rational chu_laguerre_closed(long k, long j, int p) {
    switch (p) {
        case 0:
            return (binom_ext(2 * k + 2 * j - 1, 2 * k - 1) -
                    binom_ext(k + j - 1, k - 1) * binom_ext(k + j - 1, k - 1)) /
                   Rational(2);
        case 1:
            return Rational(k, 2) * binom_ext(k + j - 1, k) * binom_ext(k + j, k);
        case 2:
            return (Rational(k * (k + 1)) * binom_ext(2 * k + 2 * j - 1, 2 * k + 1) +
                    Rational(k * (1 - 2 * j)) * binom_ext(2 * k + 2 * j - 1, 2 * k) +
                    Rational(j * j) * binom_ext(2 * k + 2 * j - 1, 2 * k - 1)) /
                   Rational(2);
        default:
            throw DomainError("chu_laguerre_closed: p in {0,1,2}");
    }
}

bool coker_first_holds(long k, const Rational& w) {
    return laguerre_pos_leading_narayana(k, w) == laguerre_pos_leading_novaes(k, w);
}

bool coker_second_holds(long k, const Rational& u) {
    Rational lhs(0);
    for (long j = 0; j <= k; ++j)
        lhs += binom_ext(k, j) * binom_ext(k, j - 1) * u.pow(2 * j);
    lhs /= Rational(k);
    Rational rhs(0);
    for (long j = 0; j <= k; ++j) {
        Rational sgn = (j % 2 == 0) ? Rational(-1) : Rational(1);
        rhs += binom_ext(k - 1, j - 1) * binom_ext(2 * j, j) * sgn / Rational(j + 1) *
               u.pow(j + 1) * (u + 1).pow(2 * k - 2 * j);
    }
    return lhs == rhs;
}

bool floor_ceiling_holds(long k, const Rational& u) {
    Rational lhs(0);
    for (long j = 0; j <= 2 * k; ++j)
        lhs += binom_ext(k, j / 2) * binom_ext(k, (j + 1) / 2) * u.pow(j);
    lhs *= u / (u + 1).pow(2 * k + 1);
    Rational rhs(0);
    for (long j = 0; j <= k; ++j) {
        Rational sgn = (j % 2 == 0) ? Rational(1) : Rational(-1);
        rhs += binom_ext(k, j) * binom_ext(2 * j, j) * sgn / Rational(j + 1) * u.pow(j + 1) /
               (u + 1).pow(2 * j + 1);
    }
    return lhs == rhs;
}

Rational trans_diff_second_b2_fsum(long k, const Rational& u, const Rational& delta) {
    Rational total(0);
    for (long j = 0; j <= k; ++j) {
        Rational c = binom_ext(k, j) * binom_ext(k, j - 1);
        if (c.is_zero()) continue;
        Rational jk(j - k), jk1(j - 1 - k), jr(j);
        Rational A = jk * jk1 * (Rational(3 * j * j - 6 * j * k - j + k + 3 * k * k - 1)) / 6 +
                     jk1 * Rational(2 * j - 1 - 2 * k) * jk * u / 3 -
                     jr * jk1 * Rational(-j * k + k + 1 + j * j - j) * u.pow(2) -
                     jr * Rational((2 * j - 1) * (j - 1)) * u.pow(3) / 3 +
                     jr * Rational(j - 1) * Rational(3 * j * j - 5 * j + 1) * u.pow(4) / 6;
        Rational B = (u - 1) / 2 *
                     (jk * jk1 * Rational(2 * j - 1 - 2 * k) -
                      jr * Rational((2 * j - 1) * (j - 1)) * u.pow(3) +
                      Rational(1 + 2 * j) * jk * jk1 * u -
                      jr * Rational(j - 1) * Rational(2 * j - 2 * k - 3) * u.pow(2));
        Rational C = jk * jk1 / 2 + Rational(k + 1) * jk1 * u +
                     (jr * Rational(k - j + 1) + Rational(k * (k + 1), 2)) * u.pow(2) -
                     jr * Rational(k + 1) * u.pow(3) + jr * Rational(j - 1) * u.pow(4) / 2;
        Rational F = A + delta / 2 * B + delta * delta / 4 * C;
        total += c * u.pow(2 * k - 2 * j) / (u + 1).pow(2 * k + 3) * F;
    }
    return total / Rational(k);
}

Rational trans_diff_second_b2_delta0_jacobi_route(long k, const Rational& u) {
    Rational ut = (u * u + 1) / (u * u - 1);
    Rational pref = u * u * Rational(k * (k + 1)) * (u - 1).pow(k - 2) / (u + 1).pow(k + 5);
    Rational inner = (Rational(1) - u * u) *
                         (jacobi_poly(k - 1, 1, 1, ut) / Rational(6 * k) -
                          Rational(2, 3) * jacobi_poly(k - 1, 0, 0, ut)) -
                     Rational(2, 3) * u * jacobi_poly(k - 2, 1, 1, ut);
    return pref * inner;
}

Rational delay_second_b1_jacobi_route(long k, const Rational& w) {
    Rational wt = (w + 1) / (w - 1);
    Rational t = (w + 1) * jacobi_poly(k - 1, 2, 2, wt) * Rational(k + 3) /
                 (Rational(4) * (w - 1).pow(k + 2));
    Rational s(0);
    for (long j = 0; j <= k; ++j) s += binom_ext(2 * k + 2, 2 * j + 1) * w.pow(j);
    t -= Rational(k) / (Rational(4) * (w - 1).pow(2 * k + 1)) * s;
    t += (8 * w + Rational(7 * k) * w - 3 * w * w - 3) * Rational(k + 1) *
         jacobi_poly(k - 2, 2, 2, wt) / (Rational(12) * (w - 1).pow(k + 3));
    return t;
}

std::vector<RemainderRow> remainder_scan(ScanTarget target, int beta, const Rational& delta,
                                         long k, const Rational& param,
                                         const std::vector<long>& n_list) {
    check_beta(beta);
    std::vector<RemainderRow> rows;
    rows.reserve(n_list.size());
    if (target == ScanTarget::Delay) {
        const Rational& w = param;
        Rational c0 = delay_coeff(beta, k, 0, w);
        Rational c1 = delay_coeff(beta, k, 1, w);
        Rational c2 = delay_coeff(beta, k, 2, w);
        for (long n : n_list) {
            Rational b = Rational(n) * (w - 1) + Rational(2, beta) - 1;
            MomentResult m = moment_laguerre_neg(beta, k, n, b);
            Rational nn(n);
            Rational rem = nn.pow(k - 1) * m.value - (c0 + c1 / nn + c2 / (nn * nn));
            rows.push_back({n, rem, rem * nn.pow(3)});
        }
    } else {
        const Rational& u = param;
        Rational c0 = trans_coeff(beta, delta, k, 0, u).value;
        Rational c1 = trans_coeff(beta, delta, k, 1, u).value;
        Rational c2 = trans_coeff(beta, delta, k, 2, u).value;
        Rational a = Rational(2, beta) * (Rational(1) + delta / 2) - Rational(1);
        for (long n : n_list) {
            Rational b = Rational(n) * (u - 1);
            MomentResult m = moment_jacobi(beta, k, n, a, b);
            Rational nn(n);
            Rational rem = m.value / nn - (c0 + c1 / nn + c2 / (nn * nn));
            rows.push_back({n, rem, rem * nn.pow(3)});
        }
    }
    return rows;
}

} // namespace qtmom
