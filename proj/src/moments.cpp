#include "qtmom/moments.hpp"

#include <vector>

#include "qtmom/special.hpp"

namespace qtmom {

bool is_physical_symmetry_pair(int beta, int delta) {
    if (delta == 0) return beta == 1 || beta == 2 || beta == 4;
    return (beta == 1 && delta == -1) || (beta == 2 && delta == -1) ||
           (beta == 4 && delta == 2) || (beta == 2 && delta == 1);
}

SymmetryClass SymmetryClass::make(int beta, int delta) {
    if (!is_physical_symmetry_pair(beta, delta))
        throw InvalidSymmetryPair("symmetry (beta=" + std::to_string(beta) +
                                  ", delta=" + std::to_string(delta) + ") is not classified");
    return SymmetryClass{beta, delta};
}

EnsembleParams map_transmission(const SymmetryClass& cls, long n, long m) {
    if (n < 1) throw DomainError("map_transmission: n < 1");
    if (m < n) throw LeadOrderError("map_transmission: m < n");
    EnsembleParams p;
    p.kind = EnsembleKind::JacobiTransmission;
    p.beta = cls.beta;
    p.n = n;
    p.m = m;
    p.a = Rational(2, cls.beta) * (Rational(1) + Rational(cls.delta, 2)) - Rational(1);
    p.b = Rational(m - n);
    p.u = Rational(m, n);
    return p;
}

EnsembleParams map_delay(int beta, long n, const Rational& w) {
    if (beta != 1 && beta != 2 && beta != 4)
        throw InvalidSymmetryPair("map_delay: beta must be 1, 2 or 4");
    if (n < 1) throw DomainError("map_delay: n < 1");
    EnsembleParams p;
    p.kind = EnsembleKind::LaguerreDelay;
    p.beta = beta;
    p.n = n;
    p.b = Rational(n) * (w - 1) + Rational(2, beta) - Rational(1);
    p.w = w;
    return p;
}

EnsembleParams map_selberg_like(int beta, long n, const Rational& u, const Rational& v) {
    if (beta != 1 && beta != 2 && beta != 4)
        throw InvalidSymmetryPair("map_selberg_like: beta must be 1, 2 or 4");
    if (n < 1) throw DomainError("map_selberg_like: n < 1");
    if (u < Rational(1) || v < Rational(1))
        throw DomainError("map_selberg_like: u, v must be >= 1");
    EnsembleParams p;
    p.kind = EnsembleKind::SelbergLike;
    p.beta = beta;
    p.n = n;
    p.a = (v - 1) * Rational(n);
    p.b = (u - 1) * Rational(n);
    p.u = u;
    p.v = v;
    return p;
}

namespace {

// A single summand of a finite-n moment formula: a ratio of linear factors.
// Pochhammers expand to their factors; the regularizing prefactors shared
// between numerator and denominator Pochhammers are skipped on both sides so
// the term stays finite exactly where the underlying gamma ratio does. A
// residual zero in the numerator makes the term vanish; a residual zero in
// the denominator is a genuine pole.
class Term {
  public:
    Term& mul(const Rational& v) { num_.push_back(v); return *this; }
    Term& mul_poch(const Rational& x, long m) { push(x, m, num_, den_); return *this; }
    Term& div_poch(const Rational& x, long m) { push(x, m, den_, num_); return *this; }
    // (x)_(m) with the factor x + skip removed, m >= 0
    Term& div_poch_skip(const Rational& x, long m, long skip) {
        for (long i = 0; i < m; ++i)
            if (i != skip) den_.push_back(x + Rational(i));
        return *this;
    }

    Rational value(const char* what) const {
        Rational r(1);
        for (const auto& f : num_) {
            if (f.is_zero()) return Rational(0);
            r *= f;
        }
        for (const auto& f : den_) {
            if (f.is_zero())
                throw PoleError(std::string(what) + ": denominator factor vanished");
            r /= f;
        }
        return r;
    }

  private:
    static void push(const Rational& x, long m, std::vector<Rational>& fwd,
                     std::vector<Rational>& rev) {
        if (m >= 0)
            for (long i = 0; i < m; ++i) fwd.push_back(x + Rational(i));
        else
            for (long i = 1; i <= -m; ++i) rev.push_back(x - Rational(i));
    }

    std::vector<Rational> num_, den_;
};

Rational aomoto_first_moment(long n, const Rational& a, const Rational& b) {
    Rational den = a + b + Rational(2 * n);
    if (den.is_zero()) throw PoleError("aomoto: a + b + 2n = 0");
    return Rational(n) * (b + Rational(n)) / den;
}

// U^{a,b}_{n,k,j}; the prefactor (a+b+2n-2j+k+1) is the factor at offset
// k+1-j of (a+b+2n-j)_(k+2) and is cancelled on both sides.
Rational u_coeff(const Rational& a, const Rational& b, long n, long k, long j) {
    Rational ab2n = a + b + Rational(2 * n);
    Term t;
    t.mul_poch(a + b + Rational(n), k - j + 1)
        .mul_poch(a + Rational(n - j + 1), j)
        .mul_poch(b + Rational(n), k - j + 1)
        .div_poch(Rational(n + 1), -j)
        .div_poch_skip(ab2n - Rational(j), k + 2, k + 1 - j)
        .div_poch(ab2n - Rational(j - 1), k);
    return t.value("U coefficient");
}

Rational diff_m2_jacobi(const Rational& a, const Rational& b, long n, long k) {
    Rational s(0);
    for (long j = 0; j <= k; ++j) {
        Rational c = binom_ext(k, j) * binom_ext(k, j - 1);
        if (!c.is_zero()) s += c * u_coeff(a, b, n, k, j);
    }
    return s / Rational(k);
}

Rational m2_jacobi(const Rational& a, const Rational& b, long n, long k) {
    if (n == 0) return Rational(0);
    Rational m = aomoto_first_moment(n, a, b);
    for (long j = 1; j < k; ++j) m -= diff_m2_jacobi(a, b, n, j);
    return m;
}

Rational m2_laguerre_neg(const Rational& b, long n, long k) {
    Rational s(0);
    for (long j = 0; j < n; ++j) {
        Rational c = binom_ext(k + j, k - 1) * binom_ext(k + j - 1, k - 1);
        if (c.is_zero()) continue;
        Term t;
        t.mul(c).mul_poch(b + Rational(n), -k - j).div_poch(Rational(1 + n), -j - 1);
        s += t.value("beta=2 Laguerre term");
    }
    return s / Rational(k);
}

// S^{a,b}_{i,j}(k,n). Both prefactors of the second fraction cancel against
// factors of the denominator Pochhammers:
//   (2a+2b+4n-4j+1)       = offset i       of (2a+2b+4n-i-4j+1)_(1+k)
//   (2a+2b+4n-2i-4j+k+1)  = offset k-i-2j  of (2a+2b+4n-i-2j+1)_(1+k)
Rational s_jacobi(const Rational& a, const Rational& b, const Rational& n, long k,
                  long i, long j) {
    Rational X = 2 * a + 2 * b + 4 * n;
    Term t;
    t.mul(Rational(2).pow(4 * j - 3))
        .mul_poch(2 * a + 2 * n - Rational(i + 2 * j - 1), i)
        .mul_poch(2 * b + 2 * n, k - i - 2 * j + 1)
        .mul_poch(2 * a + 2 * b + 2 * n, k - i - 2 * j + 1)
        .div_poch(2 * n - Rational(2 * j - 1), -i)
        .div_poch(n + 1, -j)
        .div_poch(a + n + 1, -j)
        .div_poch(b + n, 1 - j)
        .div_poch(a + b + n, 1 - j)
        .div_poch_skip(X - Rational(i + 4 * j - 1), 1 + k, i)
        .div_poch_skip(X - Rational(i + 2 * j - 1), 1 + k, k - i - 2 * j);
    return t.value("S coefficient (Jacobi)");
}

// I contribution for the Jacobi ensemble; the prefactor (a+b+2n-4j-1+2k) is
// offset 2k-2j of (a+b+2n-2j-1)_(2k+1).
Rational i_jacobi(const Rational& a, const Rational& b, long n, long k) {
    Rational s(0);
    for (long j = 0; j <= k; ++j) {
        Rational c = binom_ext(2 * k, 2 * j);
        if (c.is_zero()) continue;
        Term t;
        t.mul(Rational(4).pow(k) * c)
            .mul_poch((a + b + Rational(n)) / 2, k - j)
            .mul_poch((b + Rational(n)) / 2, k - j)
            .div_poch((a + Rational(n + 1)) / 2, -j)
            .div_poch(Rational(1 + n, 2), -j)
            .div_poch_skip(a + b + Rational(2 * n - 2 * j - 1), 2 * k + 1, 2 * k - 2 * j);
        s += t.value("I contribution (Jacobi)");
    }
    return s;
}

Rational m1_jacobi(const Rational& a, const Rational& b, long n, long k) {
    Rational m = m2_jacobi(a, b, n - 1, k);
    Rational a2 = a / 2, b2 = b / 2, n2 = Rational(n - 1, 2);
    for (long j = 1; j <= k / 2; ++j)
        for (long i = 0; i <= k - 2 * j; ++i) {
            Rational c = binom_ext(k, i) * binom_ext(k, i + 2 * j);
            if (!c.is_zero()) m -= 2 * c * s_jacobi(a2, b2, n2, k, i, j);
        }
    return m + i_jacobi(a, b, n, k);
}

Rational m4_jacobi(const Rational& a, const Rational& b, long n, long k) {
    Rational m = m2_jacobi(2 * a, 2 * b, 2 * n, k) / Rational(2);
    for (long j = 1; j <= k / 2; ++j)
        for (long i = 0; i <= k - 2 * j; ++i) {
            Rational c = binom_ext(k, i) * binom_ext(k, i + 2 * j);
            if (!c.is_zero()) m -= c * s_jacobi(a, b, Rational(n), k, i, j);
        }
    return m;
}

Rational s_laguerre(const Rational& b, const Rational& n, long k, long i, long j) {
    Term t;
    t.mul(Rational(2).pow(k + 2 * j - 2))
        .mul_poch(2 * b + 2 * n, -k - i - 2 * j + 1)
        .mul_poch(2 * n - Rational(i + 2 * j - 1), i)
        .div_poch(n + 1, -j)
        .div_poch(b + n, 1 - j);
    return t.value("S coefficient (Laguerre)");
}

Rational i_laguerre(const Rational& b, long n, long k) {
    Rational s(0);
    for (long j = 0; j < n / 2; ++j) {
        Rational c = binom_ext(2 * k + 2 * j - 1, 2 * j);
        if (c.is_zero()) continue;
        Term t;
        t.mul(c)
            .mul_poch((b + Rational(n)) / 2, -k - j)
            .div_poch(Rational(1 + n, 2), -j);
        s += t.value("I contribution (Laguerre)");
    }
    return s / Rational(2).pow(k);
}

Rational m1_laguerre_neg(const Rational& b, long n, long k) {
    Rational m = m2_laguerre_neg(b, n - 1, k);
    Rational b2 = b / 2, n2 = Rational(n - 1, 2);
    for (long j = 1; j < n / 2; ++j)
        for (long i = 0; i <= n - 2 * j; ++i) {
            Rational c = binom_ext(k + i - 1, k - 1) * binom_ext(k + i + 2 * j - 1, k - 1);
            if (!c.is_zero())
                m -= Rational(2).pow(1 - k) * c * s_laguerre(b2, n2, k, i, j);
        }
    return m + i_laguerre(b, n, k);
}

Rational m4_laguerre_neg(const Rational& b, long n, long k) {
    Rational m = Rational(2).pow(k - 1) * m2_laguerre_neg(2 * b, 2 * n, k);
    for (long j = 1; j <= n; ++j)
        for (long i = 0; i <= 2 * n - 2 * j; ++i) {
            Rational c = binom_ext(k + i - 1, k - 1) * binom_ext(k + i + 2 * j - 1, k - 1);
            if (!c.is_zero()) m -= c * s_laguerre(b, Rational(n), k, i, j);
        }
    return m;
}

void check_beta(int beta) {
    if (beta != 1 && beta != 2 && beta != 4)
        throw InvalidSymmetryPair("beta must be 1, 2 or 4");
}

} // namespace

MomentResult moment_jacobi(int beta, long k, long n, const Rational& a, const Rational& b) {
    check_beta(beta);
    if (k < 1) throw DomainError("moment_jacobi: k < 1");
    if (n < 1) throw DomainError("moment_jacobi: n < 1");
    if (k == 1)
        return MomentResult{aomoto_first_moment(n, a, b), "jacobi-aomoto", {}};
    try {
        switch (beta) {
            case 2: return MomentResult{m2_jacobi(a, b, n, k), "jacobi-beta2-differences", {}};
            case 1: return MomentResult{m1_jacobi(a, b, n, k), "jacobi-beta1-decomposition", {}};
            default: return MomentResult{m4_jacobi(a, b, n, k), "jacobi-beta4-decomposition", {}};
        }
    } catch (const PoleError&) {
        // poles below the paper's stated range n > k*beta/2 are a validity
        // violation, not a formula defect
        if (2 * n <= k * beta)
            throw ValidityRangeError("moment_jacobi: outside the validity range n > k*beta/2 (n=" +
                                     std::to_string(n) + ", k=" + std::to_string(k) +
                                     ", beta=" + std::to_string(beta) + ")");
        throw;
    }
}

MomentResult moment_laguerre_neg(int beta, long k, long n, const Rational& b) {
    check_beta(beta);
    if (k < 1) throw DomainError("moment_laguerre_neg: k < 1");
    if (n < 1) throw DomainError("moment_laguerre_neg: n < 1");
    if (2 * k >= n * beta + 2)
        throw ValidityRangeError("moment_laguerre_neg: needs k < n*beta/2 + 1 (k=" +
                                 std::to_string(k) + ", n=" + std::to_string(n) +
                                 ", beta=" + std::to_string(beta) + ")");
    switch (beta) {
        case 2:
            return MomentResult{m2_laguerre_neg(b, n, k), "laguerre-beta2", {}};
        case 1: {
            if (n % 2 != 0)
                throw ParityError("moment_laguerre_neg: beta=1 formula needs even n");
            return MomentResult{m1_laguerre_neg(b, n, k), "laguerre-beta1-decomposition",
                                {ApproximationFlag::OmittedPhiTerm}};
        }
        default:
            // the beta=4 decomposition has no I/phi term and holds for any n
            return MomentResult{m4_laguerre_neg(b, n, k), "laguerre-beta4-decomposition", {}};
    }
}

MomentResult moment_selberg_like(int beta, long k, long n, const Rational& u, const Rational& v) {
    if (u < Rational(1) || v < Rational(1))
        throw DomainError("moment_selberg_like: u, v must be >= 1");
    MomentResult r = moment_jacobi(beta, k, n, (v - 1) * Rational(n), (u - 1) * Rational(n));
    r.formula = "selberg-like/" + r.formula;
    return r;
}

BigFloat selberg_constant(int beta, const Rational& a, const Rational& b, long n) {
    check_beta(beta);
    if (n < 1) throw DomainError("selberg_constant: n < 1");
    Rational half_beta(beta, 2);
    BigFloat log_c(0L);
    BigFloat lg_half = BigFloat::lngamma(BigFloat(Rational(1) + half_beta));
    for (long j = 0; j < n; ++j) {
        Rational gb = half_beta * (b + Rational(1 + j));
        Rational ga = half_beta * (a + Rational(1 + j));
        Rational gv = Rational(1) + Rational(j + 1) * half_beta;
        Rational gd = half_beta * (a + b + Rational(1 + n + j));
        if (gb.sign() <= 0 || ga.sign() <= 0 || gd.sign() <= 0)
            throw DomainError("selberg_constant: non-positive gamma argument");
        log_c = log_c + BigFloat::lngamma(BigFloat(gb)) + BigFloat::lngamma(BigFloat(ga)) +
                BigFloat::lngamma(BigFloat(gv)) - BigFloat::lngamma(BigFloat(gd)) - lg_half;
    }
    return BigFloat::exp(log_c);
}

BigFloat laguerre_norm_constant(int beta, const Rational& b, long n) {
    check_beta(beta);
    if (n < 1) throw DomainError("laguerre_norm_constant: n < 1");
    Rational half_beta(beta, 2);
    Rational gamma_w = half_beta * (b + Rational(1));  // per-particle weight x^{gamma_w - 1}
    if (gamma_w.sign() <= 0)
        throw DomainError("laguerre_norm_constant: non-normalizable weight");
    BigFloat log_c(0L);
    BigFloat lg_half = BigFloat::lngamma(BigFloat(Rational(1) + half_beta));
    for (long j = 0; j < n; ++j) {
        log_c = log_c + BigFloat::lngamma(BigFloat(gamma_w + half_beta * Rational(j))) +
                BigFloat::lngamma(BigFloat(Rational(1) + half_beta * Rational(j + 1))) - lg_half;
    }
    // scale x -> (2/beta) y : factor (2/beta)^(n gamma_w + beta n(n-1)/2)
    Rational expo = Rational(n) * gamma_w + half_beta * Rational(n * (n - 1));
    BigFloat scale = BigFloat::exp(
        BigFloat(expo) * BigFloat::log(BigFloat(Rational(2)) / BigFloat(Rational(beta))));
    return scale * BigFloat::exp(log_c);
}

long u_coeff_n_exponent(long k, long j) {
    // subscripts of (a+b+n)_(k-j+1) (a+n-j+1)_(j) (b+n)_(k-j+1) over
    // (a+b+2n-j)_(k+2) (a+b+2n-j+1)_(k) (n+1)_(-j), plus 1 from the prefactor
    return 1 + (k - j + 1) + j + (k - j + 1) - (k + 2) - k - (-j);
}

} // namespace qtmom
