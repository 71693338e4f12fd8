#include "qtmom/special.hpp"

#include <cstdlib>

namespace qtmom {

Rational Rational::from_string(std::string_view s) {
    if (s.empty()) throw DomainError("Rational: empty string");
    auto bad = s.find_first_not_of("0123456789/-+");
    if (bad != std::string_view::npos)
        throw DomainError("Rational: invalid character in '" + std::string(s) + "'");
    mpq_class q;
    if (q.set_str(std::string(s), 10) != 0)
        throw DomainError("Rational: cannot parse '" + std::string(s) + "'");
    if (q.get_den() == 0) throw DomainError("Rational: zero denominator");
    q.canonicalize();
    return Rational(q);
}

std::string Rational::to_string() const {
    return v_.get_str();
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero() && e < 0) throw DomainError("Rational: 0 to negative power");
    mpq_class base = e > 0 ? v_ : mpq_class(1 / v_);
    unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
    mpq_class r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), n);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), n);
    return Rational(r);
}

Rational binom_ext(long n, long k) {
    if (k < 0) return Rational(0);
    if (n >= 0) {
        if (k > n) return Rational(0);
        mpz_class r;
        mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                     static_cast<unsigned long>(k));
        return Rational(r);
    }
    // C(-m, k) = (-1)^k C(m+k-1, m-1)
    long m = -n;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(m + k - 1),
                 static_cast<unsigned long>(m - 1));
    if (k % 2 != 0) r = -r;
    return Rational(r);
}

Rational pochhammer(const Rational& x, long m) {
    Rational r(1);
    if (m >= 0) {
        for (long i = 0; i < m; ++i) r *= x + Rational(i);
        return r;
    }
    // (x)_(-m') = 1/((x-m')_(m'))
    for (long i = 1; i <= -m; ++i) {
        Rational f = x - Rational(i);
        if (f.is_zero())
            throw PoleError("pochhammer: (" + x.to_string() + ")_(" +
                            std::to_string(m) + ") hits a gamma pole");
        r *= f;
    }
    return Rational(1) / r;
}

Rational narayana(long k, long j) {
    if (k == 0) throw DomainError("narayana: k = 0");
    if (k > 0) return binom_ext(k, j) * binom_ext(k, j - 1) / Rational(k);
    long m = -k;
    return binom_ext(m + j, m - 1) * binom_ext(m + j - 1, m - 1) / Rational(m);
}

Rational narayana_poly(long k, const Rational& u) {
    if (k < 1) throw DomainError("narayana_poly: k < 1");
    Rational s(0);
    Rational up(1);
    for (long j = 1; j <= k; ++j) {
        up *= u;
        s += binom_ext(k, j) * binom_ext(k, j - 1) * up;
    }
    return s / Rational(k);
}

PolyQ narayana_poly_coeffs(long k) {
    if (k < 1) throw DomainError("narayana_poly_coeffs: k < 1");
    std::vector<Rational> c(static_cast<std::size_t>(k) + 1, Rational(0));
    for (long j = 1; j <= k; ++j)
        c[static_cast<std::size_t>(j)] = binom_ext(k, j) * binom_ext(k, j - 1) / Rational(k);
    return PolyQ(std::move(c));
}

const Rational& PolyQ::coeff(std::size_t i) const {
    static const Rational zero(0);
    return i < c_.size() ? c_[i] : zero;
}

void PolyQ::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational PolyQ::eval(const Rational& x) const {
    Rational r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

PolyQ PolyQ::operator+(const PolyQ& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
    return PolyQ(std::move(r));
}

PolyQ PolyQ::operator-(const PolyQ& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
    return PolyQ(std::move(r));
}

PolyQ PolyQ::operator*(const PolyQ& o) const {
    if (c_.empty() || o.c_.empty()) return PolyQ();
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return PolyQ(std::move(r));
}

PolyQ PolyQ::scaled(const Rational& s) const {
    std::vector<Rational> r = c_;
    for (auto& x : r) x *= s;
    return PolyQ(std::move(r));
}

Rational jacobi_poly(long n, long alpha, long beta, const Rational& x) {
    if (n < 0) return Rational(0);
    Rational s(0);
    Rational half_m = (x - 1) / Rational(2);
    Rational half_p = (x + 1) / Rational(2);
    for (long j = 0; j <= n; ++j)
        s += binom_ext(n + alpha, n - j) * binom_ext(n + beta, j) *
             half_m.pow(j) * half_p.pow(n - j);
    return s;
}

PolyQ jacobi_poly_coeffs(long n, long alpha, long beta) {
    if (n < 0) return PolyQ();
    PolyQ half_m({Rational(-1, 2), Rational(1, 2)});
    PolyQ half_p({Rational(1, 2), Rational(1, 2)});
    PolyQ acc;
    for (long j = 0; j <= n; ++j) {
        PolyQ term = PolyQ::constant(binom_ext(n + alpha, n - j) * binom_ext(n + beta, j));
        for (long t = 0; t < j; ++t) term = term * half_m;
        for (long t = 0; t < n - j; ++t) term = term * half_p;
        acc = acc + term;
    }
    return acc;
}

Rational hyp2f1_terminating(const Rational& a, const Rational& b,
                            const Rational& c, const Rational& z) {
    long terms = -1;
    auto nonpos_int = [](const Rational& r) {
        return r.is_integer() && r.sign() <= 0;
    };
    if (nonpos_int(a)) terms = -a.to_long();
    if (nonpos_int(b)) {
        long t = -b.to_long();
        if (terms < 0 || t < terms) terms = t;
    }
    if (terms < 0)
        throw NonTerminatingError("hyp2f1: neither a nor b is a non-positive integer");
    Rational sum(1);
    Rational term(1);
    for (long j = 0; j < terms; ++j) {
        Rational cj = c + Rational(j);
        if (cj.is_zero())
            throw PoleError("hyp2f1: (c)_j hits zero before termination");
        term *= (a + Rational(j)) * (b + Rational(j)) / cj * z / Rational(j + 1);
        sum += term;
    }
    return sum;
}

namespace {

// truncated exact series helpers, coefficients of t^0..t^order
using Ser = std::vector<Rational>;

Ser ser_mul(const Ser& a, const Ser& b) {
    Ser r(a.size(), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < r.size() && j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    }
    return r;
}

Ser ser_inv(const Ser& a) {
    Ser r(a.size(), Rational(0));
    r[0] = Rational(1) / a[0];
    for (std::size_t i = 1; i < a.size(); ++i) {
        Rational acc(0);
        for (std::size_t j = 1; j <= i; ++j) acc += a[j] * r[i - j];
        r[i] = -acc / a[0];
    }
    return r;
}

// log of a series with constant term 1
Ser ser_log1(const Ser& a) {
    Ser x = a;
    x[0] = Rational(0);
    Ser r(a.size(), Rational(0));
    Ser p = x;
    for (std::size_t m = 1; m < a.size(); ++m) {
        Rational sgn = (m % 2 == 1) ? Rational(1) : Rational(-1);
        for (std::size_t i = 0; i < a.size(); ++i) r[i] += sgn / Rational(static_cast<long>(m)) * p[i];
        p = ser_mul(p, x);
    }
    return r;
}

// exp of a series with zero constant term
Ser ser_exp0(const Ser& a) {
    Ser r(a.size(), Rational(0));
    r[0] = Rational(1);
    Ser p(a.size(), Rational(0));
    p[0] = Rational(1);
    Rational fact(1);
    for (std::size_t m = 1; m < a.size(); ++m) {
        p = ser_mul(p, a);
        fact *= Rational(static_cast<long>(m));
        for (std::size_t i = 0; i < a.size(); ++i) r[i] += p[i] / fact;
    }
    return r;
}

} // namespace

Rational gen_bernoulli(long i, const Rational& gamma, const Rational& alpha,
                       long max_order) {
    if (i < 0 || i > max_order)
        throw DomainError("gen_bernoulli: order " + std::to_string(i) +
                          " outside [0, " + std::to_string(max_order) + "]");
    std::size_t ord = static_cast<std::size_t>(i) + 1;
    // t/(e^t - 1) = 1 / sum_m t^m/(m+1)!
    Ser denom(ord, Rational(0));
    Rational fact(1);
    for (std::size_t m = 0; m < ord; ++m) {
        fact *= Rational(static_cast<long>(m) + 1);
        denom[m] = Rational(1) / fact;
    }
    Ser base = ser_inv(denom);
    // base^gamma = exp(gamma * log(base)), exact for rational gamma
    Ser lg = ser_log1(base);
    for (auto& x : lg) x *= gamma;
    Ser powed = ser_exp0(lg);
    // multiply by e^{alpha t}
    Ser ea(ord, Rational(0));
    Rational af(1);
    ea[0] = Rational(1);
    for (std::size_t m = 1; m < ord; ++m) {
        af *= alpha / Rational(static_cast<long>(m));
        ea[m] = af;
    }
    Ser full = ser_mul(powed, ea);
    // B_i = i! * [t^i]
    Rational f(1);
    for (long m = 2; m <= i; ++m) f *= Rational(m);
    return full[static_cast<std::size_t>(i)] * f;
}

std::vector<Rational> gamma_ratio_coeffs(const Rational& alpha, const Rational& beta,
                                         long order, long max_order) {
    if (order < 0 || order > max_order)
        throw DomainError("gamma_ratio_coeffs: order outside configured range");
    std::vector<Rational> c;
    c.reserve(static_cast<std::size_t>(order) + 1);
    Rational fact(1);
    for (long i = 0; i <= order; ++i) {
        if (i > 0) fact *= Rational(i);
        Rational sgn = (i % 2 == 0) ? Rational(1) : Rational(-1);
        c.push_back(sgn * pochhammer(beta - alpha, i) / fact *
                    gen_bernoulli(i, alpha - beta + 1, alpha, max_order));
    }
    return c;
}

} // namespace qtmom
