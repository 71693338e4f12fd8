#include "qtmom/series.hpp"

#include <algorithm>

namespace qtmom {

SeriesQ SeriesQ::constant(const Rational& v, std::size_t order) {
    SeriesQ s(order);
    if (order > 0) s.c_[0] = v;
    return s;
}

SeriesQ SeriesQ::poly(std::vector<Rational> coeffs, std::size_t order) {
    coeffs.resize(order, Rational(0));
    return SeriesQ(std::move(coeffs));
}

const Rational& SeriesQ::operator[](std::size_t i) const {
    static const Rational zero(0);
    return i < c_.size() ? c_[i] : zero;
}

SeriesQ SeriesQ::truncated(std::size_t order) const {
    std::vector<Rational> r(c_.begin(), c_.begin() + std::min(order, c_.size()));
    r.resize(order, Rational(0));
    return SeriesQ(std::move(r));
}

SeriesQ SeriesQ::operator+(const SeriesQ& o) const {
    std::size_t n = std::min(order(), o.order());
    std::vector<Rational> r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = c_[i] + o.c_[i];
    return SeriesQ(std::move(r));
}

SeriesQ SeriesQ::operator-(const SeriesQ& o) const {
    std::size_t n = std::min(order(), o.order());
    std::vector<Rational> r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = c_[i] - o.c_[i];
    return SeriesQ(std::move(r));
}

SeriesQ SeriesQ::operator-() const {
    std::vector<Rational> r = c_;
    for (auto& x : r) x = -x;
    return SeriesQ(std::move(r));
}

SeriesQ SeriesQ::scaled(const Rational& v) const {
    std::vector<Rational> r = c_;
    for (auto& x : r) x *= v;
    return SeriesQ(std::move(r));
}

SeriesQ SeriesQ::operator*(const SeriesQ& o) const {
    std::size_t n = std::min(order(), o.order());
    std::vector<Rational> r(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < n; ++j) {
            if (!o.c_[j].is_zero()) r[i + j] += c_[i] * o.c_[j];
        }
    }
    return SeriesQ(std::move(r));
}

SeriesQ SeriesQ::operator/(const SeriesQ& o) const {
    std::size_t n = std::min(order(), o.order());
    if (n == 0) return SeriesQ(0u);
    if (o.c_[0].is_zero())
        throw DivisionByZeroSeries("series division by zero constant term");
    std::vector<Rational> r(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rational acc = c_[i];
        for (std::size_t j = 1; j <= i; ++j) acc -= o.c_[j] * r[i - j];
        r[i] = acc / o.c_[0];
    }
    return SeriesQ(std::move(r));
}

SeriesQ SeriesQ::sqrt() const {
    if (c_.empty()) return SeriesQ(0u);
    const Rational& c0 = c_[0];
    if (c0.sign() <= 0)
        throw NotAPerfectSquareConstant("series sqrt: constant term not positive");
    mpz_class nr, dr;
    mpz_sqrt(nr.get_mpz_t(), c0.num().get_mpz_t());
    mpz_sqrt(dr.get_mpz_t(), c0.den().get_mpz_t());
    Rational r0 = Rational(mpq_class(nr, dr));
    if (r0 * r0 != c0)
        throw NotAPerfectSquareConstant("series sqrt: constant term " + c0.to_string() +
                                        " is not a rational square");
    std::vector<Rational> r(c_.size());
    r[0] = r0;
    Rational two_r0 = Rational(2) * r0;
    for (std::size_t i = 1; i < c_.size(); ++i) {
        Rational acc = c_[i];
        for (std::size_t j = 1; j < i; ++j) acc -= r[j] * r[i - j];
        r[i] = acc / two_r0;
    }
    return SeriesQ(std::move(r));
}

SeriesQ SeriesQ::shifted_up() const {
    std::vector<Rational> r(c_.size(), Rational(0));
    for (std::size_t i = 1; i < c_.size(); ++i) r[i] = c_[i - 1];
    return SeriesQ(std::move(r));
}

SeriesQ SeriesQ::shifted_down() const {
    if (c_.empty()) return *this;
    if (!c_[0].is_zero())
        throw DomainError("series shift: nonzero constant term");
    std::vector<Rational> r(c_.begin() + 1, c_.end());
    r.push_back(Rational(0));
    return SeriesQ(std::move(r));
}

SeriesQ series_arith(const SeriesQ& lhs, const SeriesQ& rhs, SeriesOp op) {
    switch (op) {
        case SeriesOp::Add: return lhs + rhs;
        case SeriesOp::Sub: return lhs - rhs;
        case SeriesOp::Mul: return lhs * rhs;
        case SeriesOp::Div: return lhs / rhs;
    }
    throw DomainError("series_arith: bad op");
}

SeriesQ diff_to_moments(const SeriesQ& delta_series, const Rational& first_moment_coeff) {
    if (delta_series.order() > 0 && !delta_series[0].is_zero())
        throw DomainError("diff_to_moments: difference series has nonzero constant term");
    std::size_t n = delta_series.order();
    SeriesQ shifted = (delta_series - SeriesQ::constant(first_moment_coeff, n)).shifted_up();
    return shifted / SeriesQ::poly({Rational(-1), Rational(1)}, n);
}

SeriesQ moments_to_diffs(const SeriesQ& moment_series, const Rational& first_moment_coeff) {
    if (moment_series.order() > 0 && !moment_series[0].is_zero())
        throw DomainError("moments_to_diffs: moment series has nonzero constant term");
    std::size_t n = moment_series.order();
    SeriesQ t = moment_series * SeriesQ::poly({Rational(-1), Rational(1)}, n);
    return t.shifted_down() + SeriesQ::constant(first_moment_coeff, n);
}

namespace {

SeriesQ spoly(std::size_t n, std::initializer_list<Rational> cs) {
    return SeriesQ::poly(std::vector<Rational>(cs), n);
}

// q(s) = s^2 - 2(w+1)s + (w-1)^2, the delay-side discriminant
SeriesQ delay_disc(const Rational& w, std::size_t n) {
    return spoly(n, {(w - 1) * (w - 1), Rational(-2) * (w + 1), Rational(1)});
}

// p(s) = (u+1)^2 - s(u-1)^2, the transmission-side discriminant
SeriesQ trans_disc(const Rational& u, std::size_t n) {
    return spoly(n, {(u + 1) * (u + 1), -(u - 1) * (u - 1)});
}

SeriesQ pow32(const SeriesQ& q) { return q * q.sqrt(); }          // q^{3/2}
SeriesQ pow52(const SeriesQ& q) { return q * q * q.sqrt(); }      // q^{5/2}

void require(bool cond, const char* msg) {
    if (!cond) throw ParameterDomainError(msg);
}

} // namespace

GenFunResult genfun_eval(const GenFunId& id, std::size_t n) {
    const Rational& u = id.u;
    const Rational& w = id.u;
    const Rational& delta = id.delta;
    Rational one(1);
    bool conjecture = false;
    SeriesQ out;

    switch (id.family) {
        case GenFunFamily::NarayanaRho: {
            // rho(u,s) = (1 - s(u+1) - sqrt(1-2s+s^2-2us-2us^2+u^2s^2)) / (2s)
            SeriesQ q = spoly(n + 1, {one, Rational(-2) - 2 * u, one - 2 * u + u * u});
            SeriesQ num = spoly(n + 1, {one, -(u + 1)}) - q.sqrt();
            out = num.shifted_down().scaled(Rational(1, 2)).truncated(n);
            break;
        }
        case GenFunFamily::D0: {
            require(w != one, "D0: w = 1 pole");
            out = (spoly(n, {w - 1, Rational(-1)}) - delay_disc(w, n).sqrt())
                      .scaled(Rational(1, 2));
            break;
        }
        case GenFunFamily::T0: {
            require(u.sign() > 0, "T0: u must be positive");
            SeriesQ inner = SeriesQ::constant(one, n) +
                            spoly(n, {Rational(0), 4 * u / ((u + 1) * (u + 1))}) /
                                spoly(n, {one, Rational(-1)});
            out = (inner.sqrt() - SeriesQ::constant(one, n)).scaled((u + 1) / Rational(2));
            break;
        }
        case GenFunFamily::D1: {
            require(w != one, "D1: w = 1 pole");
            SeriesQ q = delay_disc(w, n);
            SeriesQ t = spoly(n, {(w - 1) * (w - 1), -(w + 1)}) - q.sqrt().scaled(w - 1);
            Rational pref = (Rational(2, id.beta) - 1) / Rational(2);
            out = (t / q).scaled(pref);
            break;
        }
        case GenFunFamily::T1: {
            SeriesQ p = trans_disc(u, n);
            SeriesQ sm1 = spoly(n, {Rational(-1), one});
            SeriesQ t1 = (spoly(n, {Rational(0), u}) / (sm1 * p))
                             .scaled(Rational(2, id.beta) - 1);
            SeriesQ rt = spoly(n, {one, Rational(-1)}).sqrt() * p.sqrt();
            SeriesQ t2 = SeriesQ::constant(u + 1, n) / rt + SeriesQ::constant(one, n) / sm1;
            out = t1 + t2.scaled(delta / Rational(2 * id.beta));
            break;
        }
        case GenFunFamily::D2Beta2: {
            require(w != one, "D2Beta2: w = 1 pole");
            out = spoly(n, {Rational(0), Rational(0), w}) / pow52(delay_disc(w, n));
            break;
        }
        case GenFunFamily::T2Beta2Delta:
        case GenFunFamily::DeltaT2Beta2Delta: {
            require(delta > Rational(-2), "T2Beta2Delta: delta <= -2");
            SeriesQ p = trans_disc(u, n);
            SeriesQ om = spoly(n, {one, Rational(-1)});
            if (id.family == GenFunFamily::T2Beta2Delta) {
                SeriesQ num = p.shifted_up().scaled(delta * delta * u) -
                              spoly(n, {Rational(0), Rational(0), 4 * u * u});
                out = num / (pow32(om) * pow52(p)).scaled(Rational(4));
            } else {
                // s(u-1)^2 - (u+1)^2 = -p(s)
                SeriesQ num = spoly(n, {Rational(0), 4 * u * u}) - p.scaled(delta * delta * u);
                out = num / (om.sqrt() * pow52(p)).scaled(Rational(4)) +
                      SeriesQ::constant(delta * delta * u / (4 * (u + 1).pow(3)), n);
            }
            break;
        }
        case GenFunFamily::D2Beta1: {
            require(w != one, "D2Beta1: w = 1 pole");
            SeriesQ q = delay_disc(w, n);
            SeriesQ num1 = spoly(n, {Rational(0), (w - 1) * (w - 1) * (w + 1),
                                     -(2 * w * w - 3 * w + 2), w + 1});
            SeriesQ num2 = spoly(n, {Rational(0), one - w * w, w - 1});
            out = num1 / pow52(q) + num2 / (q * q);
            break;
        }
        case GenFunFamily::T2Beta1Delta0:
        case GenFunFamily::DeltaT2Beta1Delta0: {
            SeriesQ p = trans_disc(u, n);
            SeriesQ om = spoly(n, {one, Rational(-1)});
            SeriesQ core = spoly(n, {-(u + 1) * (u + 1), 3 * u, (u - 1) * (u - 1)});
            if (id.family == GenFunFamily::T2Beta1Delta0) {
                out = (core.shifted_up().scaled(-u)) / (pow52(p) * pow32(om));
            } else {
                out = core.scaled(u) / (pow52(p) * om.sqrt()) +
                      SeriesQ::constant(u / (u + 1).pow(3), n);
            }
            break;
        }
        case GenFunFamily::T2Beta1DeltaConjectured: {
            require(delta > Rational(-2), "conjectured T2: delta <= -2");
            conjecture = true;
            SeriesQ p = trans_disc(u, n);
            SeriesQ om = spoly(n, {one, Rational(-1)});
            SeriesQ sm1 = spoly(n, {Rational(-1), one});
            SeriesQ den_main = pow52(p) * pow32(om);
            SeriesQ core = spoly(n, {-(u + 1) * (u + 1), 3 * u, (u - 1) * (u - 1)});
            SeriesQ t1 = core.shifted_up().scaled(-u) / den_main;
            SeriesQ t2 = SeriesQ::constant(3 * delta * u / (2 * (u + 1).pow(3)), n) / sm1;
            SeriesQ t3 = ((p * p + p.scaled(2 * u * delta)).shifted_up() / den_main)
                             .scaled(delta / Rational(2));
            SeriesQ num4 = spoly(n, {(u + 1) * (u + 1) * (u * u - 5 * u + 1),
                                     -(u - 1) * (u - 1) * (u * u - 4 * u + 1)});
            SeriesQ t4 = (num4.shifted_up() / (sm1 * p * p).scaled(u + 1))
                             .scaled(delta / Rational(2));
            SeriesQ t5 = (spoly(n, {Rational(0), Rational(0), Rational(0), u}) /
                          (sm1 * p * p).scaled((u + 1).pow(3)))
                             .scaled(Rational(-3, 2) * delta * (u - 1).pow(4));
            out = t1 + t2 + t3 + t4 + t5;
            break;
        }
        case GenFunFamily::SelbergH: {
            require(u >= one && id.v >= one, "SelbergH: u, v >= 1 required");
            // H = us/(u+v-(1+u)s) - (1-s)/(u+v-(1+u)s) H^2, iterated from 0;
            // each pass gains one order
            SeriesQ den = spoly(n, {u + id.v, -(one + u)});
            SeriesQ t0 = spoly(n, {Rational(0), u}) / den;
            SeriesQ fac = spoly(n, {one, Rational(-1)}) / den;
            SeriesQ H(n);
            for (std::size_t it = 0; it <= n; ++it) H = t0 - fac * (H * H);
            out = H;
            break;
        }
        default:
            throw UnsupportedFamilyError("genfun_eval: unknown family");
    }
    return GenFunResult{std::move(out), conjecture};
}

} // namespace qtmom
