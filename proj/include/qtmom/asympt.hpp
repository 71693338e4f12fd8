#pragma once

#include <vector>

#include "qtmom/rational.hpp"

namespace qtmom {

struct CoeffResult {
    Rational value;
    bool conjecture = false;
};

// D_{k,p}^{(beta)}(w), p = 0,1,2. (beta=4, p=2) and p >= 3 are unsupported.
Rational delay_coeff(int beta, long k, int p, const Rational& w);

// Delta T_{k,p}^{(beta,delta)}(u) and T_{k,p}^{(beta,delta)}(u).
// delta is a generic rational > -2; the (beta=1, delta != 0, p=2) route is
// the conjectured generating function and is flagged.
CoeffResult trans_diff_coeff(int beta, const Rational& delta, long k, int p, const Rational& u);
CoeffResult trans_coeff(int beta, const Rational& delta, long k, int p, const Rational& u);

// T_{1,p} from the expansion of Aomoto's integral
Rational trans_first_moment_coeff(int beta, const Rational& delta, int p, const Rational& u);

// M_{k,p}^{(beta)}(u,v) for p = 0,1; p = 0 is beta-independent.
Rational selberg_like_coeff(int beta, long k, int p, const Rational& u, const Rational& v);
// Delta M_{k,0}(u,v), the difference coefficients (Narayana form)
Rational selberg_like_diff_coeff(long k, const Rational& u, const Rational& v);

// Leading positive Laguerre moment, computed by both the Narayana sum and
// the Novaes/Coker form; throws InternalIdentityViolation if they disagree.
Rational laguerre_pos_leading(long k, const Rational& w);

// ---- identity layer (verify suites and dual routes) ----

// Novaes closed form for T_{k,0}
Rational trans_leading_novaes(long k, const Rational& u);
Rational laguerre_pos_leading_narayana(long k, const Rational& w);
Rational laguerre_pos_leading_novaes(long k, const Rational& w);

// Chu-Vandermonde kernels sum_{i=1..j} (...) i^p, p in {0,1,2}
Rational chu_jacobi_brute(long k, long j, int p);
Rational chu_jacobi_closed(long k, long j, int p);
Rational chu_laguerre_brute(long k, long j, int p);
Rational chu_laguerre_closed(long k, long j, int p);

bool coker_first_holds(long k, const Rational& w);
bool coker_second_holds(long k, const Rational& u);
bool floor_ceiling_holds(long k, const Rational& u);

// Delta T_{k,2}^{(2,delta)}(u) through the explicit F-polynomial sum
Rational trans_diff_second_b2_fsum(long k, const Rational& u, const Rational& delta);
// Delta T_{k,2}^{(2,0)}(u) through the Jacobi-polynomial Taylor-coefficient form
Rational trans_diff_second_b2_delta0_jacobi_route(long k, const Rational& u);
// D_{k,2}^{(1)}(w) through the Jacobi-polynomial combination
Rational delay_second_b1_jacobi_route(long k, const Rational& w);

// ---- empirical remainder analysis ----

enum class ScanTarget { Delay, Transmission };

struct RemainderRow {
    long n;
    Rational remainder;         // exact: finite-n scaled moment minus p<=2 terms
    Rational scaled_remainder;  // remainder * n^3
};

std::vector<RemainderRow> remainder_scan(ScanTarget target, int beta, const Rational& delta,
                                         long k, const Rational& param,
                                         const std::vector<long>& n_list);

} // namespace qtmom
