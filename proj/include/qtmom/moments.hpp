#pragma once

#include <optional>
#include <set>
#include <string>

#include "qtmom/bigfloat.hpp"
#include "qtmom/rational.hpp"

namespace qtmom {

// Symmetry class (beta, delta). delta = 0 are the Dyson classes; the
// nonzero-delta pairs are the Andreev classes.
struct SymmetryClass {
    int beta = 2;
    int delta = 0;

    static SymmetryClass make(int beta, int delta);  // throws InvalidSymmetryPair
    bool is_andreev() const { return delta != 0; }
};

bool is_physical_symmetry_pair(int beta, int delta);

enum class EnsembleKind { JacobiTransmission, LaguerreDelay, SelbergLike };

struct EnsembleParams {
    EnsembleKind kind = EnsembleKind::JacobiTransmission;
    int beta = 2;
    long n = 1;
    std::optional<long> m;  // second lead, transmission only
    Rational a;             // Jacobi (1-x) exponent parameter
    Rational b;             // Jacobi x / Laguerre parameter
    std::optional<Rational> u, v, w;
};

// a = (2/beta)(1 + delta/2) - 1, b = m - n, u = m/n
EnsembleParams map_transmission(const SymmetryClass& cls, long n, long m);
// b = n(w-1) + 2/beta - 1; w = 2 recovers the physical delay times
EnsembleParams map_delay(int beta, long n, const Rational& w);
// a = (v-1)n, b = (u-1)n
EnsembleParams map_selberg_like(int beta, long n, const Rational& u, const Rational& v);

enum class ApproximationFlag { OmittedPhiTerm };

struct MomentResult {
    Rational value;
    std::string formula;  // identifier of the closed form used
    std::set<ApproximationFlag> flags;

    bool omitted_phi() const { return flags.count(ApproximationFlag::OmittedPhiTerm) > 0; }
};

// <sum_j x_j^k> over the Jacobi density with exponent parameters (a, b).
// Validity: k = 1 always (Aomoto); k >= 2 needs n >= k*beta/2.
MomentResult moment_jacobi(int beta, long k, long n, const Rational& a, const Rational& b);

// <sum_j x_j^{-k}> over the Laguerre density. Requires k < n*beta/2 + 1; for
// beta = 1 also even n, and the result omits the exponentially small phi
// term (flagged).
MomentResult moment_laguerre_neg(int beta, long k, long n, const Rational& b);

// Selberg-like average: moment_jacobi at a = (v-1)n, b = (u-1)n.
MomentResult moment_selberg_like(int beta, long k, long n, const Rational& u, const Rational& v);

// Selberg's normalization constant C_n(beta, a, b) by lngamma accumulation.
BigFloat selberg_constant(int beta, const Rational& a, const Rational& b, long n);

// Laguerre-side normalization (same weight convention as the delay density);
// used only by the quadrature oracle.
BigFloat laguerre_norm_constant(int beta, const Rational& b, long n);

// Sum of the signed Pochhammer subscripts in the U-coefficient of the
// beta = 2 difference formula; identically 1, independent of j.
long u_coeff_n_exponent(long k, long j);

} // namespace qtmom
