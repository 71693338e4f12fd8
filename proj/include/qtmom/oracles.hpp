#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "qtmom/moments.hpp"
#include "qtmom/rational.hpp"

namespace qtmom {

// Counter-derived splitmix64 stream; every draw gets an independent,
// reproducible substream so Monte Carlo parallelizes deterministically.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    static Rng stream(std::uint64_t root_seed, std::uint64_t index);

    std::uint64_t next_u64();
    double uniform();                // (0,1)
    double normal();
    double gamma(double shape);      // shape > 0, scale 1
    double chi_squared(double dof);
    double beta(double a, double b);

  private:
    std::uint64_t state_;
};

enum class SamplerKind { Jacobi, Laguerre };

struct EigenSample {
    std::vector<double> values;  // ascending
    std::uint64_t seed = 0;
    SamplerKind kind = SamplerKind::Jacobi;
    int beta = 2;
    Rational a, b;
};

// One draw of the n eigenvalues via the tridiagonal beta-ensemble models
// (bidiagonal chi for Laguerre, beta-distributed canonical coordinates for
// Jacobi). Deterministic per (seed, params).
EigenSample sample_ensemble(SamplerKind kind, int beta, long n, const Rational& a,
                            const Rational& b, std::uint64_t seed);

struct MCEstimate {
    double mean = 0;
    double stderr_ = 0;
    long n_samples = 0;
    std::uint64_t seed = 0;
};

// Monte Carlo estimate of <sum_j x_j^k> (k may be negative).
MCEstimate mc_moment(SamplerKind kind, int beta, long k, long n, const Rational& a,
                     const Rational& b, long n_samples, std::uint64_t seed);

// Adaptive tanh-sinh quadrature of f on (0,1); f receives (x, 1-x) so
// endpoint-singular weights stay accurate. Throws ConvergenceError.
long double tanh_sinh(const std::function<long double(long double, long double)>& f,
                      long double tol);

// Direct n-fold integration (n <= 3) of the ensemble densities.
double quadrature_moment(SamplerKind kind, int beta, long k, long n, const Rational& a,
                         const Rational& b, double tol = 1e-12);

struct SupportInterval {
    double lower = 0;
    double upper = 0;
};

enum class LimitingKind { MarchenkoPastur, JacobiLimit };

SupportInterval marchenko_pastur_support(const Rational& w);
SupportInterval jacobi_limit_support(const Rational& u, const Rational& v);

// MarchenkoPastur: int x^k rho_MP(x) dx (k may be negative, needs w > 1).
// JacobiLimit: the difference moment int x^k (1-x) rho_inf(x) dx.
double limiting_moment(LimitingKind kind, long k, const Rational& u_or_w,
                       const Rational& v = Rational(1));

// ---- distribution helpers for the sampler tests ----
double regularized_gamma_p(double a, double x);
double regularized_beta(double a, double b, double x);

// Kolmogorov-Smirnov p-value of `values` against a CDF.
double ks_test_pvalue(std::vector<double> values, const std::function<double(double)>& cdf);

} // namespace qtmom
