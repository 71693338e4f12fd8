"""Exact moments of transmission eigenvalues and proper delay times in
chaotic-cavity quantum transport, with asymptotic coefficients, generating
functions and sampling/quadrature oracles."""

from qtmom._core import (  # noqa: F401
    QtmomError,
    binom_ext,
    delay_coeff,
    gamma_ratio_coeffs,
    gen_bernoulli,
    genfun,
    hyp2f1_terminating,
    jacobi_poly,
    laguerre_pos_leading,
    limiting_moment,
    mc_moment,
    moment_jacobi,
    moment_laguerre_neg,
    moment_selberg_like,
    narayana,
    narayana_poly,
    pochhammer,
    quadrature_moment,
    sample_ensemble,
    selberg_constant,
    selberg_like_coeff,
    trans_coeff,
    trans_diff_coeff,
    verify_suite,
    __version__,
)
