#pragma once

#include <stdexcept>
#include <string>

namespace qtmom {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// argument outside the domain of a special function or formula
struct DomainError : Error {
    using Error::Error;
};

// a gamma-ratio (Pochhammer) evaluation hit a pole
struct PoleError : Error {
    using Error::Error;
};

// 2F1 requested with neither upper parameter a non-positive integer
struct NonTerminatingError : Error {
    using Error::Error;
};

// finite-n formula outside its validity range (n vs k*beta/2 etc.)
struct ValidityRangeError : Error {
    using Error::Error;
};

// odd channel number where the beta=1 Laguerre formulas need even n
struct ParityError : Error {
    using Error::Error;
};

// expansion order the paper does not provide (beta=4 p=2, any p>=3)
struct UnsupportedOrderError : Error {
    using Error::Error;
};

struct UnsupportedFamilyError : Error {
    using Error::Error;
};

// generating-function parameter outside the series' domain (w=1 pole etc.)
struct ParameterDomainError : Error {
    using Error::Error;
};

struct DivisionByZeroSeries : Error {
    using Error::Error;
};

struct NotAPerfectSquareConstant : Error {
    using Error::Error;
};

// (beta, delta) outside the classified symmetry pairs
struct InvalidSymmetryPair : Error {
    using Error::Error;
};

// transmission setting with m < n
struct LeadOrderError : Error {
    using Error::Error;
};

struct NonNormalizableDensity : Error {
    using Error::Error;
};

struct ConvergenceError : Error {
    using Error::Error;
};

// two supposedly equal closed forms disagreed; a formula transcription bug
struct InternalIdentityViolation : Error {
    using Error::Error;
};

} // namespace qtmom
