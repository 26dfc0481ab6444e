#pragma once

#include <stdexcept>
#include <string>

namespace resland {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on the mathematical input does not hold (bad parameter,
/// invalid matrix, k < 2, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// The point z lies in the spectrum of A (within the singularity tolerance).
class SingularPoint : public DomainError {
public:
    using DomainError::DomainError;
};

/// Assumption of an isolated top eigenvalue of S(z) fails numerically.
class NoGap : public DomainError {
public:
    NoGap(const std::string& what, double lambda_max, double a_z)
        : DomainError(what), lambda_max_(lambda_max), a_z_(a_z) {}

    double lambda_max() const noexcept { return lambda_max_; }
    double a_z() const noexcept { return a_z_; }

private:
    double lambda_max_;
    double a_z_;
};

/// The compression of S(zeta) - lambda to ran P-perp is not invertible.
class BlockSingular : public DomainError {
public:
    using DomainError::DomainError;
};

/// The spectral gap closes somewhere along a radius sweep.
class GapLost : public DomainError {
public:
    using DomainError::DomainError;
};

class SegmentHitsSpectrum : public DomainError {
public:
    using DomainError::DomainError;
};

class DiskHitsSpectrum : public DomainError {
public:
    using DomainError::DomainError;
};

class EmptySet : public DomainError {
public:
    using DomainError::DomainError;
};

/// Path construction found no admissible step: the line search along the
/// certified direction underflowed and the circle-search fallback failed too.
class StallDetected : public DomainError {
public:
    using DomainError::DomainError;
};

class MaxVertices : public DomainError {
public:
    using DomainError::DomainError;
};

/// A dense eigen/singular value solver did not converge.
class SolverFailure : public Error {
public:
    using Error::Error;
};

/// Malformed input text (matrix files, complex literals, option lists).
class ParseError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

} // namespace resland
