#pragma once

#include <optional>

#include "resland/matcore.hpp"

namespace resland {

inline constexpr double kDefaultGapTol = 1e-6;

/// Disk |lambda - center| < radius around the isolated top eigenvalue.
struct GapDisk {
    double center = 0.0;
    double radius = 0.0;

    bool contains(double lambda) const noexcept { return std::abs(lambda - center) < radius; }
};

/**
 * @brief Numerical check that the top of sigma(S(z)) is isolated.
 *
 * `basis` holds `multiplicity` orthonormal columns spanning the eigenspace of
 * lambda_max. `a_z` is the largest eigenvalue of S(z) outside that cluster,
 * or 0 when the cluster is the whole spectrum.
 */
struct SpectralGapReport {
    Complex z;
    double lambda_max = 0.0;
    double a_z = 0.0;
    int multiplicity = 0;
    CMatrix basis;
    double gap_ratio = kInf;

    GapDisk disk() const noexcept { return {lambda_max, (lambda_max - a_z) / 2.0}; }
};

/// Eigenvalues of S(z) (ascending) with orthonormal eigenvectors.
struct GramEigen {
    CMatrix s;
    Eigen::VectorXd values;
    CMatrix vectors;
};

GramEigen gram_eigen(const ComplexMatrix& a, Complex z);

/// Empty when the relative gap (lambda_max - a_z)/lambda_max is below gap_tol.
/// Throws SingularPoint when z is an eigenvalue of A.
std::optional<SpectralGapReport> spectral_gap_report(const ComplexMatrix& a, Complex z,
                                                     double gap_tol = kDefaultGapTol);

/// As spectral_gap_report, but throws NoGap instead of returning empty.
SpectralGapReport require_spectral_gap(const ComplexMatrix& a, Complex z, double gap_tol = kDefaultGapTol);

/// Orthogonal projection onto the lambda_max eigenspace.
CMatrix riesz_projection(const SpectralGapReport& report);

} // namespace resland
