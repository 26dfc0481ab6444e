#pragma once

#include <span>
#include <vector>

#include "resland/gap.hpp"
#include "resland/matcore.hpp"

namespace resland {

/**
 * @brief Operators of the third-order perturbation argument at a base point z.
 *
 * Everything living on ran P is expressed in the coordinates of the gap
 * report's orthonormal basis, so W and W~ are small Hermitian matrices of
 * size multiplicity x multiplicity.
 */
struct SchurAssembly {
    Complex z;
    Complex zeta;
    CMatrix P;      // n x n projection onto the lambda_max eigenspace of S(z)
    CMatrix Pperp;  // I - P
    CMatrix deltaS; // S(zeta) - S(z)
    CMatrix W;
    CMatrix Wtilde;
};

/**
 * @brief Fixed data at the base point z, reused for every perturbed point.
 *
 * Holds S(z), R(z), an orthonormal basis of ran P (from the gap report) and
 * one of ran P-perp, and the reduced resolvent
 * (lambda_max - P-perp S(z) P-perp)^{-1} restricted to ran P-perp.
 */
class PerturbationBase {
public:
    PerturbationBase(const ComplexMatrix& a, const SpectralGapReport& report);

    /// Computes the gap report itself; throws NoGap.
    PerturbationBase(const ComplexMatrix& a, Complex z, double gap_tol = kDefaultGapTol);

    const ComplexMatrix& matrix() const noexcept { return a_; }
    const SpectralGapReport& report() const noexcept { return report_; }
    const CMatrix& s() const noexcept { return s_; }
    const CMatrix& r() const noexcept { return r_; }
    const CMatrix& range_basis() const noexcept { return range_; }
    const CMatrix& complement_basis() const noexcept { return complement_; }

    /// F(zeta, lambda) on ran P; throws BlockSingular.
    CMatrix schur_complement(Complex zeta, double lambda) const;
    CMatrix w_operator(Complex zeta) const;
    CMatrix w_tilde(Complex zeta) const;
    SchurAssembly assemble(Complex zeta) const;

private:
    CMatrix second_order_term(const CMatrix& delta_s) const;

    ComplexMatrix a_;
    SpectralGapReport report_;
    CMatrix s_;
    CMatrix r_;
    CMatrix range_;
    CMatrix complement_;
    CMatrix reduced_; // (lambda_max I - Q* S Q)^{-1}
};

CMatrix schur_complement(const ComplexMatrix& a, Complex z, Complex zeta, double lambda);
CMatrix w_operator(const ComplexMatrix& a, Complex z, Complex zeta);
CMatrix w_tilde(const ComplexMatrix& a, Complex z, Complex zeta);

/// Max of the two directed sup-min distances; throws EmptySet.
double hausdorff_distance(std::span<const Complex> m, std::span<const Complex> n);
double hausdorff_distance(std::span<const double> m, std::span<const double> n);

/// Log-log least-squares fit of values against radii.
struct OrderFit {
    std::vector<double> radii;
    std::vector<double> values;
    double slope = 0.0;
    /// Number of points above the noise floor that entered the fit.
    int fitted_points = 0;
    /// All values sit at the noise floor: the estimate holds with constant 0
    /// and slope is reported as +inf.
    bool exact = false;
};

/// Fits log(values) ~ slope * log(radii) + c over values above noise_floor.
OrderFit fit_order(std::vector<double> radii, std::vector<double> values, double noise_floor);

struct CubicOrderSweep {
    OrderFit gap;       // |lambda_max(zeta) - ||W(zeta)|||
    OrderFit hausdorff; // d_H(sigma(W) in D, sigma(S(zeta)) in D)
};

/// Sweeps zeta = z + r e^{i angle} over decreasing radii; throws GapLost when
/// the cluster of S(zeta) inside the gap disk stops matching the multiplicity.
CubicOrderSweep cubic_order_sweep(const ComplexMatrix& a, Complex z, double angle, std::span<const double> radii,
                                  double gap_tol = kDefaultGapTol);

} // namespace resland
