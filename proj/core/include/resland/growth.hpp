#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "resland/gap.hpp"
#include "resland/matcore.hpp"

namespace resland {

enum class GrowthOrder { FirstOrder, SecondOrder, MinCandidate };

std::string_view to_string(GrowthOrder order) noexcept;

/**
 * @brief Direction in which ||R(z + t e^{i phi})|| provably grows.
 *
 * FirstOrder: some unit psi in ran P has <psi, R psi> != 0 and the norm grows
 * linearly along phi = -arg<psi, R psi>. SecondOrder: the compression P R P
 * vanishes, growth is quadratic along phi = -arg<psi, R^2 psi>/2.
 * MinCandidate: both inner products vanish for the chosen psi.
 */
struct GrowthCertificate {
    Complex z;
    GrowthOrder order = GrowthOrder::MinCandidate;
    std::optional<double> phi;
    double eta1 = 0.0; // numerical radius of P R P
    double eta2 = 0.0; // |<psi, R^2 psi>|
    double c2 = 0.0;   // <R psi, S R psi>
    CVector psi;       // unit vector in ran P selecting the direction
};

struct NumericalRadius {
    double radius = 0.0;
    CVector witness; // unit vector with |<w, M w>| = radius (up to sweep accuracy)
};

/// max |<x, M x>| over unit x, by sweeping the top eigenvalue of
/// Re(e^{i theta} M) over `angles` equispaced theta plus a local refinement.
NumericalRadius numerical_radius(const CMatrix& m, int angles = 256);

/// min over theta of lambda_max(Re(e^{i theta} M)); >= 0 iff 0 lies in the
/// (closed) numerical range of M.
double numerical_range_support_min(const CMatrix& m, int angles = 256);

GrowthCertificate growth_direction(const ComplexMatrix& a, Complex z, const SpectralGapReport& report);

struct MinCandidateCheck {
    bool holds = false;
    double prp_norm = 0.0;        // ||P R P||
    bool zero_in_range = false;   // 0 in numerical range of P R^2 P (within tol)
    double range_support = 0.0;   // numerical_range_support_min of P R^2 P
};

/// Both conditions are tested against the absolute tolerance `tol`.
MinCandidateCheck min_candidate_check(const ComplexMatrix& a, Complex z, const SpectralGapReport& report,
                                      double tol);
/// Tolerances 1e-9 ||R(z)|| for condition (i) and 1e-9 ||R(z)||^2 for (ii).
MinCandidateCheck min_candidate_check(const ComplexMatrix& a, Complex z, const SpectralGapReport& report);

struct GrowthVerification {
    double fitted_c = 0.0;
    bool order_ok = false;
    int power = 1;
    std::vector<double> offsets; // |zeta - z|
    std::vector<double> gains;   // ||R(zeta)|| - ||R(z)||
};

/// Largest c with gain >= c |zeta - z|^p at every sample of the segment
/// [z, z + r_max e^{i phi}]. MinCandidate certificates are checked with p = 2
/// on 16 equispaced directions. Throws SegmentHitsSpectrum.
GrowthVerification verify_growth(const ComplexMatrix& a, Complex z, const GrowthCertificate& cert, double r_max,
                                 int n_samples);

/// Default probing radius for verify_growth.
double default_growth_radius(const ComplexMatrix& a, Complex z);

struct LocalMinCertificate {
    bool is_min = false;
    double margin = 0.0;
    double center_norm = 0.0;
};

/// Samples ||R|| at n_angles points on the circles of radius `radius` and
/// radius/2 about z. Throws DiskHitsSpectrum.
LocalMinCertificate certify_local_min(const ComplexMatrix& a, Complex z, double radius, int n_angles);

/// Half-opening of the arcs around the eigenvalue axis along which the 2x2
/// resolvent norm increases away from its center. In (pi/4, pi/2].
double theta_arc(double k);

/// Union of open arcs on the circle, stored as half-open [start, end) pieces
/// normalised to [0, 2 pi).
struct ArcSet {
    std::vector<std::pair<double, double>> arcs;

    /// Arcs ]phi - theta, phi + theta[ and ]phi + pi - theta, phi + pi + theta[.
    static ArcSet increasing_arcs(double phi, double theta);

    bool contains(double angle) const;
    double measure() const;
};

/// True when the arcs ]phi_j - theta_j, phi_j + theta_j[ taken mod pi cover
/// [0, pi), tested on a 1e5-point grid.
bool torus_coverage(std::span<const std::pair<double, double>> pairs);

} // namespace resland
