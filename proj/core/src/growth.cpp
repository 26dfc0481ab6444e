#include "resland/growth.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "resland/errors.hpp"
#include "resland/twobytwo.hpp"

namespace resland {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct TopEigen {
    double value;
    CVector vector;
};

TopEigen top_of_real_part(const CMatrix& m, double theta) {
    const Complex rot = std::polar(1.0, theta);
    const CMatrix h = (rot * m + std::conj(rot) * m.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
    if (es.info() != Eigen::Success) throw SolverFailure("Hermitian eigensolver failed in numerical range sweep");
    const Eigen::Index last = h.rows() - 1;
    return {es.eigenvalues()(last), es.eigenvectors().col(last)};
}

// Golden-section search for an extremum of f on [lo, hi]; sign = +1 maximises.
double golden_refine(const std::function<double(double)>& f, double lo, double hi, double sign) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = hi - inv_phi * (hi - lo);
    double d = lo + inv_phi * (hi - lo);
    double fc = sign * f(c);
    double fd = sign * f(d);
    for (int it = 0; it < 60 && hi - lo > 1e-13; ++it) {
        if (fc > fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - inv_phi * (hi - lo);
            fc = sign * f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + inv_phi * (hi - lo);
            fd = sign * f(d);
        }
    }
    return fc > fd ? c : d;
}

double wrap_2pi(double angle) {
    double a = std::fmod(angle, kTwoPi);
    if (a < 0.0) a += kTwoPi;
    return a;
}

Complex quadratic_form(const CVector& psi, const CMatrix& m) { return psi.dot(m * psi); }

} // namespace

std::string_view to_string(GrowthOrder order) noexcept {
    switch (order) {
        case GrowthOrder::FirstOrder: return "FirstOrder";
        case GrowthOrder::SecondOrder: return "SecondOrder";
        case GrowthOrder::MinCandidate: return "MinCandidate";
    }
    return "Unknown";
}

NumericalRadius numerical_radius(const CMatrix& m, int angles) {
    NumericalRadius out;
    if (m.rows() == 1) {
        out.radius = std::abs(m(0, 0));
        out.witness = CVector::Ones(1);
        return out;
    }
    auto f = [&](double theta) { return top_of_real_part(m, theta).value; };
    int best = 0;
    double best_value = -kInf;
    for (int j = 0; j < angles; ++j) {
        const double v = f(kTwoPi * j / angles);
        if (v > best_value) {
            best_value = v;
            best = j;
        }
    }
    const double step = kTwoPi / angles;
    const double theta = golden_refine(f, kTwoPi * best / angles - step, kTwoPi * best / angles + step, 1.0);
    const double grid_theta = kTwoPi * best / angles;
    const double chosen = f(theta) >= best_value ? theta : grid_theta;
    out.witness = top_of_real_part(m, chosen).vector;
    out.radius = std::abs(quadratic_form(out.witness, m));
    return out;
}

double numerical_range_support_min(const CMatrix& m, int angles) {
    if (m.rows() == 1) return -std::abs(m(0, 0));
    auto f = [&](double theta) { return top_of_real_part(m, theta).value; };
    int best = 0;
    double best_value = kInf;
    for (int j = 0; j < angles; ++j) {
        const double v = f(kTwoPi * j / angles);
        if (v < best_value) {
            best_value = v;
            best = j;
        }
    }
    const double step = kTwoPi / angles;
    const double theta = golden_refine(f, kTwoPi * best / angles - step, kTwoPi * best / angles + step, -1.0);
    return std::min(best_value, f(theta));
}

GrowthCertificate growth_direction(const ComplexMatrix& a, Complex z, const SpectralGapReport& report) {
    const CMatrix r = resolvent(a, z);
    const CMatrix r2 = r * r;
    const CMatrix& basis = report.basis;
    const double norm_r = std::sqrt(report.lambda_max);

    GrowthCertificate cert;
    cert.z = z;

    const NumericalRadius first = numerical_radius(basis.adjoint() * r * basis);
    cert.eta1 = first.radius;
    if (cert.eta1 > 1e-9 * norm_r) {
        cert.psi = basis * first.witness;
        cert.order = GrowthOrder::FirstOrder;
        cert.phi = -std::arg(quadratic_form(cert.psi, r));
    } else {
        const NumericalRadius second = numerical_radius(basis.adjoint() * r2 * basis);
        cert.psi = basis * second.witness;
        const Complex q2 = quadratic_form(cert.psi, r2);
        if (std::abs(q2) > 1e-9 * report.lambda_max) {
            cert.order = GrowthOrder::SecondOrder;
            cert.phi = -std::arg(q2) / 2.0;
        } else {
            cert.order = GrowthOrder::MinCandidate;
        }
    }
    cert.eta2 = std::abs(quadratic_form(cert.psi, r2));
    cert.c2 = (r2 * cert.psi).squaredNorm();
    return cert;
}

namespace {

MinCandidateCheck check_conditions(const ComplexMatrix& a, Complex z, const SpectralGapReport& report,
                                   double tol_first, double tol_second) {
    const CMatrix r = resolvent(a, z);
    const CMatrix& basis = report.basis;
    MinCandidateCheck out;
    out.prp_norm = operator_norm(basis.adjoint() * r * basis);
    out.range_support = numerical_range_support_min(basis.adjoint() * r * r * basis);
    out.zero_in_range = out.range_support >= -tol_second;
    out.holds = out.prp_norm <= tol_first && out.zero_in_range;
    return out;
}

} // namespace

MinCandidateCheck min_candidate_check(const ComplexMatrix& a, Complex z, const SpectralGapReport& report,
                                      double tol) {
    return check_conditions(a, z, report, tol, tol);
}

MinCandidateCheck min_candidate_check(const ComplexMatrix& a, Complex z, const SpectralGapReport& report) {
    return check_conditions(a, z, report, 1e-9 * std::sqrt(report.lambda_max), 1e-9 * report.lambda_max);
}

double default_growth_radius(const ComplexMatrix& a, Complex z) { return 1e-3 * distance_to_spectrum(a, z); }

GrowthVerification verify_growth(const ComplexMatrix& a, Complex z, const GrowthCertificate& cert, double r_max,
                                 int n_samples) {
    if (!(r_max > 0.0) || n_samples < 1) throw DomainError("verify_growth needs r_max > 0 and n_samples >= 1");
    if (distance_to_spectrum(a, z) <= r_max) {
        throw SegmentHitsSpectrum("segment of length " + std::to_string(r_max) + " reaches the spectrum");
    }
    const double base = resolvent_norm(a, z).norm;

    std::vector<double> directions;
    GrowthVerification out;
    if (cert.order == GrowthOrder::MinCandidate || !cert.phi) {
        out.power = 2;
        for (int j = 0; j < 16; ++j) directions.push_back(kTwoPi * j / 16.0);
    } else {
        out.power = cert.order == GrowthOrder::FirstOrder ? 1 : 2;
        directions.push_back(*cert.phi);
    }

    double c = kInf;
    for (double phi : directions) {
        const Complex dir = std::polar(1.0, phi);
        for (int k = 1; k <= n_samples; ++k) {
            const double t = r_max * k / n_samples;
            const double gain = resolvent_norm(a, z + t * dir).norm - base;
            out.offsets.push_back(t);
            out.gains.push_back(gain);
            c = std::min(c, gain / std::pow(t, out.power));
        }
    }
    out.fitted_c = c;
    out.order_ok = c > 0.0;
    return out;
}

LocalMinCertificate certify_local_min(const ComplexMatrix& a, Complex z, double radius, int n_angles) {
    if (!(radius > 0.0) || n_angles < 1) throw DomainError("certify_local_min needs radius > 0 and n_angles >= 1");
    const double dist = distance_to_spectrum(a, z);
    if (dist <= radius) {
        std::ostringstream msg;
        msg << "disk of radius " << radius << " contains an eigenvalue (distance " << dist << ")";
        throw DiskHitsSpectrum(msg.str());
    }
    LocalMinCertificate out;
    out.center_norm = resolvent_norm(a, z).norm;
    double lowest = kInf;
    for (double rr : {radius, radius / 2.0})
        for (int j = 0; j < n_angles; ++j)
            lowest = std::min(lowest, resolvent_norm(a, z + std::polar(rr, kTwoPi * j / n_angles)).norm);
    out.margin = lowest - out.center_norm;
    out.is_min = out.margin > 0.0;
    return out;
}

double theta_arc(double k) {
    if (!(k >= 2.0)) throw DomainError("theta_arc needs k >= 2");
    return kPi / 2.0 - 0.5 * std::acos(gamma_from_k(k));
}

ArcSet ArcSet::increasing_arcs(double phi, double theta) {
    ArcSet s;
    s.arcs.emplace_back(wrap_2pi(phi - theta), wrap_2pi(phi - theta) + 2.0 * theta);
    s.arcs.emplace_back(wrap_2pi(phi + kPi - theta), wrap_2pi(phi + kPi - theta) + 2.0 * theta);
    return s;
}

bool ArcSet::contains(double angle) const {
    for (const auto& [start, end] : arcs) {
        const double d = wrap_2pi(angle - start);
        if (d > 0.0 && d < end - start) return true;
    }
    return false;
}

double ArcSet::measure() const {
    double total = 0.0;
    for (const auto& [start, end] : arcs) total += end - start;
    return std::min(total, kTwoPi);
}

bool torus_coverage(std::span<const std::pair<double, double>> pairs) {
    for (const auto& [phi, theta] : pairs) {
        if (!(theta > kPi / 4.0 - 1e-12 && theta <= kPi / 2.0 + 1e-12)) {
            throw DomainError("arc half-width must lie in (pi/4, pi/2]");
        }
    }
    constexpr int kGrid = 100000;
    const double spacing = kPi / kGrid;
    std::vector<double> uncovered;
    for (int i = 0; i < kGrid; ++i) {
        const double x = spacing * i;
        bool covered = false;
        for (const auto& [phi, theta] : pairs) {
            if (std::abs(std::remainder(x - phi, kPi)) < theta) {
                covered = true;
                break;
            }
        }
        if (!covered) {
            uncovered.push_back(x);
            if (uncovered.size() > 2) return false;
        }
    }
    // A half-width pi/2 arc misses exactly one direction mod pi, where it
    // meets its own pi-shifted copy; that measure-zero gap is accepted.
    for (double x : uncovered) {
        bool at_shared_endpoint = false;
        for (const auto& [phi, theta] : pairs) {
            if (theta >= kPi / 2.0 - 1e-12 &&
                std::abs(std::remainder(x - (phi + kPi / 2.0), kPi)) <= 2.0 * spacing) {
                at_shared_endpoint = true;
            }
        }
        if (!at_shared_endpoint) return false;
    }
    return true;
}

} // namespace resland
