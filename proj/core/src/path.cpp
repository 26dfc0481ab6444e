#include "resland/path.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>

#include "resland/errors.hpp"
#include "resland/growth.hpp"

namespace resland {

namespace {

double norm_at(const ComplexMatrix& a, Complex z) { return resolvent_norm(a, z).norm; }

// Nearest eigenvalue closer than eps/2, if any.
std::optional<Complex> eigenvalue_ball(const Spectrum& s, Complex z, double epsilon) {
    std::optional<Complex> best;
    double best_d = epsilon / 2.0;
    for (const Complex& lam : s.eigenvalues) {
        const double d = std::abs(lam - z);
        if (d < best_d) {
            best_d = d;
            best = lam;
        }
    }
    return best;
}

// All interior samples and the endpoint of [x, y] stay at or above floor.
bool segment_feasible(const ComplexMatrix& a, Complex x, Complex y, double floor, int samples) {
    for (int k = 1; k < samples; ++k) {
        const double t = static_cast<double>(k) / (samples - 1);
        if (norm_at(a, x + t * (y - x)) < floor) return false;
    }
    return true;
}

struct Step {
    Complex to;
    double norm;
};

std::optional<Step> line_search(const ComplexMatrix& a, Complex x, double fx, Complex dir, double step,
                                double min_step, double floor, const PathOptions& opts) {
    for (; step >= min_step; step *= opts.backtrack) {
        const Complex y = x + step * dir;
        const double fy = norm_at(a, y);
        if (fy > fx && segment_feasible(a, x, y, floor, opts.segment_samples)) return Step{y, fy};
    }
    return std::nullopt;
}

std::optional<Step> circle_search(const ComplexMatrix& a, Complex x, double fx, double radius, double min_step,
                                  double floor, const PathOptions& opts) {
    for (; radius >= min_step; radius *= opts.backtrack) {
        std::optional<Step> best;
        for (int j = 0; j < opts.fallback_directions; ++j) {
            const Complex y = x + std::polar(radius, 2.0 * std::numbers::pi * j / opts.fallback_directions);
            const double fy = norm_at(a, y);
            if (fy > fx && (!best || fy > best->norm) && segment_feasible(a, x, y, floor, opts.segment_samples))
                best = Step{y, fy};
        }
        if (best) return best;
    }
    return std::nullopt;
}

} // namespace

PolygonalPath build_path(const ComplexMatrix& a, Complex z, double epsilon, const PathOptions& opts) {
    if (!(epsilon > 0.0)) throw DomainError("epsilon must be positive");
    const double fz = norm_at(a, z);
    if (!(fz > 1.0 / epsilon)) throw DomainError("start point is not in the eps-pseudospectrum");

    const Spectrum spec = spectrum(a);
    PolygonalPath path;
    path.epsilon = epsilon;
    path.floor = fz == kInf ? kInf : (fz + 1.0 / epsilon) / 2.0;
    path.vertices.push_back(z);
    path.vertex_norms.push_back(fz);

    const double min_step = opts.min_step_rel * (1.0 + std::abs(z));
    Complex x = z;
    double fx = fz;
    while (true) {
        if (auto lam = eigenvalue_ball(spec, x, epsilon)) {
            path.terminal_eigenvalue = *lam;
            return path;
        }
        if (static_cast<int>(path.vertices.size()) >= opts.max_vertices) {
            throw MaxVertices("path exceeded " + std::to_string(opts.max_vertices) + " vertices");
        }

        const SpectralGapReport report = require_spectral_gap(a, x, opts.gap_tol);
        const GrowthCertificate cert = growth_direction(a, x, report);
        const double dist = distance_to_spectrum(spec, x);

        std::optional<Step> step;
        if (cert.phi) {
            step = line_search(a, x, fx, std::polar(1.0, *cert.phi), opts.step_fraction * dist, min_step,
                               path.floor, opts);
        }
        if (!step) {
            step = circle_search(a, x, fx, dist / 4.0, min_step, path.floor, opts);
            if (!step) {
                std::ostringstream msg;
                msg << "no admissible ascent step from (" << x.real() << ", " << x.imag() << ") after "
                    << path.vertices.size() << " vertices";
                throw StallDetected(msg.str());
            }
            ++path.fallback_steps;
        }
        x = step->to;
        fx = step->norm;
        path.vertices.push_back(x);
        path.vertex_norms.push_back(fx);
    }
}

bool validate_path(const ComplexMatrix& a, const PolygonalPath& path, double epsilon, int samples_per_segment) {
    if (path.vertices.empty() || samples_per_segment < 2) return false;
    const double inv_eps = 1.0 / epsilon;
    if (!(norm_at(a, path.vertices.front()) > inv_eps)) return false;
    if (!(path.floor > inv_eps)) return false;

    for (const Complex& v : path.vertices)
        if (norm_at(a, v) < path.floor) return false;
    for (std::size_t s = 0; s + 1 < path.vertices.size(); ++s) {
        const Complex x = path.vertices[s];
        const Complex y = path.vertices[s + 1];
        for (int k = 0; k < samples_per_segment; ++k) {
            const double t = static_cast<double>(k) / (samples_per_segment - 1);
            if (norm_at(a, x + t * (y - x)) < path.floor) return false;
        }
    }

    const Spectrum spec = spectrum(a);
    if (distance_to_spectrum(spec, path.terminal_eigenvalue) > cluster_tolerance(a.norm())) return false;
    return std::abs(path.vertices.back() - path.terminal_eigenvalue) < epsilon / 2.0;
}

} // namespace resland
