#pragma once

#include <vector>

#include "resland/gap.hpp"
#include "resland/matcore.hpp"

namespace resland {

/**
 * @brief Polygonal ascent path inside sigma_eps(A) ending near an eigenvalue.
 *
 * Every sampled point of every segment satisfies ||R|| >= floor, where
 * floor = (||R(z)|| + 1/eps)/2 > 1/eps for the start point z, and the last
 * vertex lies within eps/2 of `terminal_eigenvalue`.
 */
struct PolygonalPath {
    double epsilon = 0.0;
    std::vector<Complex> vertices;
    std::vector<double> vertex_norms;
    Complex terminal_eigenvalue;
    double floor = 0.0;
    /// Vertices reached through the circle-search fallback.
    int fallback_steps = 0;
};

struct PathOptions {
    /// Initial step is this fraction of the distance to the spectrum.
    double step_fraction = 0.5;
    double backtrack = 0.5;
    /// min_step = min_step_rel * (1 + |z|)
    double min_step_rel = 1e-9;
    int max_vertices = 10000;
    int segment_samples = 64;
    int fallback_directions = 64;
    double gap_tol = kDefaultGapTol;
};

/// Throws DomainError when z is not in sigma_eps(A), NoGap at a vertex
/// without spectral gap, StallDetected, MaxVertices.
PolygonalPath build_path(const ComplexMatrix& a, Complex z, double epsilon, const PathOptions& opts = {});

/// Re-checks the path invariants with `samples_per_segment` equispaced points
/// per segment (endpoints included).
bool validate_path(const ComplexMatrix& a, const PolygonalPath& path, double epsilon, int samples_per_segment = 64);

} // namespace resland
