#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "resland/matcore.hpp"

namespace resland {

/// Rectangle [re_min, re_max] x [im_min, im_max] sampled at nx x ny points
/// (grid includes both edges).
struct Region {
    double re_min = -1.0;
    double re_max = 1.0;
    double im_min = -1.0;
    double im_max = 1.0;
    std::size_t nx = 256;
    std::size_t ny = 256;

    /// Throws DomainError on an empty rectangle or fewer than 2 samples per axis.
    void validate() const;

    double dx() const noexcept { return (re_max - re_min) / static_cast<double>(nx - 1); }
    double dy() const noexcept { return (im_max - im_min) / static_cast<double>(ny - 1); }
    Complex point(std::size_t i, std::size_t j) const noexcept {
        return {re_min + static_cast<double>(i) * dx(), im_min + static_cast<double>(j) * dy()};
    }
};

/// Smallest singular values of A - zI on a Region. Values are stored row by
/// row along the imaginary axis: smin[j * nx + i] belongs to point(i, j).
struct PseudospectrumGrid {
    Region region;
    std::vector<double> smin;
    /// Points where the SVD failed (their value is NaN).
    std::size_t failures = 0;

    double at(std::size_t i, std::size_t j) const noexcept { return smin[j * region.nx + i]; }
};

/// Rows are distributed over hardware threads; results do not depend on the
/// thread count.
PseudospectrumGrid scan(const ComplexMatrix& a, const Region& region);

/// z in sigma_eps(A), i.e. smin(A - zI) < eps. Throws DomainError for eps <= 0.
bool membership(const ComplexMatrix& a, Complex z, double epsilon);

struct Polyline {
    double level = 0.0;
    std::vector<Complex> points;
    bool closed = false;
};

/// Marching-squares isolines of smin at each level.
std::vector<Polyline> contours(const PseudospectrumGrid& grid, std::span<const double> levels);

struct ComponentReport {
    double epsilon = 0.0;
    int n_components = 0;
    std::vector<std::vector<Complex>> eigenvalues_per_component;
    std::vector<int> holes_per_component;
    /// Eigenvalues that fall outside the scanned region.
    std::vector<Complex> outside_region;

    int total_holes() const noexcept;
};

/// 4-connected components of the cells with smin < eps; holes are bounded
/// 8-connected components of the complement.
ComponentReport components(const ComplexMatrix& a, const PseudospectrumGrid& grid, double epsilon);

/// Cell labelling used by components(); label -1 marks cells outside the set.
std::vector<int> label_sublevel_set(const PseudospectrumGrid& grid, double epsilon, int& n_labels);

} // namespace resland
