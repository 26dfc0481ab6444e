#pragma once

#include <complex>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace resland {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/**
 * @brief Dense square complex matrix with validated, immutable contents.
 *
 * Construction checks that the matrix is square, non-empty and finite.
 * The spectral norm is computed once and cached since most tolerances in
 * the library scale with it.
 */
class ComplexMatrix {
public:
    explicit ComplexMatrix(CMatrix entries);

    /// Builds from a row-major list of n*n entries.
    static ComplexMatrix from_row_major(std::size_t n, std::span<const Complex> entries);

    std::size_t n() const noexcept { return static_cast<std::size_t>(m_.rows()); }
    const CMatrix& data() const noexcept { return m_; }
    Complex operator()(std::size_t i, std::size_t j) const {
        return m_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }

    /// Largest singular value.
    double norm() const noexcept { return norm_; }

    std::vector<Complex> row_major() const;

private:
    CMatrix m_;
    double norm_ = 0.0;
};

/// Distinct eigenvalues with algebraic multiplicities.
struct Spectrum {
    std::vector<Complex> eigenvalues;
    std::vector<int> multiplicities;

    std::size_t distinct() const noexcept { return eigenvalues.size(); }
};

/// Smallest singular value of A - zI and the matching resolvent norm.
struct ResolventValue {
    Complex z;
    double smin = 0.0;
    double norm = kInf; // 1/smin, infinite inside the spectrum

    bool singular() const noexcept { return norm == kInf; }
};

/// Eigenvalues closer than this are merged into one cluster.
double cluster_tolerance(double spectral_radius);

/// smin(A - zI) below this value means z is treated as an eigenvalue.
double singularity_tolerance(const ComplexMatrix& a, Complex z);

Spectrum spectrum(const ComplexMatrix& a);

double smallest_singular_value(const ComplexMatrix& a, Complex z);

ResolventValue resolvent_norm(const ComplexMatrix& a, Complex z);

/// (A - zI)^{-1}; throws SingularPoint inside the spectrum.
CMatrix resolvent(const ComplexMatrix& a, Complex z);

/// S(z) = R(z)^* R(z), Hermitian positive definite.
CMatrix gram(const ComplexMatrix& a, Complex z);

double distance_to_spectrum(const Spectrum& s, Complex z);
double distance_to_spectrum(const ComplexMatrix& a, Complex z);

/// ||A A^* - A^* A|| <= rel_tol * ||A||^2
bool is_normal(const ComplexMatrix& a, double rel_tol = 1e-12);

/// Spectral norm of an arbitrary dense matrix.
double operator_norm(const CMatrix& m);

} // namespace resland
