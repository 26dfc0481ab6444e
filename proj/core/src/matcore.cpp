#include "resland/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "resland/errors.hpp"

namespace resland {

double operator_norm(const CMatrix& m) {
    if (m.size() == 0) return 0.0;
    Eigen::BDCSVD<CMatrix> svd(m);
    return svd.singularValues()(0);
}

ComplexMatrix::ComplexMatrix(CMatrix entries) : m_(std::move(entries)) {
    if (m_.rows() < 1 || m_.rows() != m_.cols()) {
        throw DomainError("matrix must be square with n >= 1, got " + std::to_string(m_.rows()) + "x" +
                          std::to_string(m_.cols()));
    }
    if (!m_.allFinite()) throw DomainError("matrix has non-finite entries");
    norm_ = operator_norm(m_);
}

ComplexMatrix ComplexMatrix::from_row_major(std::size_t n, std::span<const Complex> entries) {
    if (n == 0) throw DomainError("matrix dimension must be positive");
    if (entries.size() != n * n) {
        throw DomainError("expected " + std::to_string(n * n) + " entries, got " + std::to_string(entries.size()));
    }
    const auto nn = static_cast<Eigen::Index>(n);
    CMatrix m(nn, nn);
    for (Eigen::Index i = 0; i < nn; ++i)
        for (Eigen::Index j = 0; j < nn; ++j) m(i, j) = entries[static_cast<std::size_t>(i * nn + j)];
    return ComplexMatrix(std::move(m));
}

std::vector<Complex> ComplexMatrix::row_major() const {
    std::vector<Complex> out;
    out.reserve(static_cast<std::size_t>(m_.size()));
    for (Eigen::Index i = 0; i < m_.rows(); ++i)
        for (Eigen::Index j = 0; j < m_.cols(); ++j) out.push_back(m_(i, j));
    return out;
}

double cluster_tolerance(double spectral_radius) { return 1e-8 * (1.0 + spectral_radius); }

double singularity_tolerance(const ComplexMatrix& a, Complex z) { return 1e-14 * (1.0 + a.norm() + std::abs(z)); }

Spectrum spectrum(const ComplexMatrix& a) {
    Eigen::ComplexEigenSolver<CMatrix> es(a.data(), /*computeEigenvectors=*/false);
    if (es.info() != Eigen::Success) throw SolverFailure("eigenvalue solver did not converge");
    const CVector& ev = es.eigenvalues();
    const auto n = static_cast<std::size_t>(ev.size());

    double radius = 0.0;
    for (Eigen::Index i = 0; i < ev.size(); ++i) radius = std::max(radius, std::abs(ev(i)));
    const double tol = cluster_tolerance(radius);

    // single-linkage clustering
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(ev(static_cast<Eigen::Index>(i)) - ev(static_cast<Eigen::Index>(j))) <= tol)
                parent[find(i)] = find(j);

    std::vector<std::size_t> roots;
    std::vector<Complex> sums;
    std::vector<int> counts;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t r = find(i);
        auto it = std::find(roots.begin(), roots.end(), r);
        if (it == roots.end()) {
            roots.push_back(r);
            sums.push_back(ev(static_cast<Eigen::Index>(i)));
            counts.push_back(1);
        } else {
            const auto k = static_cast<std::size_t>(it - roots.begin());
            sums[k] += ev(static_cast<Eigen::Index>(i));
            ++counts[k];
        }
    }

    Spectrum s;
    for (std::size_t k = 0; k < roots.size(); ++k) {
        s.eigenvalues.push_back(sums[k] / static_cast<double>(counts[k]));
        s.multiplicities.push_back(counts[k]);
    }
    return s;
}

double smallest_singular_value(const ComplexMatrix& a, Complex z) {
    CMatrix shifted = a.data();
    shifted.diagonal().array() -= z;
    Eigen::BDCSVD<CMatrix> svd(shifted);
    return svd.singularValues()(shifted.rows() - 1);
}

ResolventValue resolvent_norm(const ComplexMatrix& a, Complex z) {
    ResolventValue rv;
    rv.z = z;
    rv.smin = smallest_singular_value(a, z);
    rv.norm = rv.smin <= singularity_tolerance(a, z) ? kInf : 1.0 / rv.smin;
    return rv;
}

CMatrix resolvent(const ComplexMatrix& a, Complex z) {
    if (resolvent_norm(a, z).singular()) throw SingularPoint("z lies in the spectrum of A");
    CMatrix shifted = a.data();
    shifted.diagonal().array() -= z;
    return shifted.partialPivLu().inverse();
}

CMatrix gram(const ComplexMatrix& a, Complex z) {
    const CMatrix r = resolvent(a, z);
    CMatrix s = r.adjoint() * r;
    // symmetrize away rounding so downstream Hermitian solvers see exact symmetry
    return (s + s.adjoint()) / 2.0;
}

double distance_to_spectrum(const Spectrum& s, Complex z) {
    double d = kInf;
    for (const Complex& lam : s.eigenvalues) d = std::min(d, std::abs(lam - z));
    return d;
}

double distance_to_spectrum(const ComplexMatrix& a, Complex z) { return distance_to_spectrum(spectrum(a), z); }

bool is_normal(const ComplexMatrix& a, double rel_tol) {
    const CMatrix& m = a.data();
    const CMatrix comm = m * m.adjoint() - m.adjoint() * m;
    return operator_norm(comm) <= rel_tol * a.norm() * a.norm();
}

} // namespace resland
