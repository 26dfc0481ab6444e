#include "resland/gap.hpp"

#include <sstream>

#include "resland/errors.hpp"

namespace resland {

namespace {

struct GapProbe {
    GramEigen eig;
    double lambda_max = 0.0;
    double a_z = 0.0;
    int multiplicity = 0;
};

GapProbe probe(const ComplexMatrix& a, Complex z) {
    GapProbe p;
    p.eig = gram_eigen(a, z);
    const Eigen::Index n = p.eig.values.size();
    p.lambda_max = p.eig.values(n - 1);
    const double tol = cluster_tolerance(p.lambda_max);
    p.multiplicity = 1;
    while (p.multiplicity < n && p.lambda_max - p.eig.values(n - 1 - p.multiplicity) <= tol) ++p.multiplicity;
    p.a_z = p.multiplicity < n ? std::max(0.0, p.eig.values(n - 1 - p.multiplicity)) : 0.0;
    return p;
}

} // namespace

GramEigen gram_eigen(const ComplexMatrix& a, Complex z) {
    GramEigen g;
    g.s = gram(a, z);
    Eigen::SelfAdjointEigenSolver<CMatrix> es(g.s);
    if (es.info() != Eigen::Success) throw SolverFailure("Hermitian eigensolver failed on S(z)");
    g.values = es.eigenvalues();
    g.vectors = es.eigenvectors();
    return g;
}

std::optional<SpectralGapReport> spectral_gap_report(const ComplexMatrix& a, Complex z, double gap_tol) {
    GapProbe p = probe(a, z);
    if ((p.lambda_max - p.a_z) / p.lambda_max < gap_tol) return std::nullopt;

    SpectralGapReport r;
    r.z = z;
    r.lambda_max = p.lambda_max;
    r.a_z = p.a_z;
    r.multiplicity = p.multiplicity;
    r.basis = p.eig.vectors.rightCols(p.multiplicity);
    r.gap_ratio = p.a_z > 0.0 ? p.lambda_max / p.a_z : kInf;
    return r;
}

SpectralGapReport require_spectral_gap(const ComplexMatrix& a, Complex z, double gap_tol) {
    if (auto r = spectral_gap_report(a, z, gap_tol)) return *std::move(r);
    GapProbe p = probe(a, z);
    std::ostringstream msg;
    msg << "no spectral gap at z = (" << z.real() << ", " << z.imag() << "): lambda_max = " << p.lambda_max
        << ", a(z) = " << p.a_z << ", relative gap below " << gap_tol;
    throw NoGap(msg.str(), p.lambda_max, p.a_z);
}

CMatrix riesz_projection(const SpectralGapReport& report) { return report.basis * report.basis.adjoint(); }

} // namespace resland
