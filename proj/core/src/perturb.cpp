#include "resland/perturb.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "resland/errors.hpp"

namespace resland {

namespace {

CMatrix hermitian_part(const CMatrix& m) { return (m + m.adjoint()) / 2.0; }

// (lambda I - H)^{-1} for Hermitian H, with the gap-scaled singularity test.
CMatrix inverse_shifted_block(const CMatrix& h, double lambda, double scale) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian_part(h));
    if (es.info() != Eigen::Success) throw SolverFailure("Hermitian eigensolver failed on the P-perp block");
    const Eigen::VectorXd shifted = (lambda - es.eigenvalues().array()).matrix();
    const double smallest = shifted.cwiseAbs().minCoeff();
    if (smallest <= 1e-12 * scale) {
        std::ostringstream msg;
        msg << "P-perp block not invertible: smallest |eigenvalue| " << smallest << " at lambda = " << lambda;
        throw BlockSingular(msg.str());
    }
    return es.eigenvectors() * shifted.cwiseInverse().asDiagonal() * es.eigenvectors().adjoint();
}

std::vector<double> eigenvalues_in_disk(const Eigen::VectorXd& values, const GapDisk& disk) {
    std::vector<double> out;
    for (Eigen::Index i = 0; i < values.size(); ++i)
        if (disk.contains(values(i))) out.push_back(values(i));
    return out;
}

} // namespace

PerturbationBase::PerturbationBase(const ComplexMatrix& a, const SpectralGapReport& report)
    : a_(a), report_(report) {
    s_ = gram(a_, report_.z);
    r_ = resolvent(a_, report_.z);
    range_ = report_.basis;

    const Eigen::Index n = static_cast<Eigen::Index>(a_.n());
    const Eigen::Index m = range_.cols();
    if (m < n) {
        Eigen::HouseholderQR<CMatrix> qr(range_);
        const CMatrix q = qr.householderQ() * CMatrix::Identity(n, n);
        complement_ = q.rightCols(n - m);
        reduced_ = inverse_shifted_block(complement_.adjoint() * s_ * complement_, report_.lambda_max,
                                         report_.lambda_max);
    } else {
        complement_ = CMatrix(n, 0);
        reduced_ = CMatrix(0, 0);
    }
}

PerturbationBase::PerturbationBase(const ComplexMatrix& a, Complex z, double gap_tol)
    : PerturbationBase(a, require_spectral_gap(a, z, gap_tol)) {}

CMatrix PerturbationBase::second_order_term(const CMatrix& delta_s) const {
    const Eigen::Index m = range_.cols();
    if (complement_.cols() == 0) return CMatrix::Zero(m, m);
    const CMatrix off = complement_.adjoint() * delta_s * range_; // P-perp dS P
    return off.adjoint() * reduced_ * off;
}

CMatrix PerturbationBase::schur_complement(Complex zeta, double lambda) const {
    const CMatrix s_zeta = gram(a_, zeta);
    const Eigen::Index m = range_.cols();
    CMatrix f = range_.adjoint() * s_zeta * range_ - lambda * CMatrix::Identity(m, m);
    if (complement_.cols() > 0) {
        const CMatrix block = complement_.adjoint() * s_zeta * complement_;
        const CMatrix inv = inverse_shifted_block(block, lambda, report_.lambda_max);
        const CMatrix off = complement_.adjoint() * s_zeta * range_;
        f += off.adjoint() * inv * off;
    }
    return hermitian_part(f);
}

CMatrix PerturbationBase::w_operator(Complex zeta) const {
    const CMatrix delta_s = gram(a_, zeta) - s_;
    const Eigen::Index m = range_.cols();
    CMatrix w = report_.lambda_max * CMatrix::Identity(m, m) + range_.adjoint() * delta_s * range_ +
                second_order_term(delta_s);
    return hermitian_part(w);
}

CMatrix PerturbationBase::w_tilde(Complex zeta) const {
    const Complex d = zeta - report_.z;
    const Eigen::Index m = range_.cols();
    const double lam = report_.lambda_max;

    const CMatrix rb = r_ * range_;
    const CMatrix prp = range_.adjoint() * rb;        // P R P
    const CMatrix pr2p = range_.adjoint() * r_ * rb;  // P R^2 P
    const CMatrix prsrp = rb.adjoint() * s_ * rb;     // P R* S R P

    CMatrix wt = lam * CMatrix::Identity(m, m);
    wt += lam * d * prp + lam * std::conj(d) * prp.adjoint();
    wt += lam * d * d * pr2p + lam * std::conj(d * d) * pr2p.adjoint();
    wt += std::norm(d) * prsrp;
    wt += second_order_term(gram(a_, zeta) - s_);
    return hermitian_part(wt);
}

SchurAssembly PerturbationBase::assemble(Complex zeta) const {
    SchurAssembly out;
    out.z = report_.z;
    out.zeta = zeta;
    out.P = riesz_projection(report_);
    out.Pperp = CMatrix::Identity(out.P.rows(), out.P.cols()) - out.P;
    out.deltaS = gram(a_, zeta) - s_;
    out.W = w_operator(zeta);
    out.Wtilde = w_tilde(zeta);
    return out;
}

CMatrix schur_complement(const ComplexMatrix& a, Complex z, Complex zeta, double lambda) {
    return PerturbationBase(a, z).schur_complement(zeta, lambda);
}

CMatrix w_operator(const ComplexMatrix& a, Complex z, Complex zeta) { return PerturbationBase(a, z).w_operator(zeta); }

CMatrix w_tilde(const ComplexMatrix& a, Complex z, Complex zeta) { return PerturbationBase(a, z).w_tilde(zeta); }

namespace {

template <typename T>
double directed(std::span<const T> from, std::span<const T> to) {
    double worst = 0.0;
    for (const T& x : from) {
        double best = kInf;
        for (const T& y : to) best = std::min(best, std::abs(x - y));
        worst = std::max(worst, best);
    }
    return worst;
}

template <typename T>
double hausdorff_impl(std::span<const T> m, std::span<const T> n) {
    if (m.empty() || n.empty()) throw EmptySet("Hausdorff distance needs two non-empty sets");
    return std::max(directed(m, n), directed(n, m));
}

} // namespace

double hausdorff_distance(std::span<const Complex> m, std::span<const Complex> n) { return hausdorff_impl(m, n); }

double hausdorff_distance(std::span<const double> m, std::span<const double> n) { return hausdorff_impl(m, n); }

OrderFit fit_order(std::vector<double> radii, std::vector<double> values, double noise_floor) {
    if (radii.size() != values.size() || radii.size() < 2) {
        throw DomainError("order fit needs at least two (radius, value) pairs");
    }
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (!(radii[i] > 0.0)) throw DomainError("radii must be positive");
        if (i > 0 && !(radii[i] < radii[i - 1])) throw DomainError("radii must be strictly decreasing");
        if (!std::isfinite(values[i]) || values[i] < 0.0) throw DomainError("values must be finite and >= 0");
    }

    OrderFit fit;
    fit.radii = std::move(radii);
    fit.values = std::move(values);

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int k = 0;
    for (std::size_t i = 0; i < fit.radii.size(); ++i) {
        if (fit.values[i] <= noise_floor) continue;
        const double x = std::log(fit.radii[i]);
        const double y = std::log(fit.values[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++k;
    }
    fit.fitted_points = k;
    if (k < 2) {
        fit.exact = true;
        fit.slope = kInf;
        return fit;
    }
    fit.slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
    return fit;
}

CubicOrderSweep cubic_order_sweep(const ComplexMatrix& a, Complex z, double angle, std::span<const double> radii,
                                  double gap_tol) {
    const PerturbationBase base(a, z, gap_tol);
    const SpectralGapReport& rep = base.report();
    const GapDisk disk = rep.disk();
    const Complex dir = std::polar(1.0, angle);

    std::vector<double> gap_values;
    std::vector<double> hd_values;
    for (double r : radii) {
        const Complex zeta = z + r * dir;
        const GramEigen ge = gram_eigen(a, zeta);
        const std::vector<double> s_in = eigenvalues_in_disk(ge.values, disk);
        const double lambda_zeta = ge.values(ge.values.size() - 1);
        if (static_cast<int>(s_in.size()) != rep.multiplicity || !disk.contains(lambda_zeta)) {
            std::ostringstream msg;
            msg << "spectral gap lost at radius " << r << ": " << s_in.size()
                << " eigenvalues of S(zeta) in the gap disk, expected " << rep.multiplicity;
            throw GapLost(msg.str());
        }

        Eigen::SelfAdjointEigenSolver<CMatrix> we(base.w_operator(zeta), Eigen::EigenvaluesOnly);
        const Eigen::VectorXd& wv = we.eigenvalues();
        const std::vector<double> w_in = eigenvalues_in_disk(wv, disk);
        if (w_in.empty()) throw GapLost("spectrum of W(zeta) left the gap disk at radius " + std::to_string(r));

        const double w_norm = wv.cwiseAbs().maxCoeff();
        gap_values.push_back(std::abs(lambda_zeta - w_norm));
        hd_values.push_back(hausdorff_distance(std::span<const double>(w_in), std::span<const double>(s_in)));
    }

    const double floor = 256.0 * std::numeric_limits<double>::epsilon() * rep.lambda_max;
    std::vector<double> rs(radii.begin(), radii.end());
    CubicOrderSweep out;
    out.gap = fit_order(rs, std::move(gap_values), floor);
    out.hausdorff = fit_order(std::move(rs), std::move(hd_values), floor);
    return out;
}

} // namespace resland
