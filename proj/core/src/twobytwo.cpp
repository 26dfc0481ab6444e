#include "resland/twobytwo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "resland/errors.hpp"

namespace resland {

namespace {

void require_2x2(const ComplexMatrix& a) {
    if (a.n() != 2) throw DomainError("expected a 2x2 matrix, got n = " + std::to_string(a.n()));
}

Complex half_trace(const ComplexMatrix& a) { return (a(0, 0) + a(1, 1)) / 2.0; }

Complex lambda_of(const ComplexMatrix& a) {
    const Complex c = half_trace(a);
    const Complex p = a(0, 0) - c; // A1 = [[p, b], [q, -p]], det(A1) = -p^2 - b q
    return std::sqrt(p * p + a(0, 1) * a(1, 0));
}

bool double_eigenvalue(const ComplexMatrix& a, Complex lambda) {
    return std::abs(lambda) <= 1e-10 * (1.0 + a.norm());
}

} // namespace

std::string_view to_string(TwoByTwoKind kind) noexcept {
    switch (kind) {
        case TwoByTwoKind::DoubleEigenvalueRadial: return "DoubleEigenvalueRadial";
        case TwoByTwoKind::NormalSaddleLine: return "NormalSaddleLine";
        case TwoByTwoKind::NonNormalSaddle: return "NonNormalSaddle";
    }
    return "Unknown";
}

WH wh(const ComplexMatrix& a, Complex z) {
    require_2x2(a);
    const Complex p = a(0, 0) - z;
    const Complex s = a(1, 1) - z;
    WH out;
    out.w = std::norm(p) + std::norm(s) + std::norm(a(0, 1)) + std::norm(a(1, 0));
    out.h = std::norm(p * s - a(0, 1) * a(1, 0));
    return out;
}

double closed_form_norm_squared(const ComplexMatrix& a, Complex z) {
    const WH v = wh(a, z);
    const double disc = std::max(0.0, v.w * v.w - 4.0 * v.h);
    // s^2 = (w - sqrt(disc))/2 rewritten without cancellation
    const double denom = v.w + std::sqrt(disc);
    if (v.h == 0.0 || denom == 0.0) return kInf;
    const double smin2 = 2.0 * v.h / denom;
    const double tol = singularity_tolerance(a, z);
    if (smin2 <= tol * tol) return kInf;
    return 1.0 / smin2;
}

double closed_form_norm(const ComplexMatrix& a, Complex z) { return std::sqrt(closed_form_norm_squared(a, z)); }

double k_parameter(const ComplexMatrix& a) {
    require_2x2(a);
    const Complex lambda = lambda_of(a);
    if (double_eigenvalue(a, lambda)) throw DomainError("k is undefined for a double eigenvalue");
    const Complex c = half_trace(a);
    const double frob = std::norm(a(0, 0) - c) + std::norm(a(1, 1) - c) + std::norm(a(0, 1)) + std::norm(a(1, 0));
    // k >= 2 always holds; rounding can land just below it for normal A
    return std::max(2.0, frob / std::norm(lambda));
}

double gamma_from_k(double k) {
    if (k < 2.0) throw DomainError("gamma needs k >= 2");
    // product of the roots is 1, so take the small one as 1/large for accuracy
    return 2.0 / (k + std::sqrt(k * k - 4.0));
}

TwoByTwoClassification classify(const ComplexMatrix& a) {
    require_2x2(a);
    TwoByTwoClassification c;
    c.center = half_trace(a);
    c.lambda = lambda_of(a);
    c.phi = std::arg(c.lambda);

    if (double_eigenvalue(a, c.lambda)) {
        c.kind = TwoByTwoKind::DoubleEigenvalueRadial;
        c.lambda = 0.0;
        c.phi = 0.0;
        return c;
    }

    const double k = k_parameter(a);
    c.k = k;
    c.gamma = gamma_from_k(k);
    if (is_normal(a, 1e-12)) {
        c.kind = TwoByTwoKind::NormalSaddleLine;
        c.critical_line_angle = std::remainder(c.phi + std::numbers::pi / 2.0, std::numbers::pi);
    } else {
        c.kind = TwoByTwoKind::NonNormalSaddle;
        c.critical_point = c.center;
    }
    return c;
}

double g_function(double k, double theta) {
    if (k < 2.0) throw DomainError("g(k, theta) needs k >= 2");
    const double q = k + 2.0 * std::cos(2.0 * theta);
    if (q == 0.0) return -kInf;
    return q / 4.0 - (k + 2.0) * (k - 2.0) / (4.0 * q);
}

} // namespace resland
