#pragma once

#include <optional>
#include <string_view>

#include "resland/matcore.hpp"

namespace resland {

// Closed-form resolvent landscape of 2x2 matrices. Writing A = c I + A1 with
// c = tr(A)/2, A1 has eigenvalues +-lambda; the landscape is fixed by c,
// lambda and the shape parameter k >= 2 (k = 2 iff A is normal).

enum class TwoByTwoKind { DoubleEigenvalueRadial, NormalSaddleLine, NonNormalSaddle };

std::string_view to_string(TwoByTwoKind kind) noexcept;

struct TwoByTwoClassification {
    Complex center;
    Complex lambda;
    TwoByTwoKind kind = TwoByTwoKind::DoubleEigenvalueRadial;
    std::optional<double> k;
    std::optional<double> gamma;
    double phi = 0.0; // arg(lambda)

    /// NormalSaddleLine: angle of the critical line through `center`.
    std::optional<double> critical_line_angle;
    /// NonNormalSaddle: the unique critical point (== center).
    std::optional<Complex> critical_point;
};

struct WH {
    double w = 0.0;
    double h = 0.0;
};

/// w = ||A - zI||_F^2, h = |det(A - zI)|^2.
WH wh(const ComplexMatrix& a, Complex z);

/// ||R_A(z)||^2 from w and h; +inf on the spectrum.
double closed_form_norm_squared(const ComplexMatrix& a, Complex z);
double closed_form_norm(const ComplexMatrix& a, Complex z);

/// k = ||A1||_F^2 / |lambda|^2. Throws DomainError when lambda = 0.
double k_parameter(const ComplexMatrix& a);

/// Small root gamma = (k - sqrt(k^2 - 4)) / 2 of gamma^2 - k gamma + 1.
double gamma_from_k(double k);

TwoByTwoClassification classify(const ComplexMatrix& a);

/// Sign of d/dt ||R||^2 along z = center + lambda sqrt(t) e^{i theta} for
/// small t is sign(g(k, theta) - t). Returns -inf where k + 2cos(2 theta) = 0.
double g_function(double k, double theta);

} // namespace resland
