#include "resland/builders.hpp"

#include <cmath>
#include <numbers>

#include "resland/errors.hpp"
#include "resland/growth.hpp"
#include "resland/twobytwo.hpp"

namespace resland {

namespace {

ComplexMatrix make2(Complex a, Complex b, Complex c, Complex d) {
    CMatrix m(2, 2);
    m << a, b, c, d;
    return ComplexMatrix(std::move(m));
}

void require_nonzero(std::span<const Complex> weights) {
    for (const Complex& w : weights)
        if (w == Complex(0.0, 0.0)) throw DomainError("weights must be nonzero");
}

} // namespace

ComplexMatrix type1_matrix(Type1Variant variant, Complex a, Complex b, Complex c) {
    if (variant == Type1Variant::LowerTriangular) return make2(0.0, 0.0, c, 0.0);
    if (b == Complex(0.0, 0.0)) throw DomainError("type1 general form needs b != 0");
    return make2(a, b, -a * a / b, -a);
}

ComplexMatrix type2_matrix(Type2Variant variant, Complex a, Complex b, Complex c, int sign) {
    if (variant == Type2Variant::Triangular) {
        if (sign != 1 && sign != -1) throw DomainError("type2 triangular form needs sign = +-1");
        const double s = sign;
        return make2(s, 0.0, s * c, -s);
    }
    if (b == Complex(0.0, 0.0)) throw DomainError("type2 general form needs b != 0");
    return make2(a, b, (1.0 - a * a) / b, -a);
}

ComplexMatrix scaled_rotated(const ComplexMatrix& core, double r, double phi, Complex z0) {
    if (!(r > 0.0)) throw DomainError("scale r must be positive");
    if (core.n() != 2) throw DomainError("core must be 2x2");
    const Complex tr = core(0, 0) + core(1, 1);
    const Complex det = core(0, 0) * core(1, 1) - core(0, 1) * core(1, 0);
    const double tol = 1e-10 * (1.0 + core.norm() * core.norm());
    if (std::abs(tr) > tol || std::abs(det + 1.0) > tol) throw DomainError("core must have eigenvalues +-1");
    CMatrix m = std::polar(r, phi) * core.data();
    m.diagonal().array() += z0;
    return ComplexMatrix(std::move(m));
}

ComplexMatrix block_diag(std::span<const ComplexMatrix> blocks) {
    if (blocks.empty()) throw DomainError("block_diag needs at least one block");
    Eigen::Index n = 0;
    for (const auto& b : blocks) n += static_cast<Eigen::Index>(b.n());
    CMatrix m = CMatrix::Zero(n, n);
    Eigen::Index off = 0;
    for (const auto& b : blocks) {
        const auto k = static_cast<Eigen::Index>(b.n());
        m.block(off, off, k, k) = b.data();
        off += k;
    }
    return ComplexMatrix(std::move(m));
}

ComplexMatrix BlockSpec::assemble() const { return block_diag(blocks); }

std::vector<std::pair<double, double>> BlockSpec::arc_pairs() const {
    std::vector<std::pair<double, double>> out;
    for (std::size_t j = 0; j < blocks.size(); ++j) out.emplace_back(rays[j].second, theta_arc(k_parameter(blocks[j])));
    return out;
}

BlockSpec make_block_spec(std::span<const ComplexMatrix> cores, std::span<const std::pair<double, double>> rays,
                          Complex z0) {
    if (cores.size() != rays.size()) throw DomainError("one (r, phi) ray per core is required");
    BlockSpec spec;
    spec.center = z0;
    for (std::size_t j = 0; j < cores.size(); ++j) {
        spec.blocks.push_back(scaled_rotated(cores[j], rays[j].first, rays[j].second, z0));
        spec.rays.push_back(rays[j]);
    }
    return spec;
}

double unit_norm_scale(double k) { return 1.0 / std::sqrt(gamma_from_k(k)); }

BlockSpec example_last_spec() {
    using std::numbers::pi;
    const std::array<ComplexMatrix, 3> cores = {
        make2(1.0, 0.0, 0.0, -1.0),
        type2_matrix(Type2Variant::General, 1.0, 2.0, 0.0),
        type2_matrix(Type2Variant::General, Complex(0.0, 2.0), -1.0, 0.0),
    };
    // k = 2, 6, 34; each scale puts ||R(0)|| = 1 for its block
    const std::array<std::pair<double, double>, 3> rays = {{
        {unit_norm_scale(k_parameter(cores[0])), pi / 2.0},
        {unit_norm_scale(k_parameter(cores[1])), -pi / 6.0},
        {unit_norm_scale(k_parameter(cores[2])), pi / 6.0},
    }};
    return make_block_spec(cores, rays, 0.0);
}

ComplexMatrix example_last() { return example_last_spec().assemble(); }

ComplexMatrix cyclic_matrix(std::span<const Complex> weights) {
    const std::size_t n = weights.size();
    if (n < 2) throw DomainError("cyclic matrix needs N >= 2 weights");
    require_nonzero(weights);
    const auto nn = static_cast<Eigen::Index>(n);
    CMatrix m = CMatrix::Zero(nn, nn);
    m(0, nn - 1) = 1.0 / weights[0];
    for (Eigen::Index j = 1; j < nn; ++j) m(j, j - 1) = 1.0 / weights[static_cast<std::size_t>(j)];
    return ComplexMatrix(std::move(m));
}

double truncated_shift_gap(std::span<const Complex> weights) {
    const std::size_t n = weights.size();
    if (n < 3 || n % 2 == 0) throw DomainError("truncated shift needs 2M+1 weights with M >= 1");
    const std::size_t mid = n / 2;
    double others = 0.0;
    for (std::size_t p = 0; p < n; ++p)
        if (p != mid) others = std::max(others, std::norm(weights[p]));
    return std::norm(weights[mid]) - others;
}

ComplexMatrix truncated_shift(std::span<const Complex> weights) {
    require_nonzero(weights);
    if (!(truncated_shift_gap(weights) > 0.0)) throw DomainError("|a_0| must strictly dominate all other weights");
    const auto n = static_cast<Eigen::Index>(weights.size());
    // (A x)_q = x_{q+1} / a_{q+1}, indices mod 2M+1
    CMatrix m = CMatrix::Zero(n, n);
    for (Eigen::Index q = 0; q < n; ++q) {
        const Eigen::Index next = (q + 1) % n;
        m(q, next) = 1.0 / weights[static_cast<std::size_t>(next)];
    }
    return ComplexMatrix(std::move(m));
}

ComplexMatrix multiplication_example(std::size_t n_grid, std::size_t n_block) {
    if (n_grid < 1 || n_block < 1) throw DomainError("multiplication example needs n_grid, n_block >= 1");
    const auto n = static_cast<Eigen::Index>(n_grid + n_block);
    CMatrix m = CMatrix::Zero(n, n);
    for (std::size_t k = 0; k < n_grid; ++k) {
        const auto idx = static_cast<Eigen::Index>(k);
        m(idx, idx) = (static_cast<double>(k) + 0.5) / static_cast<double>(n_grid);
    }
    for (Eigen::Index k = static_cast<Eigen::Index>(n_grid); k < n; ++k) m(k, k) = 2.0;
    return ComplexMatrix(std::move(m));
}

ComplexMatrix connectivity_example(std::size_t n) {
    if (n < 2) throw DomainError("connectivity example needs N >= 2");
    const auto nn = static_cast<Eigen::Index>(n);
    CMatrix m = CMatrix::Zero(nn, nn);
    const double h = std::sqrt(3.0) / 2.0;
    for (Eigen::Index j = 1; j <= nn; ++j) m(j - 1, j - 1) = Complex(static_cast<double>(j), j % 2 == 0 ? h : -h);
    return ComplexMatrix(std::move(m));
}

} // namespace resland
