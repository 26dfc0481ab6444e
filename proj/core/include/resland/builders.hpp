#pragma once

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "resland/matcore.hpp"

namespace resland {

// Constructors for the example operators: 2x2 normal forms, their scaled and
// rotated copies, block diagonals, the weighted cyclic shift and its finite
// sections, and two diagonal examples.

/// Nilpotent 2x2 normal forms (trace 0, determinant 0).
enum class Type1Variant { LowerTriangular, General };
/// 2x2 normal forms with eigenvalues +-1.
enum class Type2Variant { Triangular, General };

/// LowerTriangular: [[0,0],[c,0]]. General: [[a,b],[-a^2/b,-a]], b != 0.
ComplexMatrix type1_matrix(Type1Variant variant, Complex a, Complex b, Complex c);

/// Triangular: sign * [[1,0],[c,-1]] with sign = +-1. General:
/// [[a,b],[(1-a^2)/b,-a]], b != 0.
ComplexMatrix type2_matrix(Type2Variant variant, Complex a, Complex b, Complex c, int sign = 1);

/// z0 I + r e^{i phi} core; core must have eigenvalues +-1.
ComplexMatrix scaled_rotated(const ComplexMatrix& core, double r, double phi, Complex z0);

ComplexMatrix block_diag(std::span<const ComplexMatrix> blocks);

/// 2x2 blocks A_j with eigenvalues z0 +- r_j e^{i phi_j}.
struct BlockSpec {
    std::vector<ComplexMatrix> blocks;
    Complex center;
    std::vector<std::pair<double, double>> rays; // (r_j, phi_j)

    ComplexMatrix assemble() const;
    /// (phi_j, theta_j) pairs describing where each block's norm increases.
    std::vector<std::pair<double, double>> arc_pairs() const;
};

BlockSpec make_block_spec(std::span<const ComplexMatrix> cores, std::span<const std::pair<double, double>> rays,
                          Complex z0);

/// Scale r that gives ||R(z0)|| = 1 for a core with shape parameter k.
double unit_norm_scale(double k);

/// The three-block 6x6 example with a local minimum of ||R|| at 0.
BlockSpec example_last_spec();
ComplexMatrix example_last();

/// Weighted cyclic matrix: A(0, N-1) = 1/a_1 and A(j, j-1) = 1/a_{j+1}, so
/// that A^{-1} has a_{j+1} on the superdiagonal and a_1 in the corner.
ComplexMatrix cyclic_matrix(std::span<const Complex> weights);

/// Periodic finite section of the weighted shift on indices -M..M with
/// (A^{-1} x)_j = a_j x_{j-1}; weights[M] is a_0 and must dominate strictly.
ComplexMatrix truncated_shift(std::span<const Complex> weights);

/// |a_0|^2 - max_{j != 0} |a_j|^2, the gap of S(0) for truncated_shift.
double truncated_shift_gap(std::span<const Complex> weights);

/// diag(x_1..x_n_grid, 2..2) with midpoints x_k = (k - 1/2)/n_grid.
ComplexMatrix multiplication_example(std::size_t n_grid, std::size_t n_block);

/// diag(j + i (-1)^j sqrt(3)/2), j = 1..N.
ComplexMatrix connectivity_example(std::size_t n);

} // namespace resland
