#pragma once

#include <span>
#include <vector>

#include "blockrat/barycentric.hpp"

namespace blockrat {

/// Barycentric weights of polynomial interpolation, w_k = 1 / prod_{j != k} (z_j - z_k).
std::vector<Complex> bary_poly_weights(std::span<const Complex> nodes);

/// The pencil L(z) = L0 - z L1 of size (d*s) x (d*s).
struct Pencil {
    Matrix l0;
    Matrix l1;
    std::vector<Complex> nodes;
    std::vector<Complex> weights;
    Index block_size = 0;
};

/// Strong linearization of the matrix polynomial
///
///   N(z) = sum_k C_k/(z - z_k) / sum_k w_k/(z - z_k),
///
/// i.e. the degree-d interpolant of the values C_k / w_k at the nodes, with
/// w_k from bary_poly_weights. Coefficients are s x s, d = nodes.size()-1 >= 1.
Pencil build_pencil(std::span<const Matrix> coefficients, std::span<const Complex> nodes);

/// Finite generalized eigenvalues of (L0, L1).
std::vector<Complex> pencil_eigenvalues(const Pencil& pencil);

/// N(z) from above, evaluated in barycentric form (N(z_k) = C_k / w_k).
Matrix evaluate_numerator(std::span<const Matrix> coefficients, std::span<const Complex> nodes, Complex z);

/// Points where the bary-C numerator sum_k C_k/(z - z_k) is singular. These
/// are nonlinear eigenvalues of R unless R also has a pole there; callers
/// must filter such coincidences.
std::vector<Complex> nonlinear_eigs_bary_c(const BlockBaryC& r);

/// Points where the bary-C denominator sum_k D_k/(z - z_k) is singular: the
/// candidate poles of R, at most d*m of them.
std::vector<Complex> denominator_eigs_bary_c(const BlockBaryC& r);

} // namespace blockrat
