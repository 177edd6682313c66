#pragma once

#include <span>
#include <vector>

#include "blockrat/types.hpp"

// Dense complex linear algebra shared by all fitters. SVD and least squares
// go through Eigen; the generalized eigenproblem uses LAPACK's complex QZ.
namespace blockrat::kernels {

/// Relative |beta| threshold below which a generalized eigenvalue is infinite.
inline constexpr double kInfiniteEigTol = 1e-12;
/// Relative threshold for trimming trailing polynomial coefficients.
inline constexpr double kTrimTol = 1e-13;

struct SvdResult {
    Matrix u;                    // column-orthonormal left singular vectors
    RealVector singular_values;  // descending
    Matrix v;                    // column-orthonormal right singular vectors
};

SvdResult svd_full(const Matrix& m);

/// The `block_rows` left singular vectors belonging to the smallest singular
/// values, returned as rows of a block_rows x rows(m) matrix and scaled to
/// unit Frobenius norm. Minimizes ||W m||_F over such matrices.
Matrix trailing_left_singular_block(const Matrix& m, Index block_rows);

/// Unit-norm right singular vector of the smallest singular value (or a null
/// vector when m has fewer rows than columns).
Vector trailing_right_singular_vector(const Matrix& m);

/// Minimum-norm least-squares solution of a x = b.
Matrix lstsq(const Matrix& a, const Matrix& b);

struct GeneralizedEigenvalue {
    Complex alpha;
    Complex beta;
    bool infinite = false;

    Complex value() const { return alpha / beta; }
};

/// All generalized eigenvalues of the pair (a, b), i.e. det(a - lambda b) = 0.
std::vector<GeneralizedEigenvalue> gen_eig(const Matrix& a, const Matrix& b);

/// Finite eigenvalues of (a, b) only.
std::vector<Complex> finite_gen_eigenvalues(const Matrix& a, const Matrix& b);

/// Roots of sum_k coeffs[k] z^k via the companion matrix.
std::vector<Complex> companion_roots(std::span<const Complex> coeffs);

} // namespace blockrat::kernels
