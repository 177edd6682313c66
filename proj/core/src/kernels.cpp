#include "blockrat/kernels.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

namespace blockrat::kernels {

SvdResult svd_full(const Matrix& m) {
    if (m.size() == 0) { throw ParameterError("svd_full: matrix must be nonempty"); }
    Eigen::BDCSVD<Matrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    if (svd.info() != Eigen::Success) {
        throw NumericalError("svd_full: SVD failed to converge on a " + std::to_string(m.rows()) + "x" +
                             std::to_string(m.cols()) + " matrix");
    }
    return {svd.matrixU(), svd.singularValues(), svd.matrixV()};
}

Matrix trailing_left_singular_block(const Matrix& m, Index block_rows) {
    if (block_rows < 1 || m.rows() % block_rows != 0) {
        throw ParameterError("trailing_left_singular_block: block height " + std::to_string(block_rows) +
                             " does not divide " + std::to_string(m.rows()) + " rows");
    }
    const Index n = m.rows();
    Matrix left;
    if (m.cols() == 0) {
        left = Matrix::Identity(n, n);
    } else {
        // Left singular vectors of m are the right singular vectors of m^*;
        // the full basis also covers the null space when m is tall.
        Eigen::JacobiSVD<Matrix> svd(m.adjoint(), Eigen::ComputeFullV);
        if (svd.info() != Eigen::Success) {
            throw NumericalError("trailing_left_singular_block: SVD failed to converge");
        }
        left = svd.matrixV();
    }
    Matrix w = left.rightCols(block_rows).adjoint();
    return w / std::sqrt(static_cast<double>(block_rows));
}

Vector trailing_right_singular_vector(const Matrix& m) {
    if (m.cols() == 0) { throw ParameterError("trailing_right_singular_vector: matrix has no columns"); }
    if (m.rows() == 0) {
        Vector e = Vector::Zero(m.cols());
        e(m.cols() - 1) = 1.0;
        return e;
    }
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullV);
    if (svd.info() != Eigen::Success) { throw NumericalError("trailing_right_singular_vector: SVD failed"); }
    return svd.matrixV().col(m.cols() - 1);
}

Matrix lstsq(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) {
        throw ContractError("lstsq: row mismatch " + std::to_string(a.rows()) + " vs " + std::to_string(b.rows()));
    }
    if (a.cols() == 0) { return Matrix::Zero(0, b.cols()); }
    Eigen::CompleteOrthogonalDecomposition<Matrix> cod(a);
    return cod.solve(b);
}

std::vector<GeneralizedEigenvalue> gen_eig(const Matrix& a, const Matrix& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
        throw ContractError("gen_eig: need square matrices of equal size");
    }
    const Index n = a.rows();
    if (n == 0) { return {}; }
    Matrix aa = a;
    Matrix bb = b;
    std::vector<Complex> alpha(static_cast<std::size_t>(n));
    std::vector<Complex> beta(static_cast<std::size_t>(n));
    const lapack_int info =
      LAPACKE_zggev(LAPACK_COL_MAJOR, 'N', 'N', static_cast<lapack_int>(n), aa.data(), static_cast<lapack_int>(n),
                    bb.data(), static_cast<lapack_int>(n), alpha.data(), beta.data(), nullptr, 1, nullptr, 1);
    if (info != 0) {
        throw NumericalError("gen_eig: QZ iteration failed (zggev info=" + std::to_string(info) + ")");
    }
    const double scale = std::max(a.norm(), b.norm());
    std::vector<GeneralizedEigenvalue> out;
    out.reserve(alpha.size());
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        const bool inf = std::abs(beta[i]) <= kInfiniteEigTol * scale;
        out.push_back({alpha[i], beta[i], inf});
    }
    return out;
}

std::vector<Complex> finite_gen_eigenvalues(const Matrix& a, const Matrix& b) {
    std::vector<Complex> out;
    for (const auto& ev : gen_eig(a, b)) {
        if (!ev.infinite) { out.push_back(ev.value()); }
    }
    return out;
}

std::vector<Complex> companion_roots(std::span<const Complex> coeffs) {
    double biggest = 0.0;
    for (const Complex& c : coeffs) { biggest = std::max(biggest, std::abs(c)); }
    if (biggest == 0.0) { throw ParameterError("companion_roots: zero polynomial"); }

    std::size_t degree = coeffs.size() - 1;
    while (degree > 0 && std::abs(coeffs[degree]) <= kTrimTol * biggest) { --degree; }
    if (degree == 0) { return {}; }

    const Index n = static_cast<Index>(degree);
    Matrix companion = Matrix::Zero(n, n);
    companion.diagonal(-1).setOnes();
    for (Index k = 0; k < n; ++k) { companion(k, n - 1) = -coeffs[static_cast<std::size_t>(k)] / coeffs[degree]; }

    Eigen::ComplexEigenSolver<Matrix> solver(companion, false);
    if (solver.info() != Eigen::Success) { throw NumericalError("companion_roots: eigenvalue iteration failed"); }
    const Vector& ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

} // namespace blockrat::kernels
