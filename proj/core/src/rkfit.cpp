#include "blockrat/rkfit.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "blockrat/barycentric.hpp"
#include "blockrat/kernels.hpp"

namespace blockrat {

namespace {

// Orthogonalizes w against the first `cols` columns of basis (CGS2) and
// returns the coefficients, the last one being the remaining norm.
Vector orthogonalize(const Matrix& basis, Index cols, Vector& w) {
    Vector coeffs = Vector::Zero(cols + 1);
    for (int pass = 0; pass < 2; ++pass) {
        const Vector h = basis.leftCols(cols).adjoint() * w;
        w -= basis.leftCols(cols) * h;
        coeffs.head(cols) += h;
    }
    coeffs(cols) = w.norm();
    return coeffs;
}

void separate_duplicates(std::vector<Complex>& poles) {
    for (std::size_t k = 1; k < poles.size(); ++k) {
        if (is_infinite_pole(poles[k])) { continue; }
        for (std::size_t j = 0; j < k; ++j) {
            if (poles[k] == poles[j]) { poles[k] += 1e-8 * (1.0 + std::abs(poles[k])); }
        }
    }
}

double projection_rmse(const RationalBasis& basis, const Matrix& functions) {
    const Matrix residual = functions - basis.vectors * (basis.vectors.adjoint() * functions);
    return std::sqrt(residual.squaredNorm() / static_cast<double>(functions.rows()));
}

} // namespace

RationalBasis build_basis(std::span<const Complex> points, std::span<const Complex> poles) {
    if (points.empty()) { throw ParameterError("build_basis: no sample points"); }
    const auto ell = static_cast<Index>(points.size());
    const auto d = static_cast<Index>(poles.size());
    if (d + 1 > ell) {
        throw ParameterError("build_basis: degree " + std::to_string(d) + " needs more than " +
                             std::to_string(ell) + " points");
    }
    for (const Complex& xi : poles) {
        if (is_infinite_pole(xi)) { continue; }
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (points[i] == xi) {
                throw ParameterError("build_basis: pole " + to_string(xi) + " coincides with sample " +
                                     std::to_string(i));
            }
        }
    }

    RationalBasis basis;
    basis.points.assign(points.begin(), points.end());
    basis.poles.assign(poles.begin(), poles.end());
    basis.vectors = Matrix::Zero(ell, d + 1);
    basis.k = Matrix::Zero(d + 1, d);
    basis.h = Matrix::Zero(d + 1, d);
    basis.vectors.col(0).setConstant(1.0 / std::sqrt(static_cast<double>(ell)));

    for (Index k = 0; k < d; ++k) {
        const Complex xi = poles[static_cast<std::size_t>(k)];
        Vector w(ell);
        for (Index i = 0; i < ell; ++i) {
            const Complex z = points[static_cast<std::size_t>(i)];
            const Complex v = basis.vectors(i, k);
            // (I - A/xi)^{-1} A v tends to A v as xi -> infinity.
            if (is_infinite_pole(xi)) {
                w(i) = z * v;
            } else if (xi == Complex(0.0)) {
                w(i) = v / z;
            } else {
                w(i) = z * v / (1.0 - z / xi);
            }
        }
        const Vector coeffs = orthogonalize(basis.vectors, k + 1, w);
        const double norm = coeffs(k + 1).real();
        if (!(norm > 0.0) || !std::isfinite(norm)) {
            throw NumericalError("build_basis: rational Krylov space lost rank at column " + std::to_string(k + 1));
        }
        basis.vectors.col(k + 1) = w / norm;

        // Record the recurrence as A V K = V H with A = diag(points).
        if (is_infinite_pole(xi)) {
            basis.k(k, k) = 1.0;
            basis.h.col(k).head(k + 2) = coeffs;
        } else if (xi == Complex(0.0)) {
            basis.k.col(k).head(k + 2) = coeffs;
            basis.h(k, k) = 1.0;
        } else {
            basis.k.col(k).head(k + 2) = coeffs / xi;
            basis.k(k, k) += 1.0;
            basis.h.col(k).head(k + 2) = coeffs;
        }
    }
    return basis;
}

Relocation relocate_poles(const RationalBasis& basis, const Matrix& functions) {
    const Matrix& v = basis.vectors;
    const Index ell = v.rows();
    const Index cols = v.cols();
    const Index degree = cols - 1;
    if (functions.rows() != ell) { throw ContractError("relocate_poles: function samples do not match the basis"); }

    Relocation out;
    if (degree == 0) { return out; }

    const Index count = functions.cols();
    Matrix stacked(count * ell, cols);
    double scale2 = 0.0;
    for (Index e = 0; e < count; ++e) {
        const Matrix fv = functions.col(e).asDiagonal() * v;
        stacked.middleRows(e * ell, ell) = fv - v * (v.adjoint() * fv);
        scale2 += fv.squaredNorm();
    }
    // Gaps are judged against the unprojected data so that an all-noise
    // stack (f in the basis span) counts as degenerate.
    const double scale = std::sqrt(scale2);
    Eigen::JacobiSVD<Matrix> svd(stacked, Eigen::ComputeFullV);
    const RealVector& sigma = svd.singularValues();
    const Vector c = svd.matrixV().col(cols - 1);
    const double smallest = sigma.size() >= cols ? sigma(cols - 1) : 0.0;
    const double runner_up = sigma.size() >= cols ? sigma(cols - 2) : 0.0;
    out.min_singular_value = smallest;
    out.degenerate = sigma.size() < cols || runner_up - smallest <= 1e-12 * scale;

    // The roots of v_hat = V c are the eigenvalues of the pencil (H, K)
    // projected onto the orthogonal complement of c.
    Eigen::HouseholderQR<Matrix> qr(c);
    const Matrix q = qr.householderQ() * Matrix::Identity(cols, cols);
    const Matrix complement = q.rightCols(degree);
    const auto eigs = kernels::gen_eig(complement.adjoint() * basis.h, complement.adjoint() * basis.k);
    out.poles.reserve(eigs.size());
    for (const auto& e : eigs) { out.poles.push_back(e.infinite ? kInfinitePole : e.value()); }
    return out;
}

RkfitResult rkfit_fit(const SampleSet& samples, const RkfitOptions& opts) {
    if (opts.iterations < 1) { throw ParameterError("rkfit: need at least one iteration"); }
    const std::size_t d = opts.degree;
    if (samples.size() < 2 * d + 2) {
        throw ParameterError("rkfit: need at least 2d+2 = " + std::to_string(2 * d + 2) + " samples, got " +
                             std::to_string(samples.size()));
    }
    std::vector<Complex> poles = opts.initial_poles;
    if (poles.empty()) { poles.assign(d, kInfinitePole); }
    if (poles.size() != d) {
        throw ParameterError("rkfit: " + std::to_string(poles.size()) + " initial poles for degree " +
                             std::to_string(d));
    }

    const Matrix functions = samples.stacked_entries();
    RkfitResult result;
    if (d > 0) {
        for (std::size_t it = 0; it < opts.iterations; ++it) {
            const RationalBasis basis = build_basis(samples.points(), poles);
            poles = relocate_poles(basis, functions).poles;
            separate_duplicates(poles);
            result.rmse_trace.push_back(projection_rmse(build_basis(samples.points(), poles), functions));
        }
    }

    std::vector<Complex> finite;
    for (const Complex& xi : poles) {
        if (!is_infinite_pole(xi)) { finite.push_back(xi); }
    }
    const auto ell = static_cast<Index>(samples.size());
    const auto nf = static_cast<Index>(finite.size());
    Matrix basis(ell, nf + 1);
    for (Index i = 0; i < ell; ++i) {
        for (Index k = 0; k < nf; ++k) {
            basis(i, k) = 1.0 / (samples.point(static_cast<std::size_t>(i)) - finite[static_cast<std::size_t>(k)]);
        }
    }
    basis.col(nf).setOnes();
    Matrix coeffs;
    if (nf == 0) {
        // Mean as first row plus mean deviation: exact for constant data.
        const Eigen::RowVectorXcd first = functions.row(0);
        coeffs = first + (functions.rowwise() - first).colwise().mean();
    } else {
        coeffs = kernels::lstsq(basis, functions);
    }

    result.model.poles = finite;
    result.model.constant = coeffs.row(nf).reshaped(samples.rows(), samples.cols());
    for (Index k = 0; k < nf; ++k) {
        result.model.residues.push_back(coeffs.row(k).reshaped(samples.rows(), samples.cols()));
    }
    if (d == 0) { result.rmse_trace.push_back(rmse(samples, make_evaluator(result.model))); }
    return result;
}

} // namespace blockrat
