#include "blockrat/vecfit.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

#include "blockrat/barycentric.hpp"
#include "blockrat/kernels.hpp"

namespace blockrat {

namespace {

Matrix cauchy(std::span<const Complex> points, std::span<const Complex> poles) {
    Matrix phi(static_cast<Index>(points.size()), static_cast<Index>(poles.size()));
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t k = 0; k < poles.size(); ++k) {
            phi(static_cast<Index>(i), static_cast<Index>(k)) = 1.0 / (points[i] - poles[k]);
        }
    }
    return phi;
}

void separate_duplicates(std::vector<Complex>& poles) {
    for (std::size_t k = 1; k < poles.size(); ++k) {
        for (std::size_t j = 0; j < k; ++j) {
            if (poles[k] == poles[j]) { poles[k] += 1e-8 * (1.0 + std::abs(poles[k])); }
        }
    }
}

void check_poles_off_samples(std::span<const Complex> points, std::span<const Complex> poles) {
    for (const Complex& xi : poles) {
        if (find_support(points, xi) >= 0 || std::find(points.begin(), points.end(), xi) != points.end()) {
            throw ParameterError("vector fitting: pole " + to_string(xi) + " coincides with a sample point");
        }
    }
}

// Residue fit with fixed poles: columns [1/(z - xi_1) .. 1/(z - xi_d), 1].
PoleResidue fit_residues(std::span<const Complex> points, const Matrix& entries, std::span<const Complex> poles,
                         Index rows, Index cols) {
    const auto d = static_cast<Index>(poles.size());
    Matrix basis(static_cast<Index>(points.size()), d + 1);
    basis.leftCols(d) = cauchy(points, poles);
    basis.col(d).setOnes();
    const Matrix coeffs = kernels::lstsq(basis, entries);  // (d+1) x N

    PoleResidue out;
    out.poles.assign(poles.begin(), poles.end());
    out.constant = coeffs.row(d).reshaped(rows, cols);
    for (Index k = 0; k < d; ++k) { out.residues.push_back(coeffs.row(k).reshaped(rows, cols)); }
    return out;
}

double entries_rmse(std::span<const Complex> points, const Matrix& entries, const PoleResidue& model) {
    double sum = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const Matrix r = evaluate(model, points[i]);
        sum += (entries.row(static_cast<Index>(i)) - r.reshaped().transpose()).squaredNorm();
    }
    return std::sqrt(sum / static_cast<double>(points.size()));
}

VfResult vector_fit(std::span<const Complex> points, const Matrix& entries, Index rows, Index cols,
                    std::size_t degree, const VfOptions& opts) {
    if (opts.iterations < 1) { throw ParameterError("vector fitting: need at least one iteration"); }
    if (points.size() < 2 * degree + 1) {
        throw ParameterError("vector fitting: need at least 2d+1 = " + std::to_string(2 * degree + 1) +
                             " samples, got " + std::to_string(points.size()));
    }

    VfResult result;
    if (degree == 0) {
        // Mean as first row plus mean deviation: exact for constant data.
        const Eigen::RowVectorXcd first = entries.row(0);
        const Eigen::RowVectorXcd mean = first + (entries.rowwise() - first).colwise().mean();
        result.model.constant = mean.reshaped(rows, cols);
        result.rmse_trace.push_back(entries_rmse(points, entries, result.model));
        return result;
    }

    std::vector<Complex> poles = opts.initial_poles ? *opts.initial_poles : default_vf_poles(points, degree);
    if (poles.size() != degree) {
        throw ParameterError("vector fitting: " + std::to_string(poles.size()) + " initial poles for degree " +
                             std::to_string(degree));
    }
    check_poles_off_samples(points, poles);

    for (std::size_t it = 0; it < opts.iterations; ++it) {
        poles = vf_relocate(points, entries, poles, &result.rank_deficient);
        if (opts.enforce_stability) {
            for (Complex& xi : poles) {
                if (xi.real() > 0.0) { xi = -std::conj(xi); }
            }
        }
        separate_duplicates(poles);
        check_poles_off_samples(points, poles);
        const PoleResidue fit = fit_residues(points, entries, poles, rows, cols);
        result.rmse_trace.push_back(entries_rmse(points, entries, fit));
    }
    result.model = fit_residues(points, entries, poles, rows, cols);
    return result;
}

} // namespace

Matrix evaluate(const PoleResidue& r, Complex z) {
    if (r.poles.size() != r.residues.size()) { throw ContractError("eval_poleresidue: pole/residue count mismatch"); }
    if (find_support(r.poles, z) >= 0) {
        throw EvaluationError("eval_poleresidue: z = " + to_string(z) + " is a pole", z);
    }
    Matrix out = r.constant;
    for (std::size_t k = 0; k < r.poles.size(); ++k) { out += r.residues[k] / (z - r.poles[k]); }
    return out;
}

std::vector<Complex> default_vf_poles(std::span<const Complex> points, std::size_t degree) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (const Complex& p : points) {
        const double a = std::abs(p);
        if (a > 0.0) { lo = std::min(lo, a); }
        hi = std::max(hi, a);
    }
    if (hi == 0.0) {
        lo = 1.0;
        hi = 1.0;
    }
    if (!std::isfinite(lo)) { lo = hi; }
    if (lo == hi) { lo = hi / 10.0; }

    std::vector<Complex> poles;
    const std::size_t pairs = degree / 2;
    for (std::size_t k = 0; k < pairs; ++k) {
        const double t = pairs == 1 ? 0.5 : static_cast<double>(k) / static_cast<double>(pairs - 1);
        const double beta = lo * std::pow(hi / lo, t);
        poles.emplace_back(-beta / 100.0, beta);
        poles.emplace_back(-beta / 100.0, -beta);
    }
    if (degree % 2 == 1) { poles.emplace_back(-std::sqrt(lo * hi), 0.0); }
    return poles;
}

std::vector<Complex> vf_relocate(std::span<const Complex> points, const Matrix& entries,
                                 std::span<const Complex> poles, bool* rank_deficient) {
    const auto ell = static_cast<Index>(points.size());
    const auto d = static_cast<Index>(poles.size());
    const Index count = entries.cols();
    if (d == 0) { return {}; }
    const Matrix phi = cauchy(points, poles);

    // Per entry: [phi, 1, -diag(f) phi] [c; c0; dd] = f. A QR factorization
    // eliminates the entry-specific numerator unknowns, leaving d equations
    // per entry in the shared denominator coefficients.
    Matrix reduced(count * d, d);
    Vector rhs(count * d);
    Matrix local(ell, 2 * d + 1);
    local.leftCols(d) = phi;
    local.col(d).setOnes();
    double scale = 0.0;
    for (Index e = 0; e < count; ++e) {
        const Vector f = entries.col(e);
        local.rightCols(d) = -(f.asDiagonal() * phi);
        scale = std::max(scale, local.norm());
        Eigen::HouseholderQR<Matrix> qr(local);
        const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
        const Vector qf = qr.householderQ().adjoint() * f;
        reduced.middleRows(e * d, d) = r.block(d + 1, d + 1, d, d);
        rhs.segment(e * d, d) = qf.segment(d + 1, d);
    }

    // Rank is judged against the size of the unreduced systems, so a block
    // that is pure rounding noise counts as zero.
    const double tol = 1e-12 * scale;
    const RealVector sigma = Eigen::JacobiSVD<Matrix>(reduced).singularValues();
    const auto rank = static_cast<Index>((sigma.array() > tol).count());
    if (rank_deficient != nullptr && rank < d) { *rank_deficient = true; }
    Vector dd = Vector::Zero(d);
    if (rank > 0) {
        Eigen::CompleteOrthogonalDecomposition<Matrix> cod;
        cod.setThreshold(tol / sigma(0));
        cod.compute(reduced);
        dd = cod.solve(rhs);
    }

    // Zeros of 1 + sum dd_k/(z - xi_k): eigenvalues of diag(xi) - 1 dd^T.
    Matrix pencil = -Vector::Ones(d) * dd.transpose();
    for (Index k = 0; k < d; ++k) { pencil(k, k) += poles[static_cast<std::size_t>(k)]; }
    Eigen::ComplexEigenSolver<Matrix> solver(pencil, false);
    if (solver.info() != Eigen::Success) { throw NumericalError("vector fitting: pole relocation eigensolve failed"); }
    const Vector& ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

VfResult vf_scalar(std::span<const Complex> points, std::span<const Complex> values, std::size_t degree,
                   const VfOptions& opts) {
    const SampleSet samples = SampleSet::scalar(points, values);
    return vf_matrix(samples, degree, opts);
}

VfResult vf_matrix(const SampleSet& samples, std::size_t degree, const VfOptions& opts) {
    return vector_fit(samples.points(), samples.stacked_entries(), samples.rows(), samples.cols(), degree, opts);
}

} // namespace blockrat
