#include "blockrat/barycentric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/LU>

#include "blockrat/kernels.hpp"

namespace blockrat {

namespace {

void require_same_length(std::size_t support, std::size_t other, const char* what) {
    if (support == 0) { throw ContractError(std::string(what) + ": model has no support points"); }
    if (support != other) { throw ContractError(std::string(what) + ": inconsistent coefficient counts"); }
}

Matrix solve_denominator(const Matrix& denominator, const Matrix& rhs, Complex z, const char* what) {
    Eigen::PartialPivLU<Matrix> lu(denominator);
    const double rcond = lu.rcond();
    if (!(rcond * kMaxDenominatorCondition > 1.0)) {
        throw EvaluationError(std::string(what) + ": singular denominator at z = " + to_string(z), z);
    }
    return lu.solve(rhs);
}

void reject_collisions(std::span<const Complex> points, std::span<const Complex> support, const char* what) {
    for (std::size_t k = 0; k < support.size(); ++k) {
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (points[i] == support[k]) {
                throw ParameterError(std::string(what) + ": support point " + std::to_string(k) + " (" +
                                     to_string(support[k]) + ") coincides with sample " + std::to_string(i));
            }
        }
        for (std::size_t j = 0; j < k; ++j) {
            if (support[j] == support[k]) {
                throw ParameterError(std::string(what) + ": duplicate support point " + to_string(support[k]));
            }
        }
    }
}

} // namespace

double support_tolerance(std::span<const Complex> support) {
    double biggest = 0.0;
    for (const Complex& z : support) { biggest = std::max(biggest, std::abs(z)); }
    return 10.0 * std::numeric_limits<double>::epsilon() * biggest;
}

std::ptrdiff_t find_support(std::span<const Complex> support, Complex z) {
    const double tol = support_tolerance(support);
    std::ptrdiff_t best = -1;
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < support.size(); ++k) {
        const double dist = std::abs(z - support[k]);
        if (dist <= tol && dist < best_dist) {
            best = static_cast<std::ptrdiff_t>(k);
            best_dist = dist;
        }
    }
    return best;
}

Complex evaluate(const ScalarBarycentric& r, Complex z) {
    require_same_length(r.support.size(), r.weights.size(), "eval_scalar");
    require_same_length(r.support.size(), r.values.size(), "eval_scalar");
    if (const auto k = find_support(r.support, z); k >= 0) { return r.values[static_cast<std::size_t>(k)]; }
    if (r.support.size() == 1 && r.weights[0] != Complex(0.0)) { return r.values[0]; }
    Complex num = 0.0;
    Complex den = 0.0;
    for (std::size_t k = 0; k < r.support.size(); ++k) {
        const Complex c = r.weights[k] / (z - r.support[k]);
        num += c * r.values[k];
        den += c;
    }
    if (den == Complex(0.0)) { throw EvaluationError("eval_scalar: zero denominator at z = " + to_string(z), z); }
    return num / den;
}

Matrix evaluate(const BlockBaryA& r, Complex z) {
    require_same_length(r.support.size(), r.weights.size(), "eval_baryA");
    require_same_length(r.support.size(), r.values.size(), "eval_baryA");
    if (const auto k = find_support(r.support, z); k >= 0) { return r.values[static_cast<std::size_t>(k)]; }
    if (r.support.size() == 1 && r.weights[0] != Complex(0.0)) { return r.values[0]; }
    Matrix num = Matrix::Zero(r.values.front().rows(), r.values.front().cols());
    Complex den = 0.0;
    for (std::size_t k = 0; k < r.support.size(); ++k) {
        const Complex c = r.weights[k] / (z - r.support[k]);
        num += c * r.values[k];
        den += c;
    }
    if (den == Complex(0.0)) { throw EvaluationError("eval_baryA: zero denominator at z = " + to_string(z), z); }
    return num / den;
}

Matrix evaluate(const BlockBaryB& r, Complex z) {
    require_same_length(r.support.size(), r.weights.size(), "eval_baryB");
    require_same_length(r.support.size(), r.values.size(), "eval_baryB");
    if (const auto k = find_support(r.support, z); k >= 0) { return r.values[static_cast<std::size_t>(k)]; }
    if (r.support.size() == 1) {
        // W_0^{-1} W_0 F_0 = F_0 whenever W_0 is invertible.
        solve_denominator(r.weights[0], r.values[0], z, "eval_baryB");
        return r.values[0];
    }
    const Index m = r.weights.front().rows();
    Matrix den = Matrix::Zero(m, m);
    Matrix num = Matrix::Zero(m, r.values.front().cols());
    for (std::size_t k = 0; k < r.support.size(); ++k) {
        const Complex c = 1.0 / (z - r.support[k]);
        den += c * r.weights[k];
        num.noalias() += c * (r.weights[k] * r.values[k]);
    }
    return solve_denominator(den, num, z, "eval_baryB");
}

Matrix evaluate(const BlockBaryC& r, Complex z) {
    require_same_length(r.support.size(), r.numerators.size(), "eval_baryC");
    require_same_length(r.support.size(), r.denominators.size(), "eval_baryC");
    if (const auto k = find_support(r.support, z); k >= 0) {
        const auto i = static_cast<std::size_t>(k);
        return solve_denominator(r.denominators[i], r.numerators[i], z, "eval_baryC");
    }
    const Index m = r.denominators.front().rows();
    Matrix den = Matrix::Zero(m, m);
    Matrix num = Matrix::Zero(m, r.numerators.front().cols());
    for (std::size_t k = 0; k < r.support.size(); ++k) {
        const Complex c = 1.0 / (z - r.support[k]);
        den += c * r.denominators[k];
        num += c * r.numerators[k];
    }
    return solve_denominator(den, num, z, "eval_baryC");
}

BlockBaryC to_bary_c(const BlockBaryB& r) {
    BlockBaryC out;
    out.support = r.support;
    for (std::size_t k = 0; k < r.support.size(); ++k) {
        out.numerators.push_back(r.weights[k] * r.values[k]);
        out.denominators.push_back(r.weights[k]);
    }
    return out;
}

BlockBaryC to_bary_c(const BlockBaryA& r) {
    BlockBaryC out;
    out.support = r.support;
    for (std::size_t k = 0; k < r.support.size(); ++k) {
        const Index m = r.values[k].rows();
        out.numerators.push_back(r.weights[k] * r.values[k]);
        out.denominators.push_back(r.weights[k] * Matrix::Identity(m, m));
    }
    return out;
}

Matrix block_loewner(std::span<const Complex> points, std::span<const Matrix> values,
                     std::span<const Complex> support, std::span<const Matrix> support_values) {
    if (points.size() != values.size() || support.size() != support_values.size()) {
        throw ContractError("block_loewner: inconsistent lengths");
    }
    if (support.empty()) { throw ParameterError("block_loewner: need at least one support point"); }
    const Index m = support_values.front().rows();
    const Index n = support_values.front().cols();
    const auto ell = static_cast<Index>(points.size());
    Matrix loewner(m * static_cast<Index>(support.size()), ell * n);
    for (std::size_t k = 0; k < support.size(); ++k) {
        for (Index i = 0; i < ell; ++i) {
            const auto ii = static_cast<std::size_t>(i);
            loewner.block(static_cast<Index>(k) * m, i * n, m, n) =
              (values[ii] - support_values[k]) / (points[ii] - support[k]);
        }
    }
    return loewner;
}

std::vector<Matrix> solve_weights_bary_b(const SampleSet& samples, std::span<const Complex> support,
                                         std::span<const Matrix> support_values) {
    reject_collisions(samples.points(), support, "solve_weights_baryB");
    const Matrix loewner = block_loewner(samples.points(), samples.values(), support, support_values);
    const Index m = samples.rows();
    const Matrix w = kernels::trailing_left_singular_block(loewner, m);
    std::vector<Matrix> weights;
    weights.reserve(support.size());
    for (std::size_t k = 0; k < support.size(); ++k) {
        weights.push_back(w.middleCols(static_cast<Index>(k) * m, m));
    }
    return weights;
}

BlockBaryC solve_weights_bary_c(const SampleSet& samples, std::span<const Complex> support) {
    const Index m = samples.rows();
    const Index n = samples.cols();
    if (m != n) {
        throw ParameterError("solve_weights_baryC: only square samples are supported (got " + std::to_string(m) +
                             "x" + std::to_string(n) + ")");
    }
    if (support.empty()) { throw ParameterError("solve_weights_baryC: need at least one support point"); }
    reject_collisions(samples.points(), support, "solve_weights_baryC");

    const auto terms = static_cast<Index>(support.size());
    const auto ell = static_cast<Index>(samples.size());
    // Rows: C_0..C_d (n rows each) then D_0..D_d (m rows each); columns: samples.
    Matrix stacked = Matrix::Zero(terms * (n + m), ell * n);
    const Matrix identity = Matrix::Identity(n, n);
    for (Index k = 0; k < terms; ++k) {
        const Complex zk = support[static_cast<std::size_t>(k)];
        for (Index i = 0; i < ell; ++i) {
            const auto ii = static_cast<std::size_t>(i);
            const Complex c = 1.0 / (samples.point(ii) - zk);
            stacked.block(k * n, i * n, n, n) = -c * identity;
            stacked.block(terms * n + k * m, i * n, m, n) = c * samples.value(ii);
        }
    }
    const Matrix w = kernels::trailing_left_singular_block(stacked, m);

    BlockBaryC out;
    out.support.assign(support.begin(), support.end());
    for (Index k = 0; k < terms; ++k) {
        out.numerators.push_back(w.middleCols(k * n, n));
        out.denominators.push_back(w.middleCols(terms * n + k * m, m));
    }
    return out;
}

} // namespace blockrat
