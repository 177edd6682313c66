#include "blockrat/linearize.hpp"

#include "blockrat/kernels.hpp"

namespace blockrat {

std::vector<Complex> bary_poly_weights(std::span<const Complex> nodes) {
    std::vector<Complex> weights(nodes.size());
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        Complex prod = 1.0;
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            if (j == k) { continue; }
            if (nodes[j] == nodes[k]) {
                throw ParameterError("bary_poly_weights: duplicate node " + to_string(nodes[k]) + " at indices " +
                                     std::to_string(std::min(j, k)) + " and " + std::to_string(std::max(j, k)));
            }
            prod *= nodes[j] - nodes[k];
        }
        weights[k] = 1.0 / prod;
    }
    return weights;
}

Pencil build_pencil(std::span<const Matrix> coefficients, std::span<const Complex> nodes) {
    if (nodes.size() < 2) { throw ParameterError("build_pencil: need d >= 1 (at least two nodes)"); }
    if (coefficients.size() != nodes.size()) {
        throw ParameterError("build_pencil: " + std::to_string(coefficients.size()) + " coefficients for " +
                             std::to_string(nodes.size()) + " nodes");
    }
    const Index s = coefficients.front().rows();
    for (const Matrix& c : coefficients) {
        if (c.rows() != s || c.cols() != s) { throw ParameterError("build_pencil: coefficients must be square"); }
    }

    Pencil p;
    p.nodes.assign(nodes.begin(), nodes.end());
    p.weights = bary_poly_weights(nodes);
    p.block_size = s;

    const std::size_t d = nodes.size() - 1;
    std::vector<Matrix> values;  // N(z_k)
    for (std::size_t k = 0; k <= d; ++k) { values.push_back(coefficients[k] / p.weights[k]); }
    std::vector<Complex> theta(d + 1);
    for (std::size_t j = 1; j <= d; ++j) { theta[j] = p.weights[j - 1] / p.weights[j]; }

    const auto dim = static_cast<Index>(d) * s;
    p.l0 = Matrix::Zero(dim, dim);
    p.l1 = Matrix::Zero(dim, dim);
    const Matrix identity = Matrix::Identity(s, s);
    auto blk = [s](Matrix& m, std::size_t r, std::size_t c) {
        return m.block(static_cast<Index>(r) * s, static_cast<Index>(c) * s, s, s);
    };

    for (std::size_t k = 0; k + 1 < d; ++k) {
        blk(p.l0, 0, k) = nodes[k + 1] * values[k];
        blk(p.l1, 0, k) = values[k];
    }
    blk(p.l0, 0, d - 1) = nodes[d] * values[d - 1] + nodes[d - 1] / theta[d] * values[d];
    blk(p.l1, 0, d - 1) = values[d - 1] + values[d] / theta[d];

    for (std::size_t r = 1; r < d; ++r) {
        blk(p.l0, r, r - 1) = nodes[r - 1] * identity;
        blk(p.l0, r, r) = -nodes[r + 1] * theta[r] * identity;
        blk(p.l1, r, r - 1) = identity;
        blk(p.l1, r, r) = -theta[r] * identity;
    }
    return p;
}

std::vector<Complex> pencil_eigenvalues(const Pencil& pencil) {
    return kernels::finite_gen_eigenvalues(pencil.l0, pencil.l1);
}

Matrix evaluate_numerator(std::span<const Matrix> coefficients, std::span<const Complex> nodes, Complex z) {
    const std::vector<Complex> w = bary_poly_weights(nodes);
    if (const auto k = find_support(nodes, z); k >= 0) {
        const auto i = static_cast<std::size_t>(k);
        return coefficients[i] / w[i];
    }
    Matrix num = Matrix::Zero(coefficients.front().rows(), coefficients.front().cols());
    Complex den = 0.0;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        const Complex c = 1.0 / (z - nodes[k]);
        num += c * coefficients[k];
        den += c * w[k];
    }
    return num / den;
}

namespace {

void require_order(const BlockBaryC& r, const char* what) {
    if (r.support.size() < 2) { throw ParameterError(std::string(what) + ": need order d >= 1"); }
}

void require_square_model(const BlockBaryC& r, const char* what) {
    require_order(r, what);
    const Matrix& c0 = r.numerators.front();
    if (c0.rows() != c0.cols()) {
        throw ParameterError(std::string(what) + ": model must be square, got " + std::to_string(c0.rows()) + "x" +
                             std::to_string(c0.cols()));
    }
}

} // namespace

std::vector<Complex> nonlinear_eigs_bary_c(const BlockBaryC& r) {
    require_square_model(r, "nonlinear_eigs_baryC");
    return pencil_eigenvalues(build_pencil(r.numerators, r.support));
}

std::vector<Complex> denominator_eigs_bary_c(const BlockBaryC& r) {
    require_order(r, "denominator_eigs_baryC");
    return pencil_eigenvalues(build_pencil(r.denominators, r.support));
}

} // namespace blockrat
