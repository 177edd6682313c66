#pragma once

#include <span>
#include <vector>

#include "blockrat/samples.hpp"
#include "blockrat/types.hpp"

namespace blockrat {

/// r(z) = sum w_k f_k / (z - z_k) / sum w_k / (z - z_k).
struct ScalarBarycentric {
    std::vector<Complex> support;
    std::vector<Complex> weights;
    std::vector<Complex> values;

    std::size_t order() const { return support.empty() ? 0 : support.size() - 1; }
};

/// Scalar weights with matrix values (bary-A). Interpolates at the support.
struct BlockBaryA {
    std::vector<Complex> support;
    std::vector<Complex> weights;
    std::vector<Matrix> values;

    std::size_t order() const { return support.empty() ? 0 : support.size() - 1; }
};

/// Matrix weights W_k (m x m) with matrix values (bary-B):
/// R(z) = (sum W_k/(z-z_k))^{-1} (sum W_k F_k/(z-z_k)).
struct BlockBaryB {
    std::vector<Complex> support;
    std::vector<Matrix> weights;
    std::vector<Matrix> values;

    std::size_t order() const { return support.empty() ? 0 : support.size() - 1; }
};

/// Independent numerator and denominator coefficients (bary-C):
/// R(z) = (sum D_k/(z-z_k))^{-1} (sum C_k/(z-z_k)). Non-interpolatory.
struct BlockBaryC {
    std::vector<Complex> support;
    std::vector<Matrix> numerators;    // C_k, m x n
    std::vector<Matrix> denominators;  // D_k, m x m

    std::size_t order() const { return support.empty() ? 0 : support.size() - 1; }
};

/// Condition-number bound above which a denominator solve is rejected.
inline constexpr double kMaxDenominatorCondition = 1e14;

/// Distance within which z counts as sitting on a support point:
/// 10 * machine epsilon * max |z_k|.
double support_tolerance(std::span<const Complex> support);

/// Index of the support point z coincides with, or -1.
std::ptrdiff_t find_support(std::span<const Complex> support, Complex z);

Complex evaluate(const ScalarBarycentric& r, Complex z);
Matrix evaluate(const BlockBaryA& r, Complex z);
Matrix evaluate(const BlockBaryB& r, Complex z);
Matrix evaluate(const BlockBaryC& r, Complex z);

template <typename Model>
Evaluator make_evaluator(Model model) {
    return [m = std::move(model)](Complex z) -> Matrix { return Matrix(evaluate(m, z)); };
}

inline Evaluator make_evaluator(ScalarBarycentric model) {
    return [m = std::move(model)](Complex z) -> Matrix { return Matrix::Constant(1, 1, evaluate(m, z)); };
}

/// bary-C coefficients C_k = W_k F_k, D_k = W_k.
BlockBaryC to_bary_c(const BlockBaryB& r);
/// bary-C coefficients C_k = w_k F_k, D_k = w_k I.
BlockBaryC to_bary_c(const BlockBaryA& r);

/// Block Loewner matrix with block (k, i) = (F(lambda_i) - F_k)/(lambda_i - z_k),
/// of size m(d+1) x (ell n).
Matrix block_loewner(std::span<const Complex> points, std::span<const Matrix> values,
                     std::span<const Complex> support, std::span<const Matrix> support_values);

/// Matrix weights for bary-B minimizing the linearized residual ||[W_0..W_d] L||_F
/// subject to unit Frobenius norm. Support points must not coincide with samples.
std::vector<Matrix> solve_weights_bary_b(const SampleSet& samples, std::span<const Complex> support,
                                         std::span<const Matrix> support_values);

/// Least-squares bary-C fit on fixed support points. Square samples only.
BlockBaryC solve_weights_bary_c(const SampleSet& samples, std::span<const Complex> support);

} // namespace blockrat
