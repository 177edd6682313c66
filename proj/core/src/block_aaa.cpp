#include "blockrat/block_aaa.hpp"

#include <cmath>
#include <limits>

#include "blockrat/kernels.hpp"

namespace blockrat {

BlockAaaResult block_aaa(const SampleSet& samples, const AaaOptions& opts) {
    const Index m = samples.rows();
    const Index n = samples.cols();
    if (m > n) {
        throw ParameterError("block_aaa: needs rows <= cols, got " + std::to_string(m) + "x" + std::to_string(n));
    }
    const std::size_t ell = samples.size();
    const double scale = opts.relative && samples.max_norm() > 0.0 ? samples.max_norm() : 1.0;

    Matrix mean = Matrix::Zero(m, n);
    for (const Matrix& v : samples.values()) { mean += v; }
    mean /= static_cast<double>(ell);

    BlockAaaResult result;
    std::vector<std::size_t>& chosen = result.support_indices;
    std::vector<bool> active(ell, true);
    BlockBaryB current;

    for (std::size_t j = 0;; ++j) {
        std::ptrdiff_t best = -1;
        double best_err = -1.0;
        for (std::size_t i = 0; i < ell; ++i) {
            if (!active[i]) { continue; }
            double e = 0.0;
            if (j == 0) {
                e = (samples.value(i) - mean).norm();
            } else {
                try {
                    e = (samples.value(i) - evaluate(current, samples.point(i))).norm();
                } catch (const EvaluationError& err) {
                    result.diagnostics.push_back("order " + std::to_string(j - 1) + ": skipped sample " +
                                                 std::to_string(i) + " (" + err.what() + ")");
                    continue;
                }
            }
            if (std::isnan(e)) { e = std::numeric_limits<double>::infinity(); }
            if (e > best_err) {
                best = static_cast<std::ptrdiff_t>(i);
                best_err = e;
            }
        }
        if (best < 0) { break; }
        result.error_trace.push_back(best_err);
        if (best_err / scale <= opts.tolerance || j > opts.max_order) {
            if (chosen.empty()) { chosen.push_back(static_cast<std::size_t>(best)); }
            break;
        }

        const auto pick = static_cast<std::size_t>(best);
        chosen.push_back(pick);
        active[pick] = false;
        const std::size_t remaining = ell - chosen.size();
        // Fewer equations than unknown weight rows: keep the previous model.
        if (j >= 1 && static_cast<Index>(remaining) * n < m * static_cast<Index>(chosen.size())) {
            chosen.pop_back();
            break;
        }

        std::vector<Complex> rest_points;
        std::vector<Matrix> rest_values;
        rest_points.reserve(remaining);
        rest_values.reserve(remaining);
        for (std::size_t i = 0; i < ell; ++i) {
            if (active[i]) {
                rest_points.push_back(samples.point(i));
                rest_values.push_back(samples.value(i));
            }
        }
        BlockBaryB next;
        for (std::size_t idx : chosen) {
            next.support.push_back(samples.point(idx));
            next.values.push_back(samples.value(idx));
        }
        const Matrix loewner = block_loewner(rest_points, rest_values, next.support, next.values);
        const Matrix w = kernels::trailing_left_singular_block(loewner, m);
        for (std::size_t k = 0; k < chosen.size(); ++k) {
            next.weights.push_back(w.middleCols(static_cast<Index>(k) * m, m));
        }
        current = std::move(next);
    }

    if (current.support.size() != chosen.size()) {
        // Stopped before any weight solve: order-0 interpolant through the first pick.
        current = BlockBaryB{};
        current.support.push_back(samples.point(chosen.front()));
        current.values.push_back(samples.value(chosen.front()));
        current.weights.push_back(Matrix::Identity(m, m) / std::sqrt(static_cast<double>(m)));
    }
    result.model = std::move(current);
    return result;
}

} // namespace blockrat
