#include "blockrat/aaa.hpp"

#include <cmath>
#include <limits>

#include "blockrat/kernels.hpp"

namespace blockrat {

namespace {

double error_scale(bool relative, double max_norm) {
    return relative && max_norm > 0.0 ? max_norm : 1.0;
}

} // namespace

AaaResult<ScalarBarycentric> aaa_scalar(std::span<const Complex> points, std::span<const Complex> values,
                                        const AaaOptions& opts) {
    if (points.empty()) { throw ParameterError("aaa_scalar: no sample points"); }
    if (points.size() != values.size()) { throw ParameterError("aaa_scalar: points and values differ in length"); }
    // Validates distinctness.
    (void)SampleSet::scalar(points, values);

    const std::size_t ell = points.size();
    double max_abs = 0.0;
    Complex mean = 0.0;
    for (const Complex& f : values) {
        max_abs = std::max(max_abs, std::abs(f));
        mean += f;
    }
    mean /= static_cast<double>(ell);
    const double scale = error_scale(opts.relative, max_abs);

    std::vector<Complex> approx(ell, mean);
    std::vector<bool> active(ell, true);
    AaaResult<ScalarBarycentric> result;
    std::vector<std::size_t>& chosen = result.support_indices;
    std::vector<Complex> weights;

    for (std::size_t j = 0;; ++j) {
        std::ptrdiff_t best = -1;
        double best_err = -1.0;
        for (std::size_t i = 0; i < ell; ++i) {
            if (!active[i]) { continue; }
            double e = std::abs(values[i] - approx[i]);
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
        if (j >= 1 && remaining < j + 1) {
            chosen.pop_back();
            break;
        }

        if (j == 0) {
            weights = {Complex(1.0)};
        } else {
            Matrix loewner(static_cast<Index>(remaining), static_cast<Index>(chosen.size()));
            Index row = 0;
            for (std::size_t i = 0; i < ell; ++i) {
                if (!active[i]) { continue; }
                for (std::size_t k = 0; k < chosen.size(); ++k) {
                    loewner(row, static_cast<Index>(k)) =
                      (values[i] - values[chosen[k]]) / (points[i] - points[chosen[k]]);
                }
                ++row;
            }
            const Vector w = kernels::trailing_right_singular_vector(loewner);
            weights.assign(w.data(), w.data() + w.size());
        }

        for (std::size_t i = 0; i < ell; ++i) {
            if (!active[i] || chosen.size() == 1) {
                approx[i] = values[chosen.size() == 1 ? chosen[0] : i];
                continue;
            }
            Complex num = 0.0;
            Complex den = 0.0;
            for (std::size_t k = 0; k < chosen.size(); ++k) {
                const Complex c = weights[k] / (points[i] - points[chosen[k]]);
                num += c * values[chosen[k]];
                den += c;
            }
            approx[i] = den == Complex(0.0) ? Complex(std::numeric_limits<double>::infinity()) : num / den;
        }
    }

    if (weights.size() != chosen.size()) { weights = {Complex(1.0)}; }
    for (std::size_t k = 0; k < chosen.size(); ++k) {
        result.model.support.push_back(points[chosen[k]]);
        result.model.values.push_back(values[chosen[k]]);
    }
    result.model.weights = weights;
    return result;
}

AaaResult<BlockBaryA> set_valued_aaa(const SampleSet& samples, const AaaOptions& opts) {
    const std::size_t ell = samples.size();
    const Matrix entries = samples.stacked_entries();  // ell x N
    const Index count = entries.cols();
    const double scale = error_scale(opts.relative, samples.max_norm());

    Matrix approx = entries.colwise().mean().replicate(static_cast<Index>(ell), 1);
    std::vector<bool> active(ell, true);
    AaaResult<BlockBaryA> result;
    std::vector<std::size_t>& chosen = result.support_indices;
    Vector weights;

    for (std::size_t j = 0;; ++j) {
        std::ptrdiff_t best = -1;
        double best_err = -1.0;
        for (std::size_t i = 0; i < ell; ++i) {
            if (!active[i]) { continue; }
            const auto ii = static_cast<Index>(i);
            double e = (entries.row(ii) - approx.row(ii)).norm();
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
        if (j >= 1 && remaining < j + 1) {
            chosen.pop_back();
            break;
        }

        const auto cols = static_cast<Index>(chosen.size());
        if (j == 0) {
            weights = Vector::Ones(1);
        } else {
            // One Loewner block per matrix entry, stacked vertically.
            const auto rem = static_cast<Index>(remaining);
            Matrix loewner(rem * count, cols);
            Index row = 0;
            for (std::size_t i = 0; i < ell; ++i) {
                if (!active[i]) { continue; }
                const auto ii = static_cast<Index>(i);
                for (Index k = 0; k < cols; ++k) {
                    const auto sk = static_cast<Index>(chosen[static_cast<std::size_t>(k)]);
                    const Complex c = 1.0 / (samples.point(i) - samples.point(static_cast<std::size_t>(sk)));
                    for (Index e = 0; e < count; ++e) {
                        loewner(e * rem + row, k) = (entries(ii, e) - entries(sk, e)) * c;
                    }
                }
                ++row;
            }
            weights = kernels::trailing_right_singular_vector(loewner);
        }

        for (std::size_t i = 0; i < ell; ++i) {
            const auto ii = static_cast<Index>(i);
            if (!active[i] || cols == 1) {
                approx.row(ii) = entries.row(cols == 1 ? static_cast<Index>(chosen[0]) : ii);
                continue;
            }
            Eigen::RowVectorXcd num = Eigen::RowVectorXcd::Zero(count);
            Complex den = 0.0;
            for (Index k = 0; k < cols; ++k) {
                const auto sk = chosen[static_cast<std::size_t>(k)];
                const Complex c = weights(k) / (samples.point(i) - samples.point(sk));
                num += c * entries.row(static_cast<Index>(sk));
                den += c;
            }
            if (den == Complex(0.0)) {
                approx.row(ii).setConstant(Complex(std::numeric_limits<double>::infinity()));
            } else {
                approx.row(ii) = num / den;
            }
        }
    }

    if (weights.size() != static_cast<Index>(chosen.size())) { weights = Vector::Ones(1); }
    for (std::size_t k = 0; k < chosen.size(); ++k) {
        result.model.support.push_back(samples.point(chosen[k]));
        result.model.values.push_back(samples.value(chosen[k]));
        result.model.weights.push_back(weights(static_cast<Index>(k)));
    }
    return result;
}

AaaResult<BlockBaryA> surrogate_aaa(const SampleSet& samples, const Vector& left, const Vector& right,
                                    const AaaOptions& opts) {
    if (left.size() != samples.rows() || right.size() != samples.cols()) {
        throw ParameterError("surrogate_aaa: direction vectors must have lengths " + std::to_string(samples.rows()) +
                             " and " + std::to_string(samples.cols()));
    }
    if (left.norm() == 0.0 || right.norm() == 0.0) {
        throw ParameterError("surrogate_aaa: direction vectors must be nonzero");
    }
    std::vector<Complex> surrogate(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        surrogate[i] = (left.transpose() * samples.value(i) * right)(0, 0);
    }
    const auto scalar = aaa_scalar(samples.points(), surrogate, opts);

    AaaResult<BlockBaryA> result;
    result.support_indices = scalar.support_indices;
    result.error_trace = scalar.error_trace;
    result.model.support = scalar.model.support;
    result.model.weights = scalar.model.weights;
    for (std::size_t idx : scalar.support_indices) { result.model.values.push_back(samples.value(idx)); }
    return result;
}

AaaResult<BlockBaryA> surrogate_aaa(const SampleSet& samples, std::uint64_t seed, const AaaOptions& opts) {
    GaussianStream stream(seed);
    const Vector left = random_unit_vector(samples.rows(), stream);
    const Vector right = random_unit_vector(samples.cols(), stream);
    return surrogate_aaa(samples, left, right, opts);
}

} // namespace blockrat
