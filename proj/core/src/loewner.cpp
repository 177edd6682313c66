#include "blockrat/loewner.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/LU>

#include "blockrat/barycentric.hpp"
#include "blockrat/kernels.hpp"

namespace blockrat {

namespace {

struct Projection {
    Matrix x;
    Matrix z;
    RealVector sigma;
};

Projection truncate(const Matrix& loewner, std::size_t order, std::vector<std::string>& warnings) {
    const auto svd = kernels::svd_full(loewner);
    const auto d = static_cast<Index>(order);
    if (svd.singular_values(0) == 0.0 || svd.singular_values(d - 1) <= kLoewnerRankTol * svd.singular_values(0)) {
        warnings.push_back("order " + std::to_string(order) + " exceeds the numerical rank of the Loewner matrix");
    }
    return {svd.u.leftCols(d), svd.v.leftCols(d), svd.singular_values};
}

void check_order(std::size_t half, std::size_t order) {
    if (order < 1 || order > half) {
        throw ParameterError("loewner: order must satisfy 1 <= d <= ell/2 = " + std::to_string(half) + ", got " +
                             std::to_string(order));
    }
}

} // namespace

Matrix evaluate(const LoewnerModel& model, Complex z) {
    const Matrix resolvent = model.a - z * model.e;
    Eigen::PartialPivLU<Matrix> lu(resolvent);
    if (!(lu.rcond() * kMaxDenominatorCondition > 1.0)) {
        throw EvaluationError("eval_loewner: singular resolvent at z = " + to_string(z), z);
    }
    return model.c * lu.solve(model.b);
}

std::vector<Complex> model_poles(const LoewnerModel& model) {
    return kernels::finite_gen_eigenvalues(model.a, model.e);
}

LoewnerPartition partition(const SampleSet& samples) {
    if (samples.size() < 2) { throw ParameterError("partition: need at least 2 samples"); }
    std::vector<std::size_t> order(samples.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::abs(samples.point(a)) < std::abs(samples.point(b));
    });

    LoewnerPartition out;
    std::size_t usable = order.size();
    if (usable % 2 == 1) {
        --usable;
        out.warnings.push_back("odd sample count: dropped point " + to_string(samples.point(order.back())));
    }
    for (std::size_t k = 0; k < usable; ++k) {
        const std::size_t i = order[k];
        if (k % 2 == 0) {
            out.left_points.push_back(samples.point(i));
            out.left_values.push_back(samples.value(i));
        } else {
            out.right_points.push_back(samples.point(i));
            out.right_values.push_back(samples.value(i));
        }
    }
    return out;
}

LoewnerFit loewner_scalar(std::span<const Complex> points, std::span<const Complex> values, std::size_t order) {
    const SampleSet samples = SampleSet::scalar(points, values);
    LoewnerPartition part = partition(samples);
    const std::size_t half = part.left_points.size();
    check_order(half, order);

    const auto h = static_cast<Index>(half);
    Matrix loewner(h, h);
    Matrix shifted(h, h);
    Vector v(h);
    Eigen::RowVectorXcd w(h);
    for (Index i = 0; i < h; ++i) {
        const Complex x = part.left_points[static_cast<std::size_t>(i)];
        const Complex fx = part.left_values[static_cast<std::size_t>(i)](0, 0);
        v(i) = fx;
        for (Index j = 0; j < h; ++j) {
            const Complex y = part.right_points[static_cast<std::size_t>(j)];
            const Complex fy = part.right_values[static_cast<std::size_t>(j)](0, 0);
            loewner(i, j) = (fx - fy) / (x - y);
            shifted(i, j) = (x * fx - y * fy) / (x - y);
        }
    }
    for (Index j = 0; j < h; ++j) { w(j) = part.right_values[static_cast<std::size_t>(j)](0, 0); }

    LoewnerFit fit;
    fit.warnings = std::move(part.warnings);
    const Projection p = truncate(loewner, order, fit.warnings);
    fit.singular_values = p.sigma;
    fit.model.e = p.x.adjoint() * loewner * p.z;
    fit.model.a = p.x.adjoint() * shifted * p.z;
    fit.model.b = p.x.adjoint() * v;
    fit.model.c = w * p.z;
    return fit;
}

LoewnerFit loewner_block(const SampleSet& samples, std::size_t order,
                         const std::optional<LoewnerDirections>& directions) {
    LoewnerPartition part = partition(samples);
    const std::size_t half = part.left_points.size();
    check_order(half, order);
    const Index m = samples.rows();
    const Index n = samples.cols();

    LoewnerDirections dirs;
    if (directions) {
        dirs = *directions;
        if (dirs.left.size() != half || dirs.right.size() != half) {
            throw ParameterError("loewner_block: need " + std::to_string(half) + " left and right directions");
        }
        for (std::size_t i = 0; i < half; ++i) {
            if (dirs.left[i].size() != m || dirs.right[i].size() != n) {
                throw ParameterError("loewner_block: direction " + std::to_string(i) + " has the wrong length");
            }
        }
    } else {
        for (std::size_t i = 0; i < half; ++i) {
            dirs.left.push_back(Vector::Unit(m, static_cast<Index>(i) % m));
            dirs.right.push_back(Vector::Unit(n, static_cast<Index>(i) % n));
        }
    }

    const auto h = static_cast<Index>(half);
    // Tangential data: left rows l_i^* F(x_i) and right columns F(y_j) r_j.
    Matrix v(h, n);
    Matrix w(m, h);
    for (Index i = 0; i < h; ++i) {
        const auto ii = static_cast<std::size_t>(i);
        v.row(i) = dirs.left[ii].adjoint() * part.left_values[ii];
        w.col(i) = part.right_values[ii] * dirs.right[ii];
    }
    Matrix loewner(h, h);
    Matrix shifted(h, h);
    for (Index i = 0; i < h; ++i) {
        const auto ii = static_cast<std::size_t>(i);
        const Complex x = part.left_points[ii];
        for (Index j = 0; j < h; ++j) {
            const auto jj = static_cast<std::size_t>(j);
            const Complex y = part.right_points[jj];
            const Complex lfx_r = (v.row(i) * dirs.right[jj])(0, 0);
            const Complex lfy_r = (dirs.left[ii].adjoint() * w.col(j))(0, 0);
            loewner(i, j) = (lfx_r - lfy_r) / (x - y);
            shifted(i, j) = (x * lfx_r - y * lfy_r) / (x - y);
        }
    }

    LoewnerFit fit;
    fit.warnings = std::move(part.warnings);
    const Projection p = truncate(loewner, order, fit.warnings);
    fit.singular_values = p.sigma;
    fit.model.e = p.x.adjoint() * loewner * p.z;
    fit.model.a = p.x.adjoint() * shifted * p.z;
    fit.model.b = p.x.adjoint() * v;
    fit.model.c = w * p.z;
    return fit;
}

} // namespace blockrat
