#include "blockrat/samples.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace blockrat {

std::string to_string(Complex z) {
    std::ostringstream os;
    os.precision(17);
    os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    return os.str();
}

SampleSet::SampleSet(std::vector<Complex> points, std::vector<Matrix> values)
  : points_(std::move(points)), values_(std::move(values)) {
    if (points_.empty()) { throw ParameterError("SampleSet: at least one sample point is required"); }
    if (points_.size() != values_.size()) {
        throw ParameterError("SampleSet: " + std::to_string(points_.size()) + " points but " +
                             std::to_string(values_.size()) + " values");
    }
    rows_ = values_.front().rows();
    cols_ = values_.front().cols();
    if (rows_ < 1 || cols_ < 1) { throw ParameterError("SampleSet: sample matrices must be nonempty"); }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i].rows() != rows_ || values_[i].cols() != cols_) {
            throw ParameterError("SampleSet: value " + std::to_string(i) + " has shape " +
                                 std::to_string(values_[i].rows()) + "x" + std::to_string(values_[i].cols()) +
                                 ", expected " + std::to_string(rows_) + "x" + std::to_string(cols_));
        }
    }

    std::vector<std::size_t> order(points_.size());
    for (std::size_t i = 0; i < order.size(); ++i) { order[i] = i; }
    auto less = [&](std::size_t a, std::size_t b) {
        const Complex& x = points_[a];
        const Complex& y = points_[b];
        return x.real() < y.real() || (x.real() == y.real() && x.imag() < y.imag());
    };
    std::sort(order.begin(), order.end(), less);
    for (std::size_t k = 1; k < order.size(); ++k) {
        if (points_[order[k]] == points_[order[k - 1]]) {
            const auto [first, second] = std::minmax(order[k - 1], order[k]);
            throw ParameterError("SampleSet: duplicate point " + to_string(points_[first]) + " at indices " +
                                 std::to_string(first) + " and " + std::to_string(second));
        }
    }
}

SampleSet SampleSet::scalar(std::span<const Complex> points, std::span<const Complex> values) {
    std::vector<Matrix> mats;
    mats.reserve(values.size());
    for (const Complex& v : values) { mats.push_back(Matrix::Constant(1, 1, v)); }
    return SampleSet(std::vector<Complex>(points.begin(), points.end()), std::move(mats));
}

double SampleSet::max_norm() const {
    double best = 0.0;
    for (const Matrix& v : values_) { best = std::max(best, v.norm()); }
    return best;
}

Vector SampleSet::entry(Index r, Index c) const {
    Vector out(static_cast<Index>(size()));
    for (std::size_t i = 0; i < size(); ++i) { out(static_cast<Index>(i)) = values_[i](r, c); }
    return out;
}

Matrix SampleSet::stacked_entries() const {
    Matrix out(static_cast<Index>(size()), rows_ * cols_);
    for (std::size_t i = 0; i < size(); ++i) {
        out.row(static_cast<Index>(i)) = values_[i].reshaped().transpose();
    }
    return out;
}

double GaussianStream::uniform_open() {
    // 53 random bits, shifted into (0, 1] so log() below is finite.
    const std::uint64_t bits = engine_() >> 11;
    return (static_cast<double>(bits) + 1.0) * 0x1.0p-53;
}

double GaussianStream::next() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = uniform_open();
    const double u2 = uniform_open();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

std::vector<Complex> logspace_imaginary(double a, double b, std::size_t count) {
    if (!(a > 0.0) || !(b > a) || !std::isfinite(b)) {
        throw ParameterError("logspace_imaginary: need 0 < a < b, got a=" + std::to_string(a) +
                             " b=" + std::to_string(b));
    }
    if (count < 2) { throw ParameterError("logspace_imaginary: need at least 2 points"); }
    const double lo = std::log10(a);
    const double hi = std::log10(b);
    std::vector<Complex> out(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double t = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
        out[i] = Complex(0.0, std::pow(10.0, t));
    }
    out.front() = Complex(0.0, a);
    out.back() = Complex(0.0, b);
    return out;
}

double rmse(const SampleSet& samples, const Evaluator& model) {
    double sum = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const Matrix r = model(samples.point(i));
        if (r.rows() != samples.rows() || r.cols() != samples.cols()) {
            throw ContractError("rmse: model returned " + std::to_string(r.rows()) + "x" +
                                std::to_string(r.cols()) + " for " + std::to_string(samples.rows()) + "x" +
                                std::to_string(samples.cols()) + " samples");
        }
        sum += (samples.value(i) - r).squaredNorm();
    }
    return std::sqrt(sum / static_cast<double>(samples.size()));
}

SampleSet add_noise(const SampleSet& samples, const NoiseSpec& spec) {
    if (!(spec.std_dev >= 0.0)) { throw ParameterError("add_noise: standard deviation must be nonnegative"); }
    if (spec.std_dev == 0.0) { return samples; }
    GaussianStream stream(spec.seed);
    std::vector<Matrix> noisy = samples.values();
    for (Matrix& v : noisy) {
        for (Index c = 0; c < v.cols(); ++c) {
            for (Index r = 0; r < v.rows(); ++r) {
                const double re = stream.next();
                const double im = stream.next();
                v(r, c) += Complex(spec.std_dev * re, spec.std_dev * im);
            }
        }
    }
    return SampleSet(samples.points(), std::move(noisy));
}

Vector random_unit_vector(Index size, GaussianStream& stream) {
    Vector v(size);
    for (Index i = 0; i < size; ++i) {
        const double re = stream.next();
        const double im = stream.next();
        v(i) = Complex(re, im);
    }
    return v / v.norm();
}

} // namespace blockrat
