#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "blockrat/types.hpp"

namespace blockrat {

/// Matrix-valued samples F(lambda_i) on a discrete set of distinct points.
///
/// Validated on construction: at least one point, pairwise distinct points
/// and a common m x n shape for every sample. Immutable afterwards.
class SampleSet {
  public:
    SampleSet(std::vector<Complex> points, std::vector<Matrix> values);

    /// Scalar convenience constructor producing 1x1 samples.
    static SampleSet scalar(std::span<const Complex> points, std::span<const Complex> values);

    const std::vector<Complex>& points() const noexcept { return points_; }
    const std::vector<Matrix>& values() const noexcept { return values_; }
    const Complex& point(std::size_t i) const { return points_[i]; }
    const Matrix& value(std::size_t i) const { return values_[i]; }

    std::size_t size() const noexcept { return points_.size(); }
    Index rows() const noexcept { return rows_; }
    Index cols() const noexcept { return cols_; }

    /// Largest Frobenius norm over all samples.
    double max_norm() const;

    /// Samples of entry (r, c) as a vector of length size().
    Vector entry(Index r, Index c) const;

    /// All entries stacked column-wise: an size() x (rows*cols) matrix whose
    /// column r + c*rows holds entry (r, c).
    Matrix stacked_entries() const;

  private:
    std::vector<Complex> points_;
    std::vector<Matrix> values_;
    Index rows_ = 0;
    Index cols_ = 0;
};

struct NoiseSpec {
    double std_dev = 0.0;
    std::uint64_t seed = 0;
};

/// Uniform interface over every fitted model: z -> R(z).
using Evaluator = std::function<Matrix(Complex)>;

/// Portable seeded Gaussian stream.
///
/// mt19937_64 (bit-exact across standard libraries), 53-bit uniforms and the
/// Box-Muller transform; std::normal_distribution is avoided because its
/// output is implementation-defined.
class GaussianStream {
  public:
    explicit GaussianStream(std::uint64_t seed) : engine_(seed) {}

    double uniform_open();  // in (0, 1]
    double next();          // N(0, 1)

  private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// ell points i*10^t with t equally spaced in [log10 a, log10 b].
std::vector<Complex> logspace_imaginary(double a, double b, std::size_t count);

/// Root mean squared Frobenius error of `model` over the sample set.
double rmse(const SampleSet& samples, const Evaluator& model);

/// Adds N(0, std_dev^2) independently to the real and imaginary part of every entry.
SampleSet add_noise(const SampleSet& samples, const NoiseSpec& spec);

/// Unit-norm complex vector with Gaussian real and imaginary parts.
Vector random_unit_vector(Index size, GaussianStream& stream);

} // namespace blockrat
