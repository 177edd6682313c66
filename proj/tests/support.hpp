#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "blockrat/samples.hpp"

namespace testing {

using blockrat::Complex;
using blockrat::Index;
using blockrat::Matrix;

// Standard complex Gaussian entries from a fixed seed.
inline Matrix random_matrix(Index rows, Index cols, std::uint64_t seed) {
    blockrat::GaussianStream g(seed);
    Matrix m(rows, cols);
    for (Index c = 0; c < cols; ++c) {
        for (Index r = 0; r < rows; ++r) {
            const double re = g.next();
            m(r, c) = Complex(re, g.next());
        }
    }
    return m;
}

inline std::vector<Complex> random_points(std::size_t count, std::uint64_t seed, double scale = 1.0) {
    blockrat::GaussianStream g(seed);
    std::vector<Complex> out;
    for (std::size_t i = 0; i < count; ++i) {
        const double re = g.next();
        out.emplace_back(scale * re, scale * g.next());
    }
    return out;
}

inline blockrat::SampleSet sample(const std::vector<Complex>& points, const blockrat::Evaluator& f) {
    std::vector<Matrix> values;
    for (const Complex& z : points) { values.push_back(f(z)); }
    return blockrat::SampleSet(points, values);
}

// Largest distance from each expected value to its nearest computed value.
inline double set_distance(const std::vector<Complex>& expected, const std::vector<Complex>& computed) {
    double worst = 0.0;
    for (const Complex& e : expected) {
        double best = INFINITY;
        for (const Complex& c : computed) { best = std::min(best, std::abs(e - c)); }
        worst = std::max(worst, best);
    }
    return worst;
}

} // namespace testing
