#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "blockrat/samples.hpp"

namespace blockrat {

/// Projected realization R(z) = C (A - z E)^{-1} B of order d.
struct LoewnerModel {
    Matrix e;  // X^* L Z, d x d
    Matrix a;  // X^* Ls Z, d x d
    Matrix b;  // X^* V, d x n
    Matrix c;  // W Z, m x d

    Index order() const { return e.rows(); }
};

Matrix evaluate(const LoewnerModel& model, Complex z);

inline Evaluator make_evaluator(LoewnerModel model) {
    return [m = std::move(model)](Complex z) { return evaluate(m, z); };
}

/// Finite generalized eigenvalues of (A, E).
std::vector<Complex> model_poles(const LoewnerModel& model);

struct LoewnerPartition {
    std::vector<Complex> left_points;
    std::vector<Matrix> left_values;
    std::vector<Complex> right_points;
    std::vector<Matrix> right_values;
    std::vector<std::string> warnings;
};

/// Interleaved split after ordering by |lambda|: 1st, 3rd, ... go left and
/// 2nd, 4th, ... go right. An odd trailing point is dropped with a warning.
LoewnerPartition partition(const SampleSet& samples);

struct LoewnerDirections {
    std::vector<Vector> left;   // length m each, one per left point
    std::vector<Vector> right;  // length n each, one per right point
};

struct LoewnerFit {
    LoewnerModel model;
    RealVector singular_values;  // of the Loewner matrix
    std::vector<std::string> warnings;
};

/// Relative threshold on sigma_d / sigma_1 below which the order exceeds the
/// numerical rank of the Loewner matrix.
inline constexpr double kLoewnerRankTol = 1e-12;

LoewnerFit loewner_scalar(std::span<const Complex> points, std::span<const Complex> values, std::size_t order);

/// Tangential block Loewner fit; default directions cycle through the
/// standard basis vectors on both sides.
LoewnerFit loewner_block(const SampleSet& samples, std::size_t order,
                         const std::optional<LoewnerDirections>& directions = std::nullopt);

} // namespace blockrat
