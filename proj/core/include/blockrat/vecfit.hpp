#pragma once

#include <optional>
#include <span>
#include <vector>

#include "blockrat/samples.hpp"

namespace blockrat {

/// R(z) = D + sum_k C_k / (z - xi_k) with poles shared by all entries.
struct PoleResidue {
    Matrix constant;
    std::vector<Complex> poles;
    std::vector<Matrix> residues;
};

Matrix evaluate(const PoleResidue& r, Complex z);

inline Evaluator make_evaluator(PoleResidue model) {
    return [m = std::move(model)](Complex z) { return evaluate(m, z); };
}

struct VfOptions {
    std::size_t iterations = 5;
    std::optional<std::vector<Complex>> initial_poles;  // automatic when empty
    bool enforce_stability = false;                     // reflect poles into Re(xi) <= 0
};

struct VfResult {
    PoleResidue model;
    std::vector<double> rmse_trace;  // RMSE after each relocation's residue fit
    bool rank_deficient = false;     // some least-squares solve lost rank
};

/// Starting poles: conjugate pairs -beta/100 +- i*beta with beta log-spaced
/// over the sampled |lambda| range, plus one real pole for odd degree.
std::vector<Complex> default_vf_poles(std::span<const Complex> points, std::size_t degree);

/// Vector fitting of scalar samples with degree-d denominator.
VfResult vf_scalar(std::span<const Complex> points, std::span<const Complex> values, std::size_t degree,
                   const VfOptions& opts);

/// Vector fitting of all m*n entries with one common set of poles.
VfResult vf_matrix(const SampleSet& samples, std::size_t degree, const VfOptions& opts);

/// One pole relocation step on stacked entry samples (ell x N): returns the
/// zeros of the fitted denominator 1 + sum d_k/(z - xi_k).
std::vector<Complex> vf_relocate(std::span<const Complex> points, const Matrix& entries,
                                 std::span<const Complex> poles, bool* rank_deficient = nullptr);

} // namespace blockrat
