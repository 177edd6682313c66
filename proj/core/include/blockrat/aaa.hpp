#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "blockrat/barycentric.hpp"
#include "blockrat/samples.hpp"

namespace blockrat {

struct AaaOptions {
    double tolerance = 0.0;       // stop when the greedy error drops to this level
    std::size_t max_order = 100;  // order d, i.e. at most d+1 support points
    bool relative = false;        // compare tolerance against error / max_i ||F(lambda_i)||_F
};

template <typename Model>
struct AaaResult {
    Model model;
    std::vector<std::size_t> support_indices;  // sample indices of the support points
    std::vector<double> error_trace;           // max greedy error of R_{j-1}, j = 0, 1, ...
};

/// Scalar AAA: greedy support selection with least-squares barycentric weights.
AaaResult<ScalarBarycentric> aaa_scalar(std::span<const Complex> points, std::span<const Complex> values,
                                        const AaaOptions& opts);

/// AAA with one set of support points and scalar weights shared by all entries.
AaaResult<BlockBaryA> set_valued_aaa(const SampleSet& samples, const AaaOptions& opts);

/// Scalar AAA on a^T F(z) b; the resulting support and weights carry the full
/// matrix values.
AaaResult<BlockBaryA> surrogate_aaa(const SampleSet& samples, const Vector& left, const Vector& right,
                                    const AaaOptions& opts);

/// Surrogate AAA with random unit directions drawn from `seed`.
AaaResult<BlockBaryA> surrogate_aaa(const SampleSet& samples, std::uint64_t seed, const AaaOptions& opts);

} // namespace blockrat
