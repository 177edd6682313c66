#pragma once

#include <string>
#include <vector>

#include "blockrat/aaa.hpp"
#include "blockrat/barycentric.hpp"

namespace blockrat {

struct BlockAaaResult {
    BlockBaryB model;
    std::vector<std::size_t> support_indices;
    std::vector<double> error_trace;       // ||F(z_j) - R_{j-1}(z_j)||_F for j = 0, 1, ...
    std::vector<std::string> diagnostics;  // points skipped because R_{j-1} was singular there
};

/// Block-AAA: greedy interpolation in the bary-B form with m x m matrix weights.
///
/// Each step picks the remaining sample with the largest Frobenius error,
/// then recomputes all weights as the m trailing left singular vectors of the
/// block Loewner matrix over the remaining samples (unit Frobenius norm).
/// Requires rows <= cols.
BlockAaaResult block_aaa(const SampleSet& samples, const AaaOptions& opts);

} // namespace blockrat
