#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "blockrat/samples.hpp"

namespace blockrat {

/// Seed used by the scalar noise study unless overridden.
inline constexpr std::uint64_t kDefaultNoiseSeed = 42;

struct Problem {
    std::string name;
    SampleSet samples;
    std::optional<SampleSet> clean;  // noise-free samples when noise was added
    Evaluator truth;                 // analytic function, empty for file data
};

/// 2x2 symmetric rational test function with a common denominator of degree 6.
Matrix toy1_function(Complex z);
/// toy1 with the (1,2) denominator replaced by z^2 + z + 5 (nonsymmetric).
Matrix toy2_function(Complex z);
/// Non-constant part of the 2x2 buckling plate eigenproblem.
Matrix buckling_function(Complex z);
/// (z - 1) / (z^2 + z + 2) as a 1x1 matrix.
Matrix scalar_noise_function(Complex z);

Problem problem_toy1(std::size_t ell = 100);
Problem problem_toy2(std::size_t ell = 100);
Problem problem_buckling(std::size_t ell = 500);
Problem problem_scalar_noise(std::size_t ell = 500, double tau = 1e-2, std::uint64_t seed = kDefaultNoiseSeed);

/// Problem built from loaded samples (no analytic truth).
Problem problem_from_samples(std::string name, SampleSet samples);

/// Adds noise, keeping the previous samples as the clean reference.
Problem with_noise(Problem problem, const NoiseSpec& noise);

/// Registry lookup: toy1, toy2, buckling, scalar-noise.
Problem make_problem(const std::string& name);
std::vector<std::string> problem_names();

} // namespace blockrat
