#include "blockrat/problems.hpp"

#include <cmath>

namespace blockrat {

namespace {

Problem sample_analytic(std::string name, const std::vector<Complex>& points, Evaluator f) {
    std::vector<Matrix> values;
    values.reserve(points.size());
    for (const Complex& z : points) { values.push_back(f(z)); }
    return Problem{std::move(name), SampleSet(points, std::move(values)), std::nullopt, std::move(f)};
}

} // namespace

Matrix toy1_function(Complex z) {
    Matrix f(2, 2);
    const Complex off = (3.0 - z) / (z * z + z - 5.0);
    f(0, 0) = 2.0 / (z + 1.0);
    f(0, 1) = off;
    f(1, 0) = off;
    f(1, 1) = (2.0 + z * z) / (z * z * z + 3.0 * z * z - 1.0);
    return f;
}

Matrix toy2_function(Complex z) {
    Matrix f = toy1_function(z);
    f(0, 1) = (3.0 - z) / (z * z + z + 5.0);
    return f;
}

Matrix buckling_function(Complex z) {
    const Complex tan_gap = std::tan(z) - z;
    const Complex sin2 = std::sin(2.0 * z);
    const Complex diag = z * (1.0 - 2.0 * z * std::cos(2.0 * z) / sin2) / tan_gap;
    const Complex off = z * (2.0 * z - sin2) / (sin2 * tan_gap);
    Matrix f(2, 2);
    f(0, 0) = diag + 10.0;
    f(0, 1) = off;
    f(1, 0) = off;
    f(1, 1) = diag + 4.0;
    return f;
}

Matrix scalar_noise_function(Complex z) {
    return Matrix::Constant(1, 1, (z - 1.0) / (z * z + z + 2.0));
}

Problem problem_toy1(std::size_t ell) {
    return sample_analytic("toy1", logspace_imaginary(1.0, 100.0, ell), toy1_function);
}

Problem problem_toy2(std::size_t ell) {
    return sample_analytic("toy2", logspace_imaginary(1.0, 100.0, ell), toy2_function);
}

Problem problem_buckling(std::size_t ell) {
    return sample_analytic("buckling", logspace_imaginary(1e-2, 10.0, ell), buckling_function);
}

Problem problem_scalar_noise(std::size_t ell, double tau, std::uint64_t seed) {
    Problem clean = sample_analytic("scalar-noise", logspace_imaginary(1e-1, 10.0, ell), scalar_noise_function);
    return with_noise(std::move(clean), NoiseSpec{tau, seed});
}

Problem problem_from_samples(std::string name, SampleSet samples) {
    return Problem{std::move(name), std::move(samples), std::nullopt, {}};
}

Problem with_noise(Problem problem, const NoiseSpec& noise) {
    SampleSet noisy = add_noise(problem.samples, noise);
    if (!problem.clean) { problem.clean = problem.samples; }
    problem.samples = std::move(noisy);
    return problem;
}

Problem make_problem(const std::string& name) {
    if (name == "toy1") { return problem_toy1(); }
    if (name == "toy2") { return problem_toy2(); }
    if (name == "buckling") { return problem_buckling(); }
    if (name == "scalar-noise") { return problem_scalar_noise(); }
    throw ParameterError("unknown problem '" + name + "'");
}

std::vector<std::string> problem_names() { return {"toy1", "toy2", "buckling", "scalar-noise"}; }

} // namespace blockrat
