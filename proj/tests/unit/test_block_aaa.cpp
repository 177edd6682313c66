#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "blockrat/block_aaa.hpp"
#include "blockrat/linearize.hpp"
#include "blockrat/problems.hpp"
#include "support.hpp"

using namespace blockrat;

namespace {

AaaOptions order(std::size_t d) {
    AaaOptions o;
    o.max_order = d;
    return o;
}

double weight_norm2(const BlockBaryB& r) {
    double s = 0.0;
    for (const Matrix& w : r.weights) { s += w.squaredNorm(); }
    return s;
}

} // namespace

TEST_CASE("block_aaa on constant data stops at order zero") {
    const Matrix g = testing::random_matrix(2, 2, 3);
    const auto pts = logspace_imaginary(1.0, 10.0, 15);
    const auto res = block_aaa(testing::sample(pts, [&](Complex) { return g; }), order(8));
    CHECK(res.model.order() == 0);
    CHECK(res.error_trace.back() == 0.0);
    CHECK(evaluate(res.model, Complex(0.0, 3.0)) == g);
}

TEST_CASE("block_aaa identifies the toy problems at order five") {
    for (const Problem& p : {problem_toy1(), problem_toy2()}) {
        CAPTURE(p.name);
        const auto res = block_aaa(p.samples, order(5));
        CHECK(res.model.order() == 5);
        CHECK(rmse(p.samples, make_evaluator(res.model)) <= 1e-10);
        CHECK(std::abs(weight_norm2(res.model) - 1.0) <= 1e-12);
        for (std::size_t k = 0; k < res.model.support.size(); ++k) {
            CHECK(evaluate(res.model, res.model.support[k]) == p.samples.value(res.support_indices[k]));
        }
    }
}

TEST_CASE("block_aaa weights are normalized at every order") {
    const Problem p = problem_toy2();
    for (std::size_t d = 1; d <= 6; ++d) {
        const auto res = block_aaa(p.samples, order(d));
        CHECK(std::abs(weight_norm2(res.model) - 1.0) <= 1e-12);
    }
}

TEST_CASE("block_aaa greedy choice attains the maximum error") {
    const Problem p = problem_buckling(120);
    const auto full = block_aaa(p.samples, order(5));
    for (std::size_t j = 1; j < full.support_indices.size(); ++j) {
        const auto prev = block_aaa(p.samples, order(j - 1));
        double worst = 0.0;
        for (std::size_t i = 0; i < p.samples.size(); ++i) {
            if (std::find(prev.support_indices.begin(), prev.support_indices.end(), i) != prev.support_indices.end()) {
                continue;
            }
            worst = std::max(worst, (p.samples.value(i) - evaluate(prev.model, p.samples.point(i))).norm());
        }
        CHECK(full.error_trace[j] == doctest::Approx(worst).epsilon(1e-10));
        CHECK((p.samples.value(full.support_indices[j]) - evaluate(prev.model, p.samples.point(full.support_indices[j])))
                .norm() == doctest::Approx(worst).epsilon(1e-10));
    }
}

TEST_CASE("block_aaa McMillan degree bound") {
    const Problem p = problem_toy2();
    for (std::size_t d = 1; d <= 6; ++d) {
        const auto res = block_aaa(p.samples, order(d));
        const auto poles = denominator_eigs_bary_c(to_bary_c(res.model));
        CHECK(poles.size() <= d * 2);
    }
}

TEST_CASE("block_aaa on rectangular data") {
    const auto pts = logspace_imaginary(1.0, 100.0, 60);
    const Matrix g = testing::random_matrix(2, 3, 9);
    const Matrix h = testing::random_matrix(2, 3, 10);
    const SampleSet s = testing::sample(pts, [&](Complex z) { return Matrix(g / (z + 1.0) + h / (z + 4.0)); });
    const auto res = block_aaa(s, order(2));
    CHECK(rmse(s, make_evaluator(res.model)) <= 1e-10);
    CHECK_THROWS_AS(block_aaa(testing::sample(pts, [](Complex z) { return Matrix::Constant(3, 2, z); }), order(2)),
                    ParameterError);
}

TEST_CASE("block_aaa stops before the weight problem is underdetermined") {
    const auto pts = logspace_imaginary(1.0, 100.0, 7);
    const SampleSet s = testing::sample(pts, [](Complex z) {
        Matrix f(2, 2);
        f << std::exp(z / 50.0), 1.0 / (z + 1.0), std::sin(z / 30.0), z;
        return f;
    });
    const auto res = block_aaa(s, order(10));
    // Rows m(d+1) must not exceed (l - d - 1) n: d = 2 gives 6 <= 8, d = 3 gives 8 > 6.
    CHECK(res.model.order() == 2);
}
