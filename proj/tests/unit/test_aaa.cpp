#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "blockrat/aaa.hpp"
#include "blockrat/problems.hpp"
#include "support.hpp"

using namespace blockrat;

namespace {

std::vector<Complex> map_values(const std::vector<Complex>& pts, Complex (*f)(Complex)) {
    std::vector<Complex> out;
    for (const Complex& z : pts) { out.push_back(f(z)); }
    return out;
}

Complex noise_target(Complex z) { return (z - 1.0) / (z * z + z + 2.0); }

double weight_norm(const std::vector<Complex>& w) {
    double s = 0.0;
    for (const Complex& x : w) { s += std::norm(x); }
    return std::sqrt(s);
}

AaaOptions order(std::size_t d) {
    AaaOptions o;
    o.max_order = d;
    return o;
}

} // namespace

TEST_CASE("aaa_scalar on constant data stops at order zero") {
    const auto pts = logspace_imaginary(1.0, 10.0, 10);
    const std::vector<Complex> vals(10, Complex(2.0, -1.0));
    const auto res = aaa_scalar(pts, vals, order(10));
    CHECK(res.model.order() == 0);
    CHECK(res.error_trace.back() == 0.0);
    CHECK(evaluate(res.model, Complex(3.0, 3.0)) == Complex(2.0, -1.0));
}

TEST_CASE("aaa_scalar recovers 1/(z+1) at order one") {
    const auto pts = logspace_imaginary(1.0, 10.0, 10);
    const auto vals = map_values(pts, [](Complex z) { return 1.0 / (z + 1.0); });
    const auto res = aaa_scalar(pts, vals, order(1));
    CHECK(res.model.order() == 1);
    for (std::size_t i = 0; i < pts.size(); ++i) { CHECK(std::abs(evaluate(res.model, pts[i]) - vals[i]) <= 1e-12); }
}

TEST_CASE("aaa_scalar at order five interpolates six support points") {
    const auto pts = logspace_imaginary(0.1, 10.0, 500);
    const auto vals = map_values(pts, noise_target);
    const auto res = aaa_scalar(pts, vals, order(5));
    REQUIRE(res.model.support.size() == 6);
    for (std::size_t k = 0; k < 6; ++k) {
        CHECK(evaluate(res.model, res.model.support[k]) == vals[res.support_indices[k]]);
    }
    CHECK(std::abs(weight_norm(res.model.weights) - 1.0) <= 1e-12);
    const std::set<std::size_t> unique(res.support_indices.begin(), res.support_indices.end());
    CHECK(unique.size() == res.support_indices.size());
}

TEST_CASE("aaa_scalar terminates on type (d-1, d) data") {
    // Type (2, 3) with l >= 2d + 2.
    const auto pts = logspace_imaginary(0.1, 10.0, 40);
    const auto vals = map_values(pts, [](Complex z) { return (z * z - 2.0) / ((z + 1.0) * (z * z + 0.5 * z + 3.0)); });
    AaaOptions opts;
    opts.tolerance = 1e-10;
    opts.relative = true;
    opts.max_order = 20;
    const auto res = aaa_scalar(pts, vals, opts);
    CHECK(res.model.order() <= 3);
    double max_f = 0.0;
    double max_err = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        max_f = std::max(max_f, std::abs(vals[i]));
        max_err = std::max(max_err, std::abs(evaluate(res.model, pts[i]) - vals[i]));
    }
    CHECK(max_err <= 1e-10 * max_f);
}

TEST_CASE("aaa_scalar greedy trace attains the maximum") {
    const auto pts = logspace_imaginary(0.1, 10.0, 60);
    const auto vals = map_values(pts, [](Complex z) { return std::exp(-z) / (z + 0.5); });
    const auto res = aaa_scalar(pts, vals, order(6));
    // Re-scan: the error of the order-(j-1) model at the j-th selected point is its max over the remaining set.
    for (std::size_t j = 1; j < res.support_indices.size(); ++j) {
        AaaOptions o = order(j - 1);
        const auto prev = aaa_scalar(pts, vals, o);
        double worst = 0.0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const bool used = std::find(prev.support_indices.begin(), prev.support_indices.end(), i) !=
                              prev.support_indices.end();
            if (!used) { worst = std::max(worst, std::abs(evaluate(prev.model, pts[i]) - vals[i])); }
        }
        CHECK(res.error_trace[j] == doctest::Approx(worst).epsilon(1e-10));
    }
}

TEST_CASE("aaa_scalar stops when the Loewner problem becomes underdetermined") {
    const auto pts = logspace_imaginary(0.1, 10.0, 6);
    const auto vals = map_values(pts, [](Complex z) { return std::exp(z); });
    const auto res = aaa_scalar(pts, vals, order(50));
    // With 6 points, order 2 leaves 3 rows for 3 columns; order 3 would leave 2 rows for 4 columns.
    CHECK(res.model.order() == 2);
}

TEST_CASE("aaa_scalar rejects bad input") {
    const std::vector<Complex> none;
    CHECK_THROWS_AS(aaa_scalar(none, none, AaaOptions{}), ParameterError);
    const std::vector<Complex> pts{1.0, 2.0};
    const std::vector<Complex> one{1.0};
    CHECK_THROWS_AS(aaa_scalar(pts, one, AaaOptions{}), ParameterError);
    const std::vector<Complex> dup{1.0, 1.0};
    CHECK_THROWS_AS(aaa_scalar(dup, pts, AaaOptions{}), ParameterError);
}

TEST_CASE("set_valued_aaa on constant data") {
    const auto pts = logspace_imaginary(1.0, 10.0, 12);
    const Matrix g = testing::random_matrix(2, 3, 5);
    const SampleSet s = testing::sample(pts, [&](Complex) { return g; });
    const auto res = set_valued_aaa(s, order(5));
    CHECK(res.model.order() == 0);
    CHECK(res.error_trace.back() == 0.0);
    CHECK(rmse(s, make_evaluator(res.model)) == 0.0);
}

TEST_CASE("set_valued_aaa on 1x1 data reproduces aaa_scalar") {
    // Not rational, so every greedy step is well above rounding level.
    const auto pts = logspace_imaginary(0.1, 10.0, 80);
    const auto vals = map_values(pts, [](Complex z) { return std::exp(z) / (z + 2.0); });
    const auto scalar = aaa_scalar(pts, vals, order(5));
    const auto block = set_valued_aaa(SampleSet::scalar(pts, vals), order(5));
    CHECK(block.support_indices == scalar.support_indices);
    REQUIRE(block.model.weights.size() == scalar.model.weights.size());
    // Same weights up to a unimodular factor.
    Complex inner = 0.0;
    for (std::size_t k = 0; k < scalar.model.weights.size(); ++k) {
        inner += std::conj(scalar.model.weights[k]) * block.model.weights[k];
    }
    CHECK(std::abs(std::abs(inner) - 1.0) <= 1e-10);
}

TEST_CASE("set_valued_aaa recovers toy1 at order six") {
    const Problem p = problem_toy1();
    const auto res = set_valued_aaa(p.samples, order(6));
    CHECK(rmse(p.samples, make_evaluator(res.model)) <= 1e-8);
    double wn = 0.0;
    for (const Complex& w : res.model.weights) { wn += std::norm(w); }
    CHECK(std::abs(wn - 1.0) <= 1e-12);
}

TEST_CASE("surrogate_aaa with unit directions on 1x1 data matches set_valued_aaa") {
    const auto pts = logspace_imaginary(0.1, 10.0, 50);
    const SampleSet s = SampleSet::scalar(pts, map_values(pts, [](Complex z) { return std::exp(z) / (z + 2.0); }));
    const auto sur = surrogate_aaa(s, Vector::Ones(1), Vector::Ones(1), order(4));
    const auto set = set_valued_aaa(s, order(4));
    CHECK(sur.support_indices == set.support_indices);
    for (const Complex& z : testing::random_points(10, 3, 2.0)) {
        CHECK((evaluate(sur.model, z) - evaluate(set.model, z)).norm() <= 1e-10);
    }
}

TEST_CASE("surrogate_aaa recovers G/(z+1) at order one") {
    const Matrix g = testing::random_matrix(2, 3, 17);
    const auto pts = logspace_imaginary(1.0, 10.0, 20);
    const SampleSet s = testing::sample(pts, [&](Complex z) { return Matrix(g / (z + 1.0)); });
    const Vector a = testing::random_matrix(2, 1, 18).col(0);
    const Vector b = testing::random_matrix(3, 1, 19).col(0);
    const auto res = surrogate_aaa(s, a, b, order(1));
    CHECK(rmse(s, make_evaluator(res.model)) <= 1e-12);
}

TEST_CASE("surrogate_aaa on toy1 interpolates at its support") {
    const Problem p = problem_toy1();
    const auto res = surrogate_aaa(p.samples, 7, order(6));
    REQUIRE(res.model.support.size() == 7);
    for (std::size_t k = 0; k < 7; ++k) {
        CHECK(evaluate(res.model, res.model.support[k]) == p.samples.value(res.support_indices[k]));
    }
}

TEST_CASE("surrogate_aaa rejects bad directions") {
    const auto pts = logspace_imaginary(1.0, 10.0, 5);
    const SampleSet s = testing::sample(pts, [](Complex z) { return Matrix::Constant(2, 2, z); });
    CHECK_THROWS_AS(surrogate_aaa(s, Vector::Zero(2), Vector::Ones(2), AaaOptions{}), ParameterError);
    CHECK_THROWS_AS(surrogate_aaa(s, Vector::Ones(3), Vector::Ones(2), AaaOptions{}), ParameterError);
}

TEST_CASE("relative tolerance scales by the largest sample") {
    const auto pts = logspace_imaginary(0.1, 10.0, 100);
    auto vals = map_values(pts, noise_target);
    for (Complex& v : vals) { v *= 1e6; }
    AaaOptions abs;
    abs.tolerance = 1e-6;
    AaaOptions rel = abs;
    rel.relative = true;
    abs.max_order = rel.max_order = 30;
    CHECK(aaa_scalar(pts, vals, rel).model.order() < aaa_scalar(pts, vals, abs).model.order() + 1);
    CHECK(aaa_scalar(pts, vals, rel).error_trace.back() <= 1e-6 * 1e6 * 2.0);
}
