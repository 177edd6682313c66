#include <doctest.h>

#include <cmath>
#include <cstring>
#include <filesystem>
#include <sstream>

#include "blockrat/problems.hpp"
#include "blockrat/sample_io.hpp"
#include "blockrat/sweep.hpp"
#include "support.hpp"

using namespace blockrat;

namespace {

bool symmetric_at_every_sample(const SampleSet& s) {
    for (const Matrix& v : s.values()) {
        if (v(0, 1) != v(1, 0)) { return false; }
    }
    return true;
}

const RunRecord& find(const std::vector<RunRecord>& records, const std::string& method, std::size_t order) {
    for (const RunRecord& r : records) {
        if (r.method == method && r.order == order) { return r; }
    }
    throw std::runtime_error("no record for " + method);
}

SweepOptions quick() {
    SweepOptions o;
    o.repeats = 1;
    return o;
}

} // namespace

TEST_CASE("toy1 problem") {
    const Problem p = problem_toy1();
    CHECK(p.samples.size() == 100);
    CHECK(p.samples.rows() == 2);
    const Matrix f0 = toy1_function(0.0);
    CHECK(f0(0, 0) == Complex(2.0));
    CHECK(f0(1, 1) == Complex(-2.0));
    CHECK(symmetric_at_every_sample(p.samples));
    CHECK(std::abs(p.samples.point(0) - Complex(0.0, 1.0)) <= 1e-15);
    CHECK(std::abs(p.samples.point(99) - Complex(0.0, 100.0)) <= 1e-12);
    const Complex z = p.samples.point(37);
    CHECK(std::abs(p.samples.value(37)(0, 1) - (3.0 - z) / (z * z + z - 5.0)) <= 1e-15);
}

TEST_CASE("toy2 problem") {
    const Problem p = problem_toy2();
    CHECK(!symmetric_at_every_sample(p.samples));
    const Complex z(0.0, 2.0);
    const Matrix f = toy2_function(z);
    CHECK(std::abs(f(0, 1) - (3.0 - z) / (z * z + z + 5.0)) <= 1e-15);
    CHECK(std::abs(f(1, 0) - (3.0 - z) / (z * z + z - 5.0)) <= 1e-15);
    CHECK(std::abs(f(0, 0) - 2.0 / (z + 1.0)) <= 1e-15);
}

TEST_CASE("buckling problem") {
    const Problem p = problem_buckling();
    CHECK(p.samples.size() == 500);
    CHECK(symmetric_at_every_sample(p.samples));
    for (const Matrix& v : p.samples.values()) { CHECK(std::abs(v(0, 0) - v(1, 1) - 6.0) <= 1e-12 * std::abs(v(0, 0))); }
    // z(1 - 2z cot 2z)/(tan z - z) = 4 (1 - 2 z^2 / 15) + O(z^4).
    const Complex z(0.0, 1e-2);
    const Complex series = 4.0 * (1.0 - 2.0 * z * z / 15.0);
    CHECK(std::abs(buckling_function(z)(0, 0) - 10.0 - series) <= 0.05);
    CHECK(std::abs(p.samples.value(0)(0, 0) - 10.0 - 4.0) <= 0.05);
}

TEST_CASE("scalar noise problem") {
    const Problem p = problem_scalar_noise();
    REQUIRE(p.clean.has_value());
    CHECK(p.samples.size() == 500);
    CHECK(p.samples.rows() == 1);
    const Complex z = p.clean->point(123);
    CHECK(std::abs(p.clean->value(123)(0, 0) - (z - 1.0) / (z * z + z + 2.0)) <= 1e-15);
    CHECK(std::abs(scalar_noise_function(1.0)(0, 0)) == 0.0);
    // Noise of standard deviation 1e-2 per real component.
    double sum = 0.0;
    for (std::size_t i = 0; i < p.samples.size(); ++i) {
        sum += std::norm(p.samples.value(i)(0, 0) - p.clean->value(i)(0, 0));
    }
    const double sigma = std::sqrt(sum / (2.0 * 500.0));
    CHECK(sigma >= 0.008);
    CHECK(sigma <= 0.012);
    CHECK(problem_scalar_noise(500, 1e-2, 7).samples.value(0) != p.samples.value(0));
}

TEST_CASE("registry") {
    for (const std::string& name : problem_names()) { CHECK(make_problem(name).name == name); }
    CHECK_THROWS_AS(make_problem("nope"), ParameterError);
}

TEST_CASE("sample file round trip") {
    const Problem p = problem_toy2(20);
    std::stringstream buffer;
    write_samples(buffer, p.samples);
    const SampleSet back = read_samples(buffer);
    REQUIRE(back.size() == p.samples.size());
    for (std::size_t i = 0; i < back.size(); ++i) {
        CHECK(back.point(i) == p.samples.point(i));
        CHECK(back.value(i) == p.samples.value(i));
    }
}

TEST_CASE("toy1 saved and loaded reproduces the samples") {
    const Problem p = problem_toy1();
    const auto path = std::filesystem::temp_directory_path() / "blockrat_test_toy1.txt";
    save_samples(path, p.samples);
    const SampleSet back = load_samples(path);
    std::filesystem::remove(path);
    const Evaluator exact = [&](Complex z) { return toy1_function(z); };
    CHECK(rmse(back, exact) == 0.0);
}

TEST_CASE("sample file errors") {
    SUBCASE("duplicate points") {
        std::istringstream in("1 1 3\n0 1\n1 0\n0 2\n2 0\n0 1\n3 0\n");
        try {
            read_samples(in);
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            const std::string msg = e.what();
            CHECK(msg.find('0') != std::string::npos);
            CHECK(msg.find('2') != std::string::npos);
        }
    }
    SUBCASE("malformed line") {
        std::istringstream in("# comment\n1 1 2\n0 1\n1 0\n0 2\nx 0\n");
        try {
            read_samples(in);
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find("line 6") != std::string::npos);
        }
    }
    SUBCASE("truncated file") {
        std::istringstream in("1 1 2\n0 1\n1 0\n");
        CHECK_THROWS_AS(read_samples(in), ParseError);
    }
    SUBCASE("missing file") { CHECK_THROWS_AS(load_samples("/nonexistent/blockrat.txt"), ParameterError); }
}

TEST_CASE("method names") {
    for (Method m : all_methods()) { CHECK(parse_method(method_name(m)) == m); }
    CHECK(!parse_method("aaa").has_value());
    CHECK(all_methods().size() == 7);
}

TEST_CASE("sweep recovers toy1 with block-AAA at order 5") {
    const Problem p = problem_toy1();
    const std::vector<Method> methods{Method::BlockAaa};
    const std::vector<std::size_t> orders{0, 1, 2, 3, 4, 5, 6};
    const auto records = run_sweep(p, methods, orders, quick());
    CHECK(records.size() == 7);
    const RunRecord& r = find(records, "block-aaa", 5);
    CHECK(r.ok());
    CHECK(r.rmse <= 1e-10);
    for (const RunRecord& rec : records) {
        CHECK(rec.rmse >= 0.0);
        CHECK(rec.time_ms >= 0.0);
    }
}

TEST_CASE("sweep recovers toy1 at the common denominator degree") {
    const Problem p = problem_toy1();
    const std::vector<Method> methods{Method::SetValuedAaa, Method::Rkfit, Method::VectorFitting};
    const std::vector<std::size_t> orders{6};
    const auto records = run_sweep(p, methods, orders, quick());
    REQUIRE(records.size() == 3);
    for (const RunRecord& r : records) {
        CAPTURE(r.method);
        CHECK(r.ok());
        CHECK(r.rmse <= 1e-8);
        CHECK(!r.trace.empty());
    }
}

TEST_CASE("empty method list gives a header-only CSV") {
    const auto records = run_sweep(problem_toy1(), std::vector<Method>{}, std::vector<std::size_t>{1, 2}, quick());
    CHECK(records.empty());
    std::ostringstream out;
    write_csv(out, records);
    CHECK(out.str() == "problem,method,order,rmse,time_ms,status\n");
}

TEST_CASE("incompatible cells are recorded and the sweep continues") {
    const std::vector<Method> methods{Method::AaaScalar, Method::BlockAaa};
    const auto records = run_sweep(problem_toy1(), methods, std::vector<std::size_t>{2}, quick());
    REQUIRE(records.size() == 2);
    CHECK(!records[0].ok());
    CHECK(records[0].status.rfind("error: ", 0) == 0);
    CHECK(std::isnan(records[0].rmse));
    CHECK(records[1].ok());
    std::ostringstream out;
    write_csv(out, records);
    CHECK(out.str().find("aaa-scalar,2,nan") != std::string::npos);
}

TEST_CASE("sweeps are reproducible") {
    const Problem p = problem_scalar_noise();
    const auto methods = all_methods();
    const std::vector<std::size_t> orders{3, 5};
    const auto a = run_sweep(p, methods, orders, quick());
    const auto b = run_sweep(problem_scalar_noise(), methods, orders, quick());
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CAPTURE(a[i].method);
        CHECK(a[i].status == b[i].status);
        CHECK(std::memcmp(&a[i].rmse, &b[i].rmse, sizeof(double)) == 0);
    }
}

TEST_CASE("rmse against the clean samples") {
    // At the true degree a least-squares fit averages the noise away:
    // expected error about tau * sqrt(2 * 5 / 500) ~ 1.4e-3.
    SweepOptions o = quick();
    const std::vector<Method> methods{Method::Rkfit};
    const std::vector<std::size_t> orders{2};
    const auto noisy = run_sweep(problem_scalar_noise(), methods, orders, o);
    o.against_truth = true;
    const auto clean = run_sweep(problem_scalar_noise(), methods, orders, o);
    REQUIRE(clean.size() == 1);
    CHECK(clean[0].rmse < 5e-3);
    CHECK(noisy[0].rmse > 2.0 * clean[0].rmse);
}

TEST_CASE("trace CSV") {
    const auto records =
      run_sweep(problem_toy1(), std::vector<Method>{Method::VectorFitting}, std::vector<std::size_t>{4}, quick());
    std::ostringstream out;
    write_trace_csv(out, records);
    const std::string s = out.str();
    CHECK(s.rfind("problem,method,order,iteration,value\n", 0) == 0);
    CHECK(s.find("toy1,vf,4,0,") != std::string::npos);
    CHECK(s.find("toy1,vf,4,4,") != std::string::npos);
}
