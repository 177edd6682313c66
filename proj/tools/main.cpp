#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "blockrat/problems.hpp"
#include "blockrat/sample_io.hpp"
#include "blockrat/sweep.hpp"

namespace {

std::vector<std::size_t> parse_orders(const std::string& spec) {
    const auto colon = spec.find(':');
    auto to_size = [&](const std::string& s) -> std::size_t {
        std::size_t pos = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(s, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos == 0 || pos != s.size() || s.front() == '-') {
            throw blockrat::ParameterError("invalid order range '" + spec + "'");
        }
        return static_cast<std::size_t>(v);
    };
    const std::size_t a = to_size(spec.substr(0, colon));
    const std::size_t b = colon == std::string::npos ? a : to_size(spec.substr(colon + 1));
    if (b < a) { throw blockrat::ParameterError("empty order range '" + spec + "'"); }
    std::vector<std::size_t> out;
    for (std::size_t d = a; d <= b; ++d) { out.push_back(d); }
    return out;
}

std::vector<blockrat::Method> parse_methods(const std::vector<std::string>& names) {
    std::vector<blockrat::Method> out;
    for (const auto& name : names) {
        const auto m = blockrat::parse_method(name);
        if (!m) { throw blockrat::ParameterError("unknown method '" + name + "'"); }
        out.push_back(*m);
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rational approximation of matrix-valued functions"};
    app.require_subcommand(1);

    std::string problem_name;
    std::string input;
    std::vector<std::string> methods;
    std::string orders = "0:10";
    double tol = 0.0;
    std::size_t iters = 5;
    double noise = 0.0;
    std::uint64_t seed = blockrat::kDefaultNoiseSeed;
    std::size_t repeats = 20;
    std::string out_path;
    bool trace = false;
    bool truth = false;

    auto* fit = app.add_subcommand("fit", "Fit a problem with one or more methods over a range of orders");
    auto* source = fit->add_option_group("source");
    source->add_option("--problem", problem_name, "Built-in problem: toy1, toy2, buckling, scalar-noise");
    source->add_option("--input", input, "Sample file (m n ell header, then point and matrix blocks)")
        ->check(CLI::ExistingFile);
    source->require_option(1);
    fit->add_option("--method", methods, "Comma separated: aaa-scalar, set-valued-aaa, surrogate-aaa, block-aaa, vf, "
                                         "rkfit, loewner")
        ->delimiter(',')
        ->required();
    fit->add_option("--orders", orders, "Order range a:b (inclusive)");
    fit->add_option("--tol", tol, "AAA-family stopping tolerance")->check(CLI::NonNegativeNumber);
    fit->add_option("--iters", iters, "VF / RKFIT iterations");
    auto* noise_opt = fit->add_option("--noise", noise, "Add complex Gaussian noise of this standard deviation")
                          ->check(CLI::NonNegativeNumber);
    fit->add_option("--seed", seed, "Noise seed")->needs(noise_opt);
    fit->add_option("--repeats", repeats, "Fits per cell for timing")->check(CLI::PositiveNumber);
    fit->add_option("--out", out_path, "CSV output file (default: stdout)");
    fit->add_flag("--trace", trace, "Also write <out>.trace.csv with per-iteration traces");
    fit->add_flag("--truth", truth, "Report RMSE against the clean samples when noise was added");

    std::string sample_problem;
    std::string sample_out;
    double sample_noise = 0.0;
    std::uint64_t sample_seed = blockrat::kDefaultNoiseSeed;
    auto* sample = app.add_subcommand("sample", "Write the samples of a built-in problem to a file");
    sample->add_option("--problem", sample_problem, "Built-in problem")->required();
    sample->add_option("--out", sample_out, "Output sample file")->required();
    auto* sample_noise_opt = sample->add_option("--noise", sample_noise, "Noise standard deviation");
    sample->add_option("--seed", sample_seed, "Noise seed")->needs(sample_noise_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (*sample) {
            blockrat::Problem p = blockrat::make_problem(sample_problem);
            if (sample_noise > 0.0) { p = blockrat::with_noise(std::move(p), {sample_noise, sample_seed}); }
            blockrat::save_samples(sample_out, p.samples);
            return 0;
        }

        blockrat::Problem problem = input.empty()
                                        ? blockrat::make_problem(problem_name)
                                        : blockrat::problem_from_samples(input, blockrat::load_samples(input));
        if (noise > 0.0) { problem = blockrat::with_noise(std::move(problem), {noise, seed}); }

        blockrat::SweepOptions options;
        options.tolerance = tol;
        options.iterations = iters;
        options.repeats = repeats;
        options.against_truth = truth;

        const auto method_list = parse_methods(methods);
        const auto order_list = parse_orders(orders);
        const auto records = blockrat::run_sweep(problem, method_list, order_list, options);

        if (out_path.empty()) {
            blockrat::write_csv(std::cout, records);
            if (trace) { blockrat::write_trace_csv(std::cout, records); }
        } else {
            std::ofstream out(out_path);
            if (!out) { throw blockrat::ParameterError("cannot open '" + out_path + "' for writing"); }
            blockrat::write_csv(out, records);
            if (trace) {
                std::ofstream tout(out_path + ".trace.csv");
                if (!tout) { throw blockrat::ParameterError("cannot open '" + out_path + ".trace.csv'"); }
                blockrat::write_trace_csv(tout, records);
            }
        }

        bool any_error = false;
        for (const auto& r : records) {
            if (!r.ok()) {
                any_error = true;
                std::cerr << r.method << " d=" << r.order << ": " << r.status << '\n';
            }
        }
        return any_error ? 2 : 0;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 1;
    }
}
