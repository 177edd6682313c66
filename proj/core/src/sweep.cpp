#include "blockrat/sweep.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <limits>
#include <ostream>

#include "blockrat/aaa.hpp"
#include "blockrat/block_aaa.hpp"
#include "blockrat/loewner.hpp"
#include "blockrat/rkfit.hpp"
#include "blockrat/vecfit.hpp"

namespace blockrat {

namespace {

constexpr std::array<std::pair<Method, std::string_view>, 7> kMethodNames{{
    {Method::AaaScalar, "aaa-scalar"},
    {Method::SetValuedAaa, "set-valued-aaa"},
    {Method::SurrogateAaa, "surrogate-aaa"},
    {Method::BlockAaa, "block-aaa"},
    {Method::VectorFitting, "vf"},
    {Method::Rkfit, "rkfit"},
    {Method::Loewner, "loewner"},
}};

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) { return s; }
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') { out += '"'; }
        out += (ch == '\n' || ch == '\r') ? ' ' : ch;
    }
    return out + '"';
}

AaaOptions aaa_options(std::size_t order, const SweepOptions& options) {
    AaaOptions opts;
    opts.tolerance = options.tolerance;
    opts.max_order = order;
    return opts;
}

} // namespace

std::string_view method_name(Method method) {
    for (const auto& [m, name] : kMethodNames) {
        if (m == method) { return name; }
    }
    throw ContractError("unknown method enumerator");
}

std::optional<Method> parse_method(std::string_view name) {
    for (const auto& [m, n] : kMethodNames) {
        if (n == name) { return m; }
    }
    return std::nullopt;
}

std::vector<Method> all_methods() {
    std::vector<Method> out;
    for (const auto& entry : kMethodNames) { out.push_back(entry.first); }
    return out;
}

FitOutcome fit_method(Method method, const SampleSet& samples, std::size_t order, const SweepOptions& options) {
    switch (method) {
    case Method::AaaScalar: {
        if (samples.rows() != 1 || samples.cols() != 1) {
            throw ParameterError("aaa-scalar requires 1x1 data, got " + std::to_string(samples.rows()) + "x" +
                                 std::to_string(samples.cols()));
        }
        const Vector f = samples.entry(0, 0);
        auto res = aaa_scalar(samples.points(), std::span<const Complex>(f.data(), static_cast<std::size_t>(f.size())),
                              aaa_options(order, options));
        return {make_evaluator(std::move(res.model)), std::move(res.error_trace)};
    }
    case Method::SetValuedAaa: {
        auto res = set_valued_aaa(samples, aaa_options(order, options));
        return {make_evaluator(std::move(res.model)), std::move(res.error_trace)};
    }
    case Method::SurrogateAaa: {
        auto res = surrogate_aaa(samples, options.surrogate_seed, aaa_options(order, options));
        return {make_evaluator(std::move(res.model)), std::move(res.error_trace)};
    }
    case Method::BlockAaa: {
        auto res = block_aaa(samples, aaa_options(order, options));
        return {make_evaluator(std::move(res.model)), std::move(res.error_trace)};
    }
    case Method::VectorFitting: {
        VfOptions opts;
        opts.iterations = options.iterations;
        auto res = vf_matrix(samples, order, opts);
        return {make_evaluator(std::move(res.model)), std::move(res.rmse_trace)};
    }
    case Method::Rkfit: {
        RkfitOptions opts;
        opts.degree = order;
        opts.iterations = options.iterations;
        auto res = rkfit_fit(samples, opts);
        return {make_evaluator(std::move(res.model)), std::move(res.rmse_trace)};
    }
    case Method::Loewner: {
        auto res = loewner_block(samples, order);
        return {make_evaluator(std::move(res.model)), {}};
    }
    }
    throw ContractError("unknown method enumerator");
}

std::vector<RunRecord> run_sweep(const Problem& problem, std::span<const Method> methods,
                                 std::span<const std::size_t> orders, const SweepOptions& options) {
    if (options.repeats == 0) { throw ParameterError("repeats must be at least 1"); }
    const SampleSet& reference = (options.against_truth && problem.clean) ? *problem.clean : problem.samples;

    std::vector<RunRecord> records;
    for (const Method method : methods) {
        for (const std::size_t order : orders) {
            RunRecord rec;
            rec.problem = problem.name;
            rec.method = std::string(method_name(method));
            rec.order = order;
            try {
                FitOutcome outcome;
                double total_ms = 0.0;
                for (std::size_t r = 0; r < options.repeats; ++r) {
                    const auto start = std::chrono::steady_clock::now();
                    outcome = fit_method(method, problem.samples, order, options);
                    const auto stop = std::chrono::steady_clock::now();
                    total_ms += std::chrono::duration<double, std::milli>(stop - start).count();
                }
                rec.time_ms = total_ms / static_cast<double>(options.repeats);
                rec.rmse = rmse(reference, outcome.model);
                rec.trace = std::move(outcome.trace);
            } catch (const std::exception& err) {
                rec.rmse = std::numeric_limits<double>::quiet_NaN();
                rec.time_ms = 0.0;
                rec.status = std::string("error: ") + err.what();
                rec.trace.clear();
            }
            records.push_back(std::move(rec));
        }
    }
    return records;
}

void write_csv(std::ostream& out, std::span<const RunRecord> records) {
    out << "problem,method,order,rmse,time_ms,status\n";
    for (const RunRecord& r : records) {
        out << csv_field(r.problem) << ',' << r.method << ',' << r.order << ',' << format_double(r.rmse) << ','
            << format_double(r.time_ms) << ',' << csv_field(r.status) << '\n';
    }
}

void write_trace_csv(std::ostream& out, std::span<const RunRecord> records) {
    out << "problem,method,order,iteration,value\n";
    for (const RunRecord& r : records) {
        for (std::size_t i = 0; i < r.trace.size(); ++i) {
            out << csv_field(r.problem) << ',' << r.method << ',' << r.order << ',' << i << ','
                << format_double(r.trace[i]) << '\n';
        }
    }
}

} // namespace blockrat
