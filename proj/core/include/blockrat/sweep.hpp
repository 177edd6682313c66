#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "blockrat/problems.hpp"

namespace blockrat {

enum class Method { AaaScalar, SetValuedAaa, SurrogateAaa, BlockAaa, VectorFitting, Rkfit, Loewner };

std::string_view method_name(Method method);
std::optional<Method> parse_method(std::string_view name);
std::vector<Method> all_methods();

struct SweepOptions {
    double tolerance = 0.0;             // AAA-family stopping tolerance (0: run to the order)
    std::size_t iterations = 5;         // VF / RKFIT iterations
    std::size_t repeats = 20;           // fits per cell used to average the wall time
    std::uint64_t surrogate_seed = 1;   // random directions for surrogate-aaa
    bool against_truth = false;         // measure RMSE against the clean samples if available
};

struct RunRecord {
    std::string problem;
    std::string method;
    std::size_t order = 0;
    double rmse = 0.0;
    double time_ms = 0.0;
    std::string status = "ok";  // "ok" or "error: <message>"
    std::vector<double> trace;  // greedy errors (AAA family) or per-iteration RMSE (VF, RKFIT)

    bool ok() const { return status == "ok"; }
};

struct FitOutcome {
    Evaluator model;
    std::vector<double> trace;
};

/// One fit of the given method and order; throws on incompatibility or failure.
FitOutcome fit_method(Method method, const SampleSet& samples, std::size_t order, const SweepOptions& options);

std::vector<RunRecord> run_sweep(const Problem& problem, std::span<const Method> methods,
                                 std::span<const std::size_t> orders, const SweepOptions& options);

void write_csv(std::ostream& out, std::span<const RunRecord> records);
/// Long format: problem,method,order,iteration,value.
void write_trace_csv(std::ostream& out, std::span<const RunRecord> records);

} // namespace blockrat
