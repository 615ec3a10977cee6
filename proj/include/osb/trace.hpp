#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "osb/operator.hpp"

namespace osb {

class Problem;

/// What a trace's error column measures.
enum class Metric {
    Distance,  ///< sup-norm distance of the estimate to the known fixed point
    Residual,  ///< sup-norm of H(estimate) - estimate
};

std::string_view to_string(Metric metric);

struct TraceSample {
    double normalized_iteration;
    double error;
};

/// Sampled convergence curve of one solver run.
struct Trace {
    std::string method;
    std::string strategy;  // empty for baseline methods
    std::optional<std::uint64_t> seed;
    Metric metric = Metric::Residual;
    std::vector<TraceSample> samples;

    /// Appends a sample; the x-axis must be strictly increasing.
    void append(double normalized_iteration, double error);
};

/// Coordinate updates divided by the dimension; one baseline sweep counts
/// as exactly 1.0.
double normalized_iteration(std::uint64_t coordinate_updates, Index n);

/// Metric::Distance requires the problem's known fixed point (UsageError
/// otherwise); Metric::Residual evaluates the operator at the estimate.
double error_metric(std::span<const double> estimate, const Problem& problem,
                    Metric metric);

/// Formats a double with 17 significant digits (round-trips exactly),
/// locale-independent. The CSV number format.
std::string format_double17(double value);

/// Writes "method,strategy,seed,normalized_iteration,error" rows, one block
/// per trace in input order. All traces must share one metric.
void export_csv(std::span<const Trace> traces, std::ostream& out);

/// Same, to a file. Throws IoError when the file cannot be written.
void export_csv(std::span<const Trace> traces, const std::filesystem::path& path);

}  // namespace osb
