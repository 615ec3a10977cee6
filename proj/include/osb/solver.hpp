#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "osb/operator.hpp"
#include "osb/schedule.hpp"
#include "osb/trace.hpp"

namespace osb {

/// The pair of state vectors the iteration exploits: the accumulated
/// history and the residual fluid not yet absorbed into it. For every
/// reachable state, history + fluid = H(history) elementwise (conservation
/// identity); the fluid is therefore the residual of the history vector.
struct SolverState {
    std::vector<double> history;
    std::vector<double> fluid;
    std::uint64_t step_count = 0;
};

/// A fixed-point problem: the map, the initial vector, and (when an
/// analytic solution exists) the fixed point used for error measurement.
class Problem {
public:
    Problem(std::shared_ptr<const Operator> op, std::vector<double> x0,
            std::optional<std::vector<double>> known_fixed_point = std::nullopt);

    const Operator& op() const noexcept { return *op_; }
    std::shared_ptr<const Operator> op_ptr() const noexcept { return op_; }
    std::span<const double> x0() const noexcept { return x0_; }
    const std::optional<std::vector<double>>& known_fixed_point() const noexcept {
        return known_fixed_point_;
    }
    Index dimension() const noexcept { return x0_.size(); }

private:
    std::shared_ptr<const Operator> op_;
    std::vector<double> x0_;
    std::optional<std::vector<double>> known_fixed_point_;
};

/// Stop when ||fluid||_inf <= tolerance or the coordinate-update budget is
/// exhausted, whichever comes first. At least one of the two must be
/// active (budget > 0 or tolerance > 0).
struct StopRule {
    std::uint64_t max_coordinate_updates = 0;
    double tolerance = 0.0;
};

struct RunOptions {
    StopRule stop;
    Metric metric = Metric::Residual;
    /// Cross-check every closed-form increment against two full
    /// evaluations (1e-10 agreement) and throw ConsistencyError on
    /// mismatch. Debugging aid; off by default.
    bool verify_increments = false;
};

/// Reusable per-step buffers. After osb_step returns, `touched` holds the
/// coordinates whose fluid (or history) entry changed.
struct StepWorkspace {
    SparseVector delta;
    std::vector<Index> touched;
};

/// history = x0, fluid = H(x0) - x0, step_count = 0.
SolverState init_state(const Problem& problem);

/// One coordinate update: moves fluid[i] into history[i], then restores the
/// conservation identity by adding H(history') - H(history) to the fluid,
/// obtained through the operator's increment form. A zero fluid[i] is a
/// legal no-op that still counts one step.
void osb_step(SolverState& state, Index i, const Operator& op,
              StepWorkspace& workspace, bool verify_increment = false);
void osb_step(SolverState& state, Index i, const Operator& op);

/// history + fluid; equals H(history) by the conservation identity, i.e.
/// the estimate is one full application of the map ahead of the history.
std::vector<double> estimator(const SolverState& state);

/// ||fluid||_inf.
double residual_norm(const SolverState& state);

struct RunResult {
    SolverState state;
    Trace trace;
    bool converged = false;
};

/// Drives the schedule until the stop rule fires. Samples the trace at
/// every whole normalized iteration (n coordinate updates) and at
/// termination; `trace` keeps whatever was recorded if an error is thrown
/// mid-run. Labels (method/strategy/seed) are the caller's business.
/// Returns true when the tolerance was met.
bool run(const Problem& problem, Schedule& schedule, const RunOptions& options,
         SolverState& state, Trace& trace);

/// Convenience wrapper building the state and trace.
RunResult run(const Problem& problem, Schedule& schedule, const RunOptions& options);

}  // namespace osb
