#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "osb/operator.hpp"

namespace osb {

enum class StrategyKind { Cyclic, Greedy, Random };

std::string_view to_string(StrategyKind kind);

/// Produces the coordinate sequence driving the solver. A schedule instance
/// belongs to exactly one run; the run loop reports every change of the
/// residual vector through notify_update so stateful schedules can maintain
/// their candidate sets incrementally.
class Schedule {
public:
    virtual ~Schedule() = default;

    /// Next coordinate to update, given the current residual fluid.
    virtual Index next_coordinate(std::span<const double> fluid) = 0;

    /// Called after each step with the coordinates whose fluid changed.
    virtual void notify_update(std::span<const Index> touched,
                               std::span<const double> fluid) {
        (void)touched;
        (void)fluid;
    }

    /// True when next_coordinate always returns an index attaining
    /// max_i |fluid[i]| (lets the run loop read the sup-norm off the
    /// selection for free).
    virtual bool selects_max_residual() const { return false; }

    virtual std::string_view name() const = 0;

    /// Set only for seeded randomized schedules; recorded in trace headers.
    virtual std::optional<std::uint64_t> seed() const { return std::nullopt; }
};

/// 0, 1, ..., n-1, 0, 1, ... exactly.
class CyclicSchedule final : public Schedule {
public:
    explicit CyclicSchedule(Index n);

    Index next_coordinate(std::span<const double> fluid) override;
    std::string_view name() const override { return "cyclic"; }

private:
    Index n_;
    Index cursor_ = 0;
};

/// Uniform draws from a 64-bit Mersenne twister. The engine's output
/// sequence is fixed by the standard, so equal seeds give identical
/// schedules on every platform.
class RandomSchedule final : public Schedule {
public:
    RandomSchedule(Index n, std::uint64_t seed);

    Index next_coordinate(std::span<const double> fluid) override;
    std::string_view name() const override { return "random"; }
    std::optional<std::uint64_t> seed() const override { return seed_; }

private:
    Index n_;
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

/// Greedy max-|fluid| selection by full scan. Reference implementation;
/// also the right choice when the operator has no dependency structure.
class GreedyScanSchedule final : public Schedule {
public:
    Index next_coordinate(std::span<const double> fluid) override;
    bool selects_max_residual() const override { return true; }
    std::string_view name() const override { return "greedy"; }
};

/// Greedy selection backed by a lazy max-heap. Entries are invalidated by
/// comparing the stored |fluid| against the current one, so only the
/// coordinates reported through notify_update need re-insertion. Choices
/// are identical to GreedyScanSchedule, including lowest-index tie-breaks.
class GreedyHeapSchedule final : public Schedule {
public:
    Index next_coordinate(std::span<const double> fluid) override;
    void notify_update(std::span<const Index> touched,
                       std::span<const double> fluid) override;
    bool selects_max_residual() const override { return true; }
    std::string_view name() const override { return "greedy"; }

private:
    struct Entry {
        double value;
        Index index;
    };

    void rebuild(std::span<const double> fluid);

    std::vector<Entry> heap_;
    bool initialized_ = false;
};

/// Picks the heap-backed greedy schedule when the operator advertises a
/// dependency structure, the scan otherwise.
std::unique_ptr<Schedule> make_schedule(StrategyKind kind, const Operator& op,
                                        std::uint64_t seed);

}  // namespace osb
