#pragma once

#include <cstddef>
#include <span>

namespace osb::kernels {

/// Execution policy for the data-parallel primitives. Every kernel has a
/// serial reference path and an OpenMP path that is bitwise identical to it
/// (reductions combine fixed contiguous chunks left to right, so chunking
/// never changes the result). Auto switches on size.
enum class Exec { Serial, Parallel, Auto };

/// Below this length Auto stays serial; fork/join overhead dominates there.
inline constexpr std::size_t kParallelCutoff = 1u << 15;

/// max_i |v[i]|; 0 for an empty span.
double inf_norm(std::span<const double> v, Exec exec = Exec::Auto);

/// Index of the largest |v[i]|, ties broken by lowest index. v must be
/// non-empty.
std::size_t argmax_abs(std::span<const double> v, Exec exec = Exec::Auto);

/// True when no entry is NaN or infinite.
bool all_finite(std::span<const double> v, Exec exec = Exec::Auto);

/// Index of the first non-finite entry, or v.size() when all are finite.
std::size_t first_non_finite(std::span<const double> v);

/// out = a + b (elementwise). out may alias a or b.
void add(std::span<const double> a, std::span<const double> b,
         std::span<double> out, Exec exec = Exec::Auto);

/// out = a - b (elementwise). out may alias a or b.
void subtract(std::span<const double> a, std::span<const double> b,
              std::span<double> out, Exec exec = Exec::Auto);

/// max_i |a[i] - b[i]|.
double max_abs_diff(std::span<const double> a, std::span<const double> b,
                    Exec exec = Exec::Auto);

/// Tracks (max_i |v[i]|, attaining index) across sparse updates of v without
/// rescanning: after a step that touched a known set of coordinates, the
/// maximum can only move if the touched set beats it or contained it.
/// Results are exactly those of a full rescan.
class MaxAbsTracker {
public:
    void reset(std::span<const double> v);
    void update(std::span<const std::size_t> touched, std::span<const double> v);

    double value() const noexcept { return value_; }
    std::size_t index() const noexcept { return index_; }

private:
    double value_ = 0.0;
    std::size_t index_ = 0;
};

}  // namespace osb::kernels
