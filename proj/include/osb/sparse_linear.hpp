#pragma once

#include <filesystem>
#include <span>
#include <vector>

#include "osb/kernels.hpp"
#include "osb/operator.hpp"
#include "osb/solver.hpp"

namespace osb {

struct Triplet {
    Index row;
    Index col;
    double value;
};

/// A linear map X -> P*X stored both column-compressed (for per-coordinate
/// diffusion and the dependency structure) and row-compressed (for the
/// gather-style mat-vec, which parallelizes without atomics). Entries are
/// validated once at construction: finite values, in-range indices, no
/// duplicate (row, col) pairs.
class SparseLinearOperator final : public Operator {
public:
    SparseLinearOperator(Index n, std::vector<Triplet> entries);

    Index dimension() const override { return n_; }
    void eval(std::span<const double> x, std::span<double> out) const override;
    double eval_coordinate(std::span<const double> x, Index i) const override;
    void increment(std::span<const double> x, Index i, double delta,
                   SparseVector& out) const override;
    bool has_increment_form() const override { return true; }
    bool has_dependency_structure() const override { return true; }
    std::span<const Index> dependents(Index i) const override;

    /// out = P*x with an explicit execution policy (eval uses Auto).
    void multiply(std::span<const double> x, std::span<double> out,
                  kernels::Exec exec) const;

    struct ColumnView {
        std::span<const Index> row;
        std::span<const double> value;
    };
    ColumnView column(Index i) const;

    std::size_t nonzero_count() const noexcept { return csr_value_.size(); }

private:
    Index n_;
    // CSR
    std::vector<Index> csr_row_ptr_;
    std::vector<Index> csr_col_;
    std::vector<double> csr_value_;
    // CSC
    std::vector<Index> csc_col_ptr_;
    std::vector<Index> csc_row_;
    std::vector<double> csc_value_;
};

/// Specialized linear update: moves fluid[i] into history[i], zeroes
/// fluid[i], then diffuses the moved amount along column i of P. States
/// produced are identical to the generic osb_step on the same operator.
void d_iteration_step(SolverState& state, Index i, const SparseLinearOperator& op);

/// Reads the "coordinate real general" Matrix Market subset: banner,
/// %-comments, "rows cols nnz" size line, then 1-based "row col value"
/// entries. The matrix must be square. Throws ParseError (with the
/// offending line number) on malformed input, IoError when the file cannot
/// be read.
SparseLinearOperator load_matrix_market(const std::filesystem::path& path);

}  // namespace osb
