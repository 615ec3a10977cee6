#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace osb {

using Index = std::size_t;

/// Sparse update of a dense vector: parallel index/value arrays.
struct SparseVector {
    std::vector<Index> index;
    std::vector<double> value;

    void clear() {
        index.clear();
        value.clear();
    }
    std::size_t size() const noexcept { return index.size(); }
    void push(Index i, double v) {
        index.push_back(i);
        value.push_back(v);
    }
};

/// A fixed-point map on R^n. Concrete operators provide full evaluation and,
/// when a cheap closed form exists, the per-coordinate increment
/// H(x + delta*e_i) - H(x) together with the static dependency structure
/// dep(i) = set of output coordinates affected by input coordinate i.
class Operator {
public:
    virtual ~Operator() = default;

    virtual Index dimension() const = 0;

    /// out = H(x). Throws DomainError when x lies outside the map's domain.
    /// x and out have length dimension() and must not alias.
    virtual void eval(std::span<const double> x, std::span<double> out) const = 0;

    /// (H(x))[i]. The base version evaluates the full map and picks one
    /// entry; operators with cheap component formulas override it.
    virtual double eval_coordinate(std::span<const double> x, Index i) const;

    /// Appends the nonzero entries of H(x + delta*e_i) - H(x) to out
    /// (out is cleared first). The base version evaluates the map twice,
    /// which is correct but dense; overrides use closed forms.
    /// Both x and the displaced point must be in the domain.
    virtual void increment(std::span<const double> x, Index i, double delta,
                           SparseVector& out) const;

    /// True when increment() is a closed form rather than two evaluations.
    virtual bool has_increment_form() const { return false; }

    /// True when dependents() is available.
    virtual bool has_dependency_structure() const { return false; }

    /// Output coordinates affected by input coordinate i. Only valid when
    /// has_dependency_structure(); the base version throws.
    virtual std::span<const Index> dependents(Index i) const;
};

/// Convenience wrapper allocating the result.
std::vector<double> eval(const Operator& op, std::span<const double> x);

}  // namespace osb
