#pragma once

#include <vector>

#include "osb/operator.hpp"
#include "osb/solver.hpp"

namespace osb {

/// The builtin 3-dimensional nonlinear map
///   H(x, y, z) = (sqrt(x*y) + 1, (x + z)/4 + 1, (x + y)/4),
/// defined for x*y >= 0 (checked exactly, no epsilon slack). The closed-form
/// fixed point is ((23+sqrt(379))/10, (23+sqrt(379))/30 + 16/15,
/// (23+sqrt(379))/30 + 4/15).
///
/// Increment forms, one per input coordinate:
///   x -> x': ( sqrt(y)*(sqrt(x')-sqrt(x)), (x'-x)/4, (x'-x)/4 )
///   y -> y': ( sqrt(x)*(sqrt(y')-sqrt(y)), 0,        (y'-y)/4 )
///   z -> z': ( 0,                          (z'-z)/4, 0        )
/// The closed forms hold on the nonnegative orthant in x and y; increment()
/// rejects points outside it.
class Example3Operator final : public Operator {
public:
    Index dimension() const override { return 3; }
    void eval(std::span<const double> x, std::span<double> out) const override;
    double eval_coordinate(std::span<const double> x, Index i) const override;
    void increment(std::span<const double> x, Index i, double delta,
                   SparseVector& out) const override;
    bool has_increment_form() const override { return true; }
    bool has_dependency_structure() const override { return true; }
    std::span<const Index> dependents(Index i) const override;
};

/// The closed-form fixed point, evaluated in double precision.
std::vector<double> example3_fixed_point();

/// Problem wrapping the builtin map. The default start is (4.2, 1, 1.5);
/// the known fixed point is always attached.
Problem make_example3_problem(std::vector<double> x0 = {4.2, 1.0, 1.5});

}  // namespace osb
