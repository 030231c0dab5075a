#pragma once

#include <optional>
#include <vector>

#include "highgenus/rational.hpp"

namespace highgenus {

/// Indices of a maximal linearly independent subset of the rows, chosen
/// greedily in row order.
std::vector<int> independent_rows(const Mat& rows);

int rank(const Mat& rows);

Rational determinant(Mat a);

/// Some x >= 0 with A x = b, by two-phase-free simplex (phase I only) with
/// Bland's rule; empty if infeasible. A is given by rows.
std::optional<Vec> solve_nonnegative(const Mat& a, const Vec& b);

/// Some lambda with every entry >= 1 and sum_i lambda_i v_i = 0; empty if
/// none exists. Vectors may have length zero (then lambda = 1 works).
std::optional<Vec> positive_dependency(const Mat& vectors);

}  // namespace highgenus
