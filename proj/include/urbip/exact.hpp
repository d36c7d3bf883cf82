#pragma once

#include "urbip/rational.hpp"

#include <optional>
#include <vector>

namespace urbip {

/// Reduced row echelon form of a rational matrix together with its pivot
/// columns, in increasing order.
struct RowEchelon {
  MatrixQ reduced;
  std::vector<Eigen::Index> pivots;
};

RowEchelon rowEchelon(MatrixQ m);

/// Exact rank. Rows are scaled to integers and reduced with Bareiss'
/// fraction-free elimination, so no intermediate rationals are formed.
Eigen::Index rank(const MatrixQ& m);

/// Columns form a basis of {x : m x = 0}; zero columns when the kernel is trivial.
MatrixQ nullspace(const MatrixQ& m);

/// Some exact solution of a x = b, or nullopt when the system is inconsistent.
std::optional<VectorQ> solve(const MatrixQ& a, const VectorQ& b);

/// Columns p_k - p_0 for a point set stored column-wise.
MatrixQ differences(const MatrixQ& points);

/// Appends a row of ones (the homogenizing coordinate).
MatrixQ homogenize(const MatrixQ& points);

/// Columns of `a` selected by `cols`.
MatrixQ selectColumns(const MatrixQ& a, const std::vector<int>& cols);

}  // namespace urbip
