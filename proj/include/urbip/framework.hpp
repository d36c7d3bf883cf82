#pragma once

#include "urbip/rational.hpp"

#include <vector>

namespace urbip {

/// Complete bipartite framework K(n, m) in R^d. Points are stored
/// column-wise, so P is d x n and Q is d x m.
struct BipartiteFramework {
  MatrixQ P;
  MatrixQ Q;

  BipartiteFramework() = default;
  /// Throws InvalidInput unless n >= 1 and both sides share the dimension.
  BipartiteFramework(MatrixQ p, MatrixQ q);

  Eigen::Index dim() const { return P.rows(); }
  Eigen::Index n() const { return P.cols(); }
  Eigen::Index m() const { return Q.cols(); }

  /// [P, Q], d x (n + m).
  MatrixQ allPoints() const;

  /// Configuration matrices with the homogenizing row of ones appended.
  MatrixQ configurationP() const;
  MatrixQ configurationQ() const;

  /// The subframework induced by the given column indices.
  BipartiteFramework subframework(const std::vector<int>& p, const std::vector<int>& q) const;

  friend bool operator==(const BipartiteFramework& a, const BipartiteFramework& b) {
    return a.P.rows() == b.P.rows() && a.P.cols() == b.P.cols() && a.Q.cols() == b.Q.cols() &&
           a.Q.rows() == b.Q.rows() && a.P == b.P && a.Q == b.Q;
  }
};

/// Builds a framework from nested integer-or-rational literals; handy in
/// tests and fixtures. Each inner list is one point.
BipartiteFramework makeFramework(Eigen::Index d, const std::vector<std::vector<Rational>>& p,
                                 const std::vector<std::vector<Rational>>& q);

}  // namespace urbip
