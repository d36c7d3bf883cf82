#pragma once

#include "urbip/rational.hpp"

#include <optional>
#include <vector>

namespace urbip::lp {

enum class Status { Feasible, Infeasible, Optimal, Unbounded };

enum class Lower { Zero, Unbounded };

/// Equality-form linear program over the rationals:
///   A x = b,  x_j >= 0 (or free),  x_j <= upper_j (when given),
/// with an optional objective to maximize.
struct Problem {
  MatrixQ A;
  VectorQ b;
  std::vector<Lower> lower;                  // one per variable
  std::vector<std::optional<Rational>> upper;  // empty, or one per variable
  std::optional<VectorQ> objective;

  Eigen::Index numVariables() const { return A.cols(); }
  Eigen::Index numRows() const { return A.rows(); }

  /// Rows of the expanded system: the A rows followed by one row per
  /// upper-bounded variable. Dual and Farkas vectors use this indexing.
  Eigen::Index numCertificateRows() const;

  /// Throws MalformedProblem on inconsistent shapes.
  void validate() const;
};

/// Convenience: all variables nonnegative, no upper bounds, no objective.
Problem nonnegativeSystem(MatrixQ A, VectorQ b);

struct Outcome {
  Status status = Status::Infeasible;
  VectorQ x;  // primal vertex, when Feasible or Optimal
  // Farkas vector y (Infeasible): y^t A_std <= 0 and y^t b_std > 0.
  // Optimal dual (Optimal): y^t A_std >= c_std and y^t b_std = value.
  VectorQ y;
  Rational value;  // objective value, when Optimal
};

/// Phase-1 simplex with Bland's rule. Returns Feasible with a vertex or
/// Infeasible with a Farkas vector. Any objective on `problem` is ignored.
Outcome solveFeasibility(const Problem& problem);

/// Two-phase simplex with Bland's rule; requires an objective.
Outcome maximize(const Problem& problem);

/// Exact feasibility of x for every constraint and bound.
bool satisfies(const Problem& problem, const VectorQ& x);

/// Exact check that y proves infeasibility of `problem`.
bool isFarkasCertificate(const Problem& problem, const VectorQ& y);

/// Exact check that y is dual feasible for the maximization with the given
/// value (strong duality certificate for optimality of some primal point).
bool isOptimalDual(const Problem& problem, const VectorQ& y, const Rational& value);

}  // namespace urbip::lp
