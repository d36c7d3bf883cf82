#pragma once

#include "urbip/framework.hpp"

#include <utility>
#include <vector>

namespace urbip {

/// Vertices already certified universally rigid, as sorted index lists
/// into P and Q. The affine span of the marked P points equals that of the
/// marked Q points whenever both are nonempty.
struct KnownSet {
  std::vector<int> p;
  std::vector<int> q;

  bool empty() const { return p.empty() && q.empty(); }
  std::size_t size() const { return p.size() + q.size(); }
  bool containsP(int i) const;
  bool containsQ(int j) const;
  /// Indices not in the set, in increasing order.
  std::vector<int> complementP(Eigen::Index n) const;
  std::vector<int> complementQ(Eigen::Index m) const;

  friend bool operator==(const KnownSet&, const KnownSet&) = default;
};

/// Union of two index sets, sorted and deduplicated.
KnownSet merge(const KnownSet& a, const KnownSet& b);

/// Marked points as columns, P side first.
MatrixQ knownPoints(const BipartiteFramework& fw, const KnownSet& known);

/// Exact check of the equal-span property of a known set.
bool spanInvariantHolds(const BipartiteFramework& fw, const KnownSet& known);

struct ProjectedComplement {
  VectorQ conePoint;       // image of every known vertex
  MatrixQ p;               // projected unknown P vertices, in index order
  MatrixQ q;
  std::vector<int> indexP; // original indices of the columns of p
  std::vector<int> indexQ;
};

/// Orthogonal projection along the direction space of the known set's
/// affine hull, in ambient coordinates. Throws InvalidInput for an empty
/// known set and ClosureViolated when an unknown vertex lands on the cone
/// point.
ProjectedComplement projectOutKnownSet(const BipartiteFramework& fw, const KnownSet& known);

/// Deterministic functional c with c(v - p0) != 0 for every column v:
/// coordinate functionals e_1..e_d first, then (1, k, k^2, ..., k^{d-1})
/// for k = 1, 2, ... . Throws DegeneratePoint if some v equals p0.
VectorQ chooseSlideFunctional(const VectorQ& p0, const MatrixQ& points);

/// v -> p0 + (v - p0) / c(v - p0). Throws DegeneratePoint if c(v - p0) = 0.
MatrixQ slideAlong(const VectorQ& p0, const MatrixQ& points, const VectorQ& functional);

struct SlideResult {
  MatrixQ points;
  VectorQ functional;
};

SlideResult slideToHyperplane(const VectorQ& p0, const MatrixQ& points);

/// Adds unmarked vertices lying in the affine span of the known set until
/// nothing changes.
KnownSet affineClosure(const BipartiteFramework& fw, KnownSet known);

/// Framework points lifted into R^{d+1} (last coordinate 0) plus an apex
/// joined to every vertex. Vertex order: P, Q, apex.
struct ConedFramework {
  MatrixQ points;
  std::vector<std::pair<int, int>> edges;
  int apex = 0;
};

/// Throws ApexInSpan when the apex lies in the hyperplane x_{d+1} = 0.
ConedFramework cone(const BipartiteFramework& fw, const VectorQ& apex);

}  // namespace urbip
