#include "urbip/reduction.hpp"

#include "urbip/error.hpp"
#include "urbip/exact.hpp"
#include "urbip/geometry.hpp"

#include <algorithm>

namespace urbip {

namespace {

std::vector<int> complementOf(const std::vector<int>& marked, Eigen::Index count) {
  std::vector<int> out;
  for (int i = 0; i < count; ++i)
    if (!std::binary_search(marked.begin(), marked.end(), i)) out.push_back(i);
  return out;
}

std::vector<int> sortedUnion(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

}  // namespace

bool KnownSet::containsP(int i) const { return std::binary_search(p.begin(), p.end(), i); }
bool KnownSet::containsQ(int j) const { return std::binary_search(q.begin(), q.end(), j); }
std::vector<int> KnownSet::complementP(Eigen::Index n) const { return complementOf(p, n); }
std::vector<int> KnownSet::complementQ(Eigen::Index m) const { return complementOf(q, m); }

KnownSet merge(const KnownSet& a, const KnownSet& b) {
  return {sortedUnion(a.p, b.p), sortedUnion(a.q, b.q)};
}

MatrixQ knownPoints(const BipartiteFramework& fw, const KnownSet& known) {
  MatrixQ out(fw.dim(), static_cast<Eigen::Index>(known.size()));
  Eigen::Index k = 0;
  for (int i : known.p) out.col(k++) = fw.P.col(i);
  for (int j : known.q) out.col(k++) = fw.Q.col(j);
  return out;
}

bool spanInvariantHolds(const BipartiteFramework& fw, const KnownSet& known) {
  if (known.empty()) return true;
  if (known.p.empty() || known.q.empty()) return false;
  const Eigen::Index combined = affineSpanDim(knownPoints(fw, known));
  return affineSpanDim(selectColumns(fw.P, known.p)) == combined &&
         affineSpanDim(selectColumns(fw.Q, known.q)) == combined;
}

ProjectedComplement projectOutKnownSet(const BipartiteFramework& fw, const KnownSet& known) {
  if (known.empty()) throw Error(ErrorCode::InvalidInput, "projection needs a nonempty known set");
  const MatrixQ anchorSet = knownPoints(fw, known);
  const VectorQ anchor = anchorSet.col(0);

  const MatrixQ diffs = differences(anchorSet);
  const RowEchelon e = rowEchelon(diffs);
  std::vector<int> independent(e.pivots.begin(), e.pivots.end());
  const MatrixQ basis = selectColumns(diffs, independent);
  const MatrixQ gram = basis.transpose() * basis;

  auto project = [&](const VectorQ& v) -> VectorQ {
    if (basis.cols() == 0) return v;
    const VectorQ rel = v - anchor;
    const auto coeffs = solve(gram, VectorQ(basis.transpose() * rel));
    return v - basis * (*coeffs);
  };

  ProjectedComplement out;
  out.conePoint = anchor;
  out.indexP = known.complementP(fw.n());
  out.indexQ = known.complementQ(fw.m());
  out.p.resize(fw.dim(), static_cast<Eigen::Index>(out.indexP.size()));
  out.q.resize(fw.dim(), static_cast<Eigen::Index>(out.indexQ.size()));
  for (std::size_t k = 0; k < out.indexP.size(); ++k) out.p.col(k) = project(fw.P.col(out.indexP[k]));
  for (std::size_t k = 0; k < out.indexQ.size(); ++k) out.q.col(k) = project(fw.Q.col(out.indexQ[k]));

  auto check = [&](const MatrixQ& pts, const std::vector<int>& idx, const char* side) {
    for (Eigen::Index k = 0; k < pts.cols(); ++k)
      if (pts.col(k) == anchor)
        throw Error(ErrorCode::ClosureViolated, std::string(side) + std::to_string(idx[k]) +
                                                    " lies in the span of the known set");
  };
  check(out.p, out.indexP, "P");
  check(out.q, out.indexQ, "Q");
  return out;
}

VectorQ chooseSlideFunctional(const VectorQ& p0, const MatrixQ& points) {
  const Eigen::Index d = p0.size();
  const MatrixQ rel = points.colwise() - p0;
  for (Eigen::Index k = 0; k < rel.cols(); ++k)
    if (rel.col(k).isZero())
      throw Error(ErrorCode::DegeneratePoint, "point " + std::to_string(k) + " equals the cone point");

  auto works = [&](const VectorQ& c) {
    for (Eigen::Index k = 0; k < rel.cols(); ++k)
      if (c.dot(rel.col(k)) == 0) return false;
    return true;
  };
  for (Eigen::Index i = 0; i < d; ++i) {
    VectorQ c = VectorQ::Zero(d);
    c(i) = 1;
    if (works(c)) return c;
  }
  // Each nonzero v kills (1, k, ..., k^{d-1}) for at most d-1 values of k.
  for (long k = 1;; ++k) {
    VectorQ c(d);
    Rational power = 1;
    for (Eigen::Index i = 0; i < d; ++i, power *= k) c(i) = power;
    if (works(c)) return c;
  }
}

MatrixQ slideAlong(const VectorQ& p0, const MatrixQ& points, const VectorQ& functional) {
  MatrixQ out(points.rows(), points.cols());
  for (Eigen::Index k = 0; k < points.cols(); ++k) {
    const VectorQ rel = points.col(k) - p0;
    const Rational height = functional.dot(rel);
    if (height == 0)
      throw Error(ErrorCode::DegeneratePoint,
                  "point " + std::to_string(k) + " is parallel to the slide hyperplane");
    out.col(k) = p0 + rel / height;
  }
  return out;
}

SlideResult slideToHyperplane(const VectorQ& p0, const MatrixQ& points) {
  SlideResult out;
  out.functional = chooseSlideFunctional(p0, points);
  out.points = slideAlong(p0, points, out.functional);
  return out;
}

KnownSet affineClosure(const BipartiteFramework& fw, KnownSet known) {
  if (known.empty()) return known;
  for (bool changed = true; changed;) {
    changed = false;
    const MatrixQ span = knownPoints(fw, known);
    KnownSet added;
    for (int i : known.complementP(fw.n()))
      if (inAffineSpan(fw.P.col(i), span)) added.p.push_back(i);
    for (int j : known.complementQ(fw.m()))
      if (inAffineSpan(fw.Q.col(j), span)) added.q.push_back(j);
    if (!added.empty()) {
      known = merge(known, added);
      changed = true;
    }
  }
  return known;
}

ConedFramework cone(const BipartiteFramework& fw, const VectorQ& apex) {
  const Eigen::Index d = fw.dim();
  if (apex.size() != d + 1)
    throw Error(ErrorCode::DimensionMismatch, "apex must have one more coordinate than the framework");
  if (apex(d) == 0) throw Error(ErrorCode::ApexInSpan, "apex lies in the framework's hyperplane");

  const int n = static_cast<int>(fw.n());
  const int m = static_cast<int>(fw.m());
  ConedFramework out;
  out.points = MatrixQ::Zero(d + 1, n + m + 1);
  out.points.topLeftCorner(d, n + m) = fw.allPoints();
  out.points.col(n + m) = apex;
  out.apex = n + m;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) out.edges.emplace_back(i, n + j);
  for (int v = 0; v < n + m; ++v) out.edges.emplace_back(v, out.apex);
  return out;
}

}  // namespace urbip
