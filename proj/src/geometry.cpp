#include "urbip/geometry.hpp"

#include "urbip/error.hpp"
#include "urbip/framework.hpp"

#include <algorithm>
#include <numeric>

namespace urbip {

BipartiteFramework::BipartiteFramework(MatrixQ p, MatrixQ q) : P(std::move(p)), Q(std::move(q)) {
  if (P.cols() < 1) throw Error(ErrorCode::InvalidInput, "framework needs at least one P point");
  if (Q.cols() > 0 && Q.rows() != P.rows())
    throw Error(ErrorCode::InvalidInput, "P and Q points have different dimensions");
  if (Q.cols() == 0) Q.resize(P.rows(), 0);
}

MatrixQ BipartiteFramework::allPoints() const {
  MatrixQ out(dim(), n() + m());
  out.leftCols(n()) = P;
  out.rightCols(m()) = Q;
  return out;
}

MatrixQ BipartiteFramework::configurationP() const { return homogenize(P); }
MatrixQ BipartiteFramework::configurationQ() const { return homogenize(Q); }

BipartiteFramework BipartiteFramework::subframework(const std::vector<int>& p,
                                                    const std::vector<int>& q) const {
  BipartiteFramework out;
  out.P = selectColumns(P, p);
  out.Q = selectColumns(Q, q);
  return out;
}

BipartiteFramework makeFramework(Eigen::Index d, const std::vector<std::vector<Rational>>& p,
                                 const std::vector<std::vector<Rational>>& q) {
  auto build = [d](const std::vector<std::vector<Rational>>& pts) {
    MatrixQ m(d, static_cast<Eigen::Index>(pts.size()));
    for (std::size_t k = 0; k < pts.size(); ++k) {
      if (static_cast<Eigen::Index>(pts[k].size()) != d)
        throw Error(ErrorCode::DimensionMismatch, "point " + std::to_string(k) + " has " +
                                                      std::to_string(pts[k].size()) + " coordinates");
      for (Eigen::Index i = 0; i < d; ++i) m(i, k) = pts[k][i];
    }
    return m;
  };
  return BipartiteFramework(build(p), build(q));
}

VectorQ veroneseCoordinates(const VectorQ& v) {
  const auto lifted = veronese(v);
  const auto& packed = lifted.packed();
  VectorQ out(static_cast<Eigen::Index>(packed.size()) - 1);
  for (Eigen::Index k = 0; k < out.size(); ++k) out(k) = packed[k];
  return out;
}

Eigen::Index affineSpanDim(const MatrixQ& points) {
  if (points.cols() == 0) throw Error(ErrorCode::EmptyInput, "affine span of no points");
  return rank(differences(points));
}

bool inAffineSpan(const VectorQ& v, const MatrixQ& points) {
  if (points.cols() == 0) throw Error(ErrorCode::EmptyInput, "affine span of no points");
  if (v.size() != points.rows())
    throw Error(ErrorCode::DimensionMismatch, "point and point set differ in dimension");
  MatrixQ extended(points.rows(), points.cols() + 1);
  extended.leftCols(points.cols()) = points;
  extended.col(points.cols()) = v;
  return affineSpanDim(extended) == affineSpanDim(points);
}

namespace {

// True iff every subset of `size` columns is affinely independent.
bool allSubsetsIndependent(const MatrixQ& points, Eigen::Index size) {
  const Eigen::Index count = points.cols();
  if (size <= 1 || count < 1) return true;
  std::vector<int> idx(size);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    if (affineSpanDim(selectColumns(points, idx)) != size - 1) return false;
    Eigen::Index k = size - 1;
    while (k >= 0 && idx[k] == count - size + k) --k;
    if (k < 0) return true;
    ++idx[k];
    for (Eigen::Index j = k + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

// Subsets of an affinely independent set are independent, so checking the
// largest subset size covers every smaller k.
bool isGeneralPosition(const MatrixQ& points, Eigen::Index d) {
  return allSubsetsIndependent(points, std::min<Eigen::Index>(d + 1, points.cols()));
}

bool isQuadricGeneralPosition(const MatrixQ& points, Eigen::Index d) {
  const Eigen::Index liftedDim = (d + 1) * (d + 2) / 2 - 1;
  MatrixQ lifted(liftedDim, points.cols());
  for (Eigen::Index k = 0; k < points.cols(); ++k)
    lifted.col(k) = veroneseCoordinates(points.col(k));
  return allSubsetsIndependent(lifted, std::min<Eigen::Index>(liftedDim + 1, points.cols()));
}

std::optional<SymmetricMatrix<Rational>> conicAtInfinityWitness(const MatrixQ& directions) {
  const Eigen::Index d = directions.rows();
  SymmetricMatrix<Rational> shape(d);
  MatrixQ system = MatrixQ::Zero(directions.cols(), shape.packedSize());
  for (Eigen::Index r = 0; r < directions.cols(); ++r)
    for (Eigen::Index i = 0; i < d; ++i)
      for (Eigen::Index j = i; j < d; ++j)
        system(r, shape.index(i, j)) =
            (i == j ? Rational(1) : Rational(2)) * directions(i, r) * directions(j, r);
  const MatrixQ kernel = nullspace(system);
  if (kernel.cols() == 0) return std::nullopt;
  SymmetricMatrix<Rational> witness(d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = i; j < d; ++j) witness.set(i, j, kernel(shape.index(i, j), 0));
  return witness;
}

}  // namespace urbip
