#pragma once

#include "urbip/exact.hpp"
#include "urbip/symmetric.hpp"

#include <optional>

namespace urbip {

/// Veronese lift v -> v^ v^^t of a point in R^d, where v^ appends a 1.
/// The result has order d + 1 and lower-right entry 1.
template <typename Derived>
SymmetricMatrix<typename Derived::Scalar> veronese(const Eigen::MatrixBase<Derived>& v) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index d = v.size();
  SymmetricMatrix<Scalar> out(d + 1);
  auto hat = [&](Eigen::Index i) { return i < d ? Scalar(v(i)) : Scalar(1); };
  for (Eigen::Index i = 0; i <= d; ++i)
    for (Eigen::Index j = i; j <= d; ++j) out.set(i, j, hat(i) * hat(j));
  return out;
}

/// Lifted coordinates of a point used for affine computations in matrix
/// space: the packed Veronese entries without the constant lower-right 1.
VectorQ veroneseCoordinates(const VectorQ& v);

/// Dimension of the affine span of the columns. Throws EmptyInput.
Eigen::Index affineSpanDim(const MatrixQ& points);

/// True iff appending v leaves the affine span dimension unchanged.
bool inAffineSpan(const VectorQ& v, const MatrixQ& points);

/// Every k+1 of the points span a k-flat, k = 1..d.
bool isGeneralPosition(const MatrixQ& points, Eigen::Index d);

/// Every k+1 of the lifted points span a k-flat in matrix space,
/// k = 1..(d+1)(d+2)/2 - 1.
bool isQuadricGeneralPosition(const MatrixQ& points, Eigen::Index d);

/// A nonzero symmetric Q with v^t Q v = 0 for every column v, if one exists.
std::optional<SymmetricMatrix<Rational>> conicAtInfinityWitness(const MatrixQ& directions);

}  // namespace urbip
