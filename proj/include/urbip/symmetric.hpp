#pragma once

#include "urbip/error.hpp"

#include <Eigen/Core>

#include <utility>
#include <vector>

namespace urbip {

/// Square symmetric matrix stored as its packed upper triangle, so
/// entry(i, j) == entry(j, i) holds by construction for any scalar type.
template <typename Scalar>
class SymmetricMatrix {
 public:
  using Dense = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  SymmetricMatrix() = default;
  explicit SymmetricMatrix(Eigen::Index order)
      : order_(order), packed_(static_cast<std::size_t>(order * (order + 1) / 2), Scalar(0)) {}

  /// Reads the upper triangle of `dense`. For exact scalars the lower
  /// triangle must agree; floating inputs are taken from the upper part.
  static SymmetricMatrix fromUpper(const Dense& dense) {
    if (dense.rows() != dense.cols())
      throw Error(ErrorCode::ShapeMismatch, "symmetric matrix must be square");
    SymmetricMatrix out(dense.rows());
    for (Eigen::Index i = 0; i < dense.rows(); ++i)
      for (Eigen::Index j = i; j < dense.cols(); ++j) out.set(i, j, dense(i, j));
    return out;
  }

  /// Throws ShapeMismatch unless packed.size() == order*(order+1)/2.
  static SymmetricMatrix fromPacked(Eigen::Index order, std::vector<Scalar> packed) {
    if (order < 0 || packed.size() != static_cast<std::size_t>(order * (order + 1) / 2))
      throw Error(ErrorCode::ShapeMismatch, "packed length does not match order");
    SymmetricMatrix out;
    out.order_ = order;
    out.packed_ = std::move(packed);
    return out;
  }

  Eigen::Index order() const { return order_; }

  /// Number of independent entries, order*(order+1)/2.
  Eigen::Index packedSize() const { return static_cast<Eigen::Index>(packed_.size()); }

  const Scalar& operator()(Eigen::Index i, Eigen::Index j) const { return packed_[index(i, j)]; }
  void set(Eigen::Index i, Eigen::Index j, const Scalar& value) { packed_[index(i, j)] = value; }

  /// Packed position of (i, j); row-major over the upper triangle.
  Eigen::Index index(Eigen::Index i, Eigen::Index j) const {
    if (i > j) std::swap(i, j);
    return i * order_ - i * (i - 1) / 2 + (j - i);
  }

  const std::vector<Scalar>& packed() const { return packed_; }

  Dense toDense() const {
    Dense out(order_, order_);
    for (Eigen::Index i = 0; i < order_; ++i)
      for (Eigen::Index j = i; j < order_; ++j) out(i, j) = out(j, i) = (*this)(i, j);
    return out;
  }

  friend bool operator==(const SymmetricMatrix& a, const SymmetricMatrix& b) {
    return a.order_ == b.order_ && a.packed_ == b.packed_;
  }

 private:
  Eigen::Index order_ = 0;
  std::vector<Scalar> packed_;
};

/// Trace inner product <a, b> = sum_ij a_ij b_ij.
template <typename Scalar>
Scalar frobeniusInner(const SymmetricMatrix<Scalar>& a, const SymmetricMatrix<Scalar>& b) {
  Scalar sum(0);
  for (Eigen::Index i = 0; i < a.order(); ++i)
    for (Eigen::Index j = i; j < a.order(); ++j)
      sum += (i == j ? Scalar(1) : Scalar(2)) * a(i, j) * b(i, j);
  return sum;
}

/// x^t A x for a full-length vector x.
template <typename Scalar, typename Derived>
Scalar quadraticForm(const SymmetricMatrix<Scalar>& a, const Eigen::MatrixBase<Derived>& x) {
  Scalar sum(0);
  for (Eigen::Index i = 0; i < a.order(); ++i)
    for (Eigen::Index j = i; j < a.order(); ++j)
      sum += (i == j ? Scalar(1) : Scalar(2)) * a(i, j) * x(i) * x(j);
  return sum;
}

}  // namespace urbip
