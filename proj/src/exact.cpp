#include "urbip/exact.hpp"

#include "urbip/error.hpp"

#include <utility>

namespace urbip {

std::string_view toString(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedProblem: return "MalformedProblem";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::EmptySide: return "EmptySide";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::NumericalFailure: return "NumericalFailure";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::PatternViolation: return "PatternViolation";
    case ErrorCode::ClosureViolated: return "ClosureViolated";
    case ErrorCode::DegeneratePoint: return "DegeneratePoint";
    case ErrorCode::ApexInSpan: return "ApexInSpan";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

Rational parseRational(std::string_view text) {
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  std::string_view unsignedNum = num;
  if (!unsignedNum.empty() && unsignedNum.front() == '-') unsignedNum.remove_prefix(1);
  if (!digits(unsignedNum) || !digits(den))
    throw Error(ErrorCode::ParseError, "not a rational: \"" + std::string(text) + "\"");
  const Integer d{std::string(den)};
  if (d == 0)
    throw Error(ErrorCode::ParseError, "zero denominator in \"" + std::string(text) + "\"");
  return Rational(Integer{std::string(num)}, d);
}

std::string toString(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

RowEchelon rowEchelon(MatrixQ m) {
  RowEchelon out;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    m.row(row).swap(m.row(pivot));
    const Rational inv = 1 / m(row, col);
    for (Eigen::Index j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Rational f = m(i, col);
      for (Eigen::Index j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

Eigen::Index rank(const MatrixQ& m) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  if (rows == 0 || cols == 0) return 0;

  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  for (Eigen::Index i = 0; i < rows; ++i) {
    Integer lcm = 1;
    for (Eigen::Index j = 0; j < cols; ++j)
      lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(m(i, j)));
    for (Eigen::Index j = 0; j < cols; ++j)
      a[i][j] = boost::multiprecision::numerator(m(i, j)) *
                (lcm / boost::multiprecision::denominator(m(i, j)));
  }

  Integer prev = 1;
  Eigen::Index r = 0;
  for (Eigen::Index col = 0; col < cols && r < rows; ++col) {
    Eigen::Index pivot = r;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[r], a[pivot]);
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      for (Eigen::Index j = col + 1; j < cols; ++j)
        a[i][j] = (a[r][col] * a[i][j] - a[i][col] * a[r][j]) / prev;
      a[i][col] = 0;
    }
    prev = a[r][col];
    ++r;
  }
  return r;
}

MatrixQ nullspace(const MatrixQ& m) {
  const RowEchelon e = rowEchelon(m);
  std::vector<bool> isPivot(m.cols(), false);
  for (auto p : e.pivots) isPivot[p] = true;

  MatrixQ basis = MatrixQ::Zero(m.cols(), m.cols() - static_cast<Eigen::Index>(e.pivots.size()));
  Eigen::Index k = 0;
  for (Eigen::Index free = 0; free < m.cols(); ++free) {
    if (isPivot[free]) continue;
    basis(free, k) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) basis(e.pivots[r], k) = -e.reduced(r, free);
    ++k;
  }
  return basis;
}

std::optional<VectorQ> solve(const MatrixQ& a, const VectorQ& b) {
  MatrixQ aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  const RowEchelon e = rowEchelon(aug);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  VectorQ x = VectorQ::Zero(a.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x(e.pivots[r]) = e.reduced(r, a.cols());
  return x;
}

MatrixQ differences(const MatrixQ& points) {
  if (points.cols() == 0) return MatrixQ(points.rows(), 0);
  MatrixQ out(points.rows(), points.cols() - 1);
  for (Eigen::Index k = 1; k < points.cols(); ++k) out.col(k - 1) = points.col(k) - points.col(0);
  return out;
}

MatrixQ homogenize(const MatrixQ& points) {
  MatrixQ out(points.rows() + 1, points.cols());
  out.topRows(points.rows()) = points;
  out.row(points.rows()).setConstant(Rational(1));
  return out;
}

MatrixQ selectColumns(const MatrixQ& a, const std::vector<int>& cols) {
  MatrixQ out(a.rows(), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k) out.col(k) = a.col(cols[k]);
  return out;
}

}  // namespace urbip
