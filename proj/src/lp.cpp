#include "urbip/lp.hpp"

#include "urbip/error.hpp"

#include <string>

namespace urbip::lp {

namespace {

// A x = b, x >= 0 with free variables split into a (+, -) pair and one slack
// column per upper bound.
struct StandardForm {
  MatrixQ A;
  VectorQ b;
  VectorQ c;
  std::vector<Eigen::Index> positive;  // column of x_j (or of x_j^+)
  std::vector<Eigen::Index> negative;  // column of x_j^-, or -1
};

StandardForm standardize(const Problem& p) {
  const Eigen::Index n = p.numVariables();
  const Eigen::Index rows = p.numRows();
  StandardForm s;
  s.positive.assign(n, -1);
  s.negative.assign(n, -1);

  Eigen::Index cols = 0;
  for (Eigen::Index j = 0; j < n; ++j) {
    s.positive[j] = cols++;
    if (p.lower[j] == Lower::Unbounded) s.negative[j] = cols++;
  }
  std::vector<Eigen::Index> bounded;
  for (Eigen::Index j = 0; j < static_cast<Eigen::Index>(p.upper.size()); ++j)
    if (p.upper[j]) bounded.push_back(j);
  const Eigen::Index slackStart = cols;
  cols += static_cast<Eigen::Index>(bounded.size());
  const Eigen::Index totalRows = rows + static_cast<Eigen::Index>(bounded.size());

  s.A = MatrixQ::Zero(totalRows, cols);
  s.b = VectorQ::Zero(totalRows);
  s.c = VectorQ::Zero(cols);
  for (Eigen::Index j = 0; j < n; ++j) {
    s.A.block(0, s.positive[j], rows, 1) = p.A.col(j);
    if (s.negative[j] >= 0) s.A.block(0, s.negative[j], rows, 1) = -p.A.col(j);
    if (p.objective) {
      s.c(s.positive[j]) = (*p.objective)(j);
      if (s.negative[j] >= 0) s.c(s.negative[j]) = -(*p.objective)(j);
    }
  }
  s.b.head(rows) = p.b;
  for (std::size_t k = 0; k < bounded.size(); ++k) {
    const Eigen::Index j = bounded[k];
    const Eigen::Index r = rows + static_cast<Eigen::Index>(k);
    s.A(r, s.positive[j]) = 1;
    if (s.negative[j] >= 0) s.A(r, s.negative[j]) = -1;
    s.A(r, slackStart + static_cast<Eigen::Index>(k)) = 1;
    s.b(r) = *p.upper[j];
  }
  return s;
}

// Dense simplex tableau [structural | artificial | rhs]. The artificial
// block always holds B^{-1} of the sign-normalized system.
class Tableau {
 public:
  explicit Tableau(const StandardForm& s)
      : rows_(s.A.rows()), cols_(s.A.cols()), t_(MatrixQ::Zero(rows_, cols_ + rows_ + 1)),
        basis_(rows_), sign_(rows_, 1) {
    for (Eigen::Index i = 0; i < rows_; ++i) {
      sign_[i] = s.b(i) < 0 ? -1 : 1;
      const Rational f(sign_[i]);
      t_.block(i, 0, 1, cols_) = s.A.row(i) * f;
      t_(i, cols_ + i) = 1;
      t_(i, rhs()) = s.b(i) * f;
      basis_[i] = cols_ + i;
    }
  }

  enum class Result { Optimal, Unbounded };

  // Maximizes cost^t z over the first `allowed` columns (others stay
  // nonbasic unless already basic). Bland: lowest entering index, lowest
  // leaving basic index among ratio ties.
  Result run(const VectorQ& cost, Eigen::Index allowed) {
    std::vector<bool> basic(cols_ + rows_, false);
    for (;;) {
      std::fill(basic.begin(), basic.end(), false);
      for (auto b : basis_) basic[b] = true;

      Eigen::Index entering = -1;
      for (Eigen::Index j = 0; j < allowed && entering < 0; ++j) {
        if (basic[j]) continue;
        Rational reduced = cost(j);
        for (Eigen::Index i = 0; i < rows_; ++i)
          if (t_(i, j) != 0 && cost(basis_[i]) != 0) reduced -= cost(basis_[i]) * t_(i, j);
        if (reduced > 0) entering = j;
      }
      if (entering < 0) return Result::Optimal;

      Eigen::Index leaving = -1;
      Rational best;
      for (Eigen::Index i = 0; i < rows_; ++i) {
        if (t_(i, entering) <= 0) continue;
        Rational ratio = t_(i, rhs()) / t_(i, entering);
        if (leaving < 0 || ratio < best || (ratio == best && basis_[i] < basis_[leaving])) {
          leaving = i;
          best = ratio;
        }
      }
      if (leaving < 0) return Result::Unbounded;
      pivot(leaving, entering);
    }
  }

  void pivot(Eigen::Index r, Eigen::Index c) {
    const Rational inv = 1 / t_(r, c);
    for (Eigen::Index j = 0; j < t_.cols(); ++j)
      if (t_(r, j) != 0) t_(r, j) *= inv;
    for (Eigen::Index i = 0; i < rows_; ++i) {
      if (i == r || t_(i, c) == 0) continue;
      const Rational f = t_(i, c);
      for (Eigen::Index j = 0; j < t_.cols(); ++j)
        if (t_(r, j) != 0) t_(i, j) -= f * t_(r, j);
    }
    basis_[r] = c;
  }

  // Pivots basic artificials (at level zero) onto structural columns where
  // possible; rows with no structural entry are redundant and stay put.
  void evictArtificials() {
    for (Eigen::Index i = 0; i < rows_; ++i) {
      if (basis_[i] < cols_) continue;
      for (Eigen::Index j = 0; j < cols_; ++j) {
        if (t_(i, j) != 0) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  Rational objective(const VectorQ& cost) const {
    Rational v = 0;
    for (Eigen::Index i = 0; i < rows_; ++i) v += cost(basis_[i]) * t_(i, rhs());
    return v;
  }

  VectorQ primal() const {
    VectorQ z = VectorQ::Zero(cols_);
    for (Eigen::Index i = 0; i < rows_; ++i)
      if (basis_[i] < cols_) z(basis_[i]) = t_(i, rhs());
    return z;
  }

  // c_B^t B^{-1}, mapped back to the unnormalized row signs.
  VectorQ dual(const VectorQ& cost) const {
    VectorQ y = VectorQ::Zero(rows_);
    for (Eigen::Index k = 0; k < rows_; ++k) {
      Rational v = 0;
      for (Eigen::Index i = 0; i < rows_; ++i)
        if (cost(basis_[i]) != 0) v += cost(basis_[i]) * t_(i, cols_ + k);
      y(k) = v * sign_[k];
    }
    return y;
  }

  Eigen::Index structural() const { return cols_; }
  Eigen::Index rows() const { return rows_; }

 private:
  Eigen::Index rhs() const { return cols_ + rows_; }

  Eigen::Index rows_;
  Eigen::Index cols_;
  MatrixQ t_;
  std::vector<Eigen::Index> basis_;
  std::vector<int> sign_;
};

VectorQ recover(const Problem& p, const StandardForm& s, const VectorQ& z) {
  VectorQ x(p.numVariables());
  for (Eigen::Index j = 0; j < p.numVariables(); ++j) {
    x(j) = z(s.positive[j]);
    if (s.negative[j] >= 0) x(j) -= z(s.negative[j]);
  }
  return x;
}

// Phase 1 on the tableau; fills `out` and returns false when infeasible.
bool phaseOne(Tableau& tab, Outcome& out) {
  const Eigen::Index n = tab.structural();
  VectorQ cost = VectorQ::Zero(n + tab.rows());
  cost.tail(tab.rows()).setConstant(Rational(-1));
  tab.run(cost, n + tab.rows());
  const Rational w = tab.objective(cost);
  if (w < 0) {
    out.status = Status::Infeasible;
    out.y = -tab.dual(cost);
    return false;
  }
  tab.evictArtificials();
  return true;
}

}  // namespace

Eigen::Index Problem::numCertificateRows() const {
  Eigen::Index k = numRows();
  for (const auto& u : upper)
    if (u) ++k;
  return k;
}

void Problem::validate() const {
  const Eigen::Index n = numVariables();
  if (b.size() != A.rows())
    throw Error(ErrorCode::MalformedProblem, "right-hand side has " + std::to_string(b.size()) +
                                                 " entries for " + std::to_string(A.rows()) + " rows");
  if (static_cast<Eigen::Index>(lower.size()) != n)
    throw Error(ErrorCode::MalformedProblem, "lower-bound list does not match variable count");
  if (!upper.empty() && static_cast<Eigen::Index>(upper.size()) != n)
    throw Error(ErrorCode::MalformedProblem, "upper-bound list does not match variable count");
  if (objective && objective->size() != n)
    throw Error(ErrorCode::MalformedProblem, "objective width does not match variable count");
}

Problem nonnegativeSystem(MatrixQ A, VectorQ b) {
  Problem p;
  p.lower.assign(A.cols(), Lower::Zero);
  p.A = std::move(A);
  p.b = std::move(b);
  return p;
}

Outcome solveFeasibility(const Problem& problem) {
  problem.validate();
  const StandardForm s = standardize(problem);
  Tableau tab(s);
  Outcome out;
  if (!phaseOne(tab, out)) return out;
  out.status = Status::Feasible;
  out.x = recover(problem, s, tab.primal());
  return out;
}

Outcome maximize(const Problem& problem) {
  problem.validate();
  if (!problem.objective) throw Error(ErrorCode::MalformedProblem, "maximize needs an objective");
  const StandardForm s = standardize(problem);
  Tableau tab(s);
  Outcome out;
  if (!phaseOne(tab, out)) return out;

  VectorQ cost = VectorQ::Zero(tab.structural() + tab.rows());
  cost.head(tab.structural()) = s.c;
  const auto result = tab.run(cost, tab.structural());
  out.x = recover(problem, s, tab.primal());
  if (result == Tableau::Result::Unbounded) {
    out.status = Status::Unbounded;
    return out;
  }
  out.status = Status::Optimal;
  out.value = tab.objective(cost);
  out.y = tab.dual(cost);
  return out;
}

bool satisfies(const Problem& problem, const VectorQ& x) {
  problem.validate();
  if (x.size() != problem.numVariables()) return false;
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    if (problem.lower[j] == Lower::Zero && x(j) < 0) return false;
    if (!problem.upper.empty() && problem.upper[j] && x(j) > *problem.upper[j]) return false;
  }
  const VectorQ residual = problem.A * x - problem.b;
  for (Eigen::Index i = 0; i < residual.size(); ++i)
    if (residual(i) != 0) return false;
  return true;
}

bool isFarkasCertificate(const Problem& problem, const VectorQ& y) {
  problem.validate();
  const StandardForm s = standardize(problem);
  if (y.size() != s.A.rows()) return false;
  const VectorQ g = s.A.transpose() * y;
  for (Eigen::Index j = 0; j < g.size(); ++j)
    if (g(j) > 0) return false;
  return y.dot(s.b) > 0;
}

bool isOptimalDual(const Problem& problem, const VectorQ& y, const Rational& value) {
  problem.validate();
  if (!problem.objective) return false;
  const StandardForm s = standardize(problem);
  if (y.size() != s.A.rows()) return false;
  const VectorQ g = s.A.transpose() * y;
  for (Eigen::Index j = 0; j < g.size(); ++j)
    if (g(j) < s.c(j)) return false;
  return y.dot(s.b) == value;
}

}  // namespace urbip::lp
