#include "urbip/separation.hpp"

#include "urbip/error.hpp"
#include "urbip/geometry.hpp"
#include "urbip/lp.hpp"

namespace urbip {

namespace {

Eigen::Index liftedSize(Eigen::Index d) { return (d + 1) * (d + 2) / 2; }

// Radon system over (lambda, mu): one row per packed Veronese entry and the
// normalization sum(lambda) = 1.
lp::Problem radonSystem(const BipartiteFramework& fw) {
  const Eigen::Index n = fw.n();
  const Eigen::Index m = fw.m();
  const Eigen::Index rows = liftedSize(fw.dim());
  MatrixQ A = MatrixQ::Zero(rows + 1, n + m);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto lifted = veronese(fw.P.col(i));
    for (Eigen::Index k = 0; k < rows; ++k) A(k, i) = lifted.packed()[k];
    A(rows, i) = 1;
  }
  for (Eigen::Index j = 0; j < m; ++j) {
    const auto lifted = veronese(fw.Q.col(j));
    for (Eigen::Index k = 0; k < rows; ++k) A(k, n + j) = -lifted.packed()[k];
  }
  VectorQ b = VectorQ::Zero(rows + 1);
  b(rows) = 1;
  return lp::nonnegativeSystem(std::move(A), std::move(b));
}

RadonCertificate toCertificate(const VectorQ& x, Eigen::Index n) {
  RadonCertificate cert;
  cert.lambda = x.head(n);
  cert.mu = x.tail(x.size() - n);
  cert.supportP = positiveSupport(cert.lambda);
  cert.supportQ = positiveSupport(cert.mu);
  return cert;
}

}  // namespace

std::vector<int> positiveSupport(const VectorQ& coefficients) {
  std::vector<int> out;
  for (Eigen::Index i = 0; i < coefficients.size(); ++i)
    if (coefficients(i) > 0) out.push_back(static_cast<int>(i));
  return out;
}

SeparationCertificate maxMarginQuadric(const BipartiteFramework& fw) {
  if (fw.n() == 0 || fw.m() == 0)
    throw Error(ErrorCode::EmptySide, "max-margin quadric needs points on both sides");
  const Eigen::Index d = fw.dim();
  const Eigen::Index entries = liftedSize(d);
  const Eigen::Index points = fw.n() + fw.m();

  // Variables: a = A + 1 in [0, 2] per packed entry, then delta >= 0, then
  // one surplus per point. Row for p: <a,V(p)> - delta - s = <1,V(p)>;
  // row for q: <a,V(q)> + delta + s = <1,V(q)>.
  const Eigen::Index deltaCol = entries;
  const Eigen::Index vars = entries + 1 + points;
  lp::Problem prob;
  prob.A = MatrixQ::Zero(points, vars);
  prob.b = VectorQ::Zero(points);
  prob.lower.assign(vars, lp::Lower::Zero);
  prob.upper.assign(vars, std::nullopt);
  for (Eigen::Index k = 0; k < entries; ++k) prob.upper[k] = Rational(2);

  SymmetricMatrix<Rational> shape(d + 1);
  for (Eigen::Index r = 0; r < points; ++r) {
    const bool onP = r < fw.n();
    const auto lifted = veronese(onP ? fw.P.col(r) : fw.Q.col(r - fw.n()));
    Rational ones = 0;
    for (Eigen::Index i = 0; i <= d; ++i)
      for (Eigen::Index j = i; j <= d; ++j) {
        const Rational w = (i == j ? Rational(1) : Rational(2)) * lifted(i, j);
        prob.A(r, shape.index(i, j)) = w;
        ones += w;
      }
    prob.A(r, deltaCol) = onP ? -1 : 1;
    prob.A(r, deltaCol + 1 + r) = onP ? -1 : 1;
    prob.b(r) = ones;
  }
  VectorQ objective = VectorQ::Zero(vars);
  objective(deltaCol) = 1;
  prob.objective = objective;

  const lp::Outcome out = lp::maximize(prob);
  if (out.status != lp::Status::Optimal)
    throw Error(ErrorCode::NumericalFailure, "max-margin LP did not reach an optimum");

  SeparationCertificate cert{SymmetricMatrix<Rational>(d + 1), out.value};
  for (Eigen::Index i = 0; i <= d; ++i)
    for (Eigen::Index j = i; j <= d; ++j) cert.A.set(i, j, out.x(shape.index(i, j)) - 1);
  return cert;
}

std::optional<RadonCertificate> radonCoefficients(const BipartiteFramework& fw) {
  const lp::Outcome out = lp::solveFeasibility(radonSystem(fw));
  if (out.status != lp::Status::Feasible) return std::nullopt;
  return toCertificate(out.x, fw.n());
}

std::optional<RadonCertificate> maximalSupportRadon(const BipartiteFramework& fw) {
  const lp::Problem base = radonSystem(fw);
  const lp::Outcome first = lp::solveFeasibility(base);
  if (first.status != lp::Status::Feasible) return std::nullopt;

  const Eigen::Index vars = base.numVariables();
  VectorQ sum = first.x;
  Rational count = 1;
  std::vector<bool> covered(vars);
  for (Eigen::Index k = 0; k < vars; ++k) covered[k] = first.x(k) > 0;

  for (Eigen::Index k = 0; k < vars; ++k) {
    if (covered[k]) continue;
    lp::Problem probe = base;
    probe.upper.assign(vars, std::nullopt);
    probe.upper[k] = Rational(1);
    VectorQ objective = VectorQ::Zero(vars);
    objective(k) = 1;
    probe.objective = objective;
    const lp::Outcome out = lp::maximize(probe);
    if (out.status != lp::Status::Optimal || out.value <= 0) continue;
    sum += out.x;
    count += 1;
    for (Eigen::Index j = 0; j < vars; ++j)
      if (out.x(j) > 0) covered[j] = true;
  }
  return toCertificate(sum / count, fw.n());
}

bool verifyRadon(const RadonCertificate& cert, const BipartiteFramework& fw) {
  if (cert.lambda.size() != fw.n() || cert.mu.size() != fw.m()) return false;
  for (Eigen::Index i = 0; i < cert.lambda.size(); ++i)
    if (cert.lambda(i) < 0) return false;
  for (Eigen::Index j = 0; j < cert.mu.size(); ++j)
    if (cert.mu(j) < 0) return false;
  if (cert.lambda.sum() != 1 || cert.mu.sum() != 1) return false;
  if (cert.supportP != positiveSupport(cert.lambda) || cert.supportQ != positiveSupport(cert.mu))
    return false;

  const MatrixQ P = fw.configurationP();
  const MatrixQ Q = fw.configurationQ();
  const MatrixQ lhs = P * cert.lambda.asDiagonal() * P.transpose();
  const MatrixQ rhs = Q * cert.mu.asDiagonal() * Q.transpose();
  return lhs == rhs;
}

bool verifySeparation(const SeparationCertificate& cert, const BipartiteFramework& fw) {
  if (cert.delta <= 0 || cert.A.order() != fw.dim() + 1) return false;
  const MatrixQ P = fw.configurationP();
  const MatrixQ Q = fw.configurationQ();
  for (Eigen::Index i = 0; i < P.cols(); ++i)
    if (quadraticForm(cert.A, P.col(i)) < cert.delta) return false;
  for (Eigen::Index j = 0; j < Q.cols(); ++j)
    if (quadraticForm(cert.A, Q.col(j)) > -cert.delta) return false;
  return true;
}

}  // namespace urbip
