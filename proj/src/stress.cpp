#include "urbip/stress.hpp"

#include "urbip/error.hpp"
#include "urbip/geometry.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include <cmath>

namespace urbip {

namespace {

// Translates to the centroid and scales by a power of two so the largest
// coordinate magnitude lies in (32, 64]. Equilibrium stresses and Radon
// coefficients are invariant under this map.
Eigen::MatrixXd conditioned(const MatrixQ& points) {
  if (points.cols() == 0) return Eigen::MatrixXd(points.rows(), 0);
  VectorQ centroid = points.rowwise().sum() / Rational(points.cols());
  MatrixQ shifted = points.colwise() - centroid;
  Rational largest = 0;
  for (Eigen::Index j = 0; j < shifted.cols(); ++j)
    for (Eigen::Index i = 0; i < shifted.rows(); ++i)
      largest = std::max(largest, Rational(abs(shifted(i, j))));
  if (largest == 0) return toDouble(shifted);
  Rational scale = 1;
  while (largest * scale > 64) scale /= 2;
  while (largest * scale <= 32) scale *= 2;
  return toDouble(MatrixQ(shifted * scale));
}

Eigen::MatrixXd homogenized(const Eigen::MatrixXd& x) {
  Eigen::MatrixXd out(x.rows() + 1, x.cols());
  out.topRows(x.rows()) = x;
  out.row(x.rows()).setOnes();
  return out;
}

Eigen::VectorXd sqrtOf(const VectorQ& v) {
  Eigen::VectorXd out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = std::sqrt(toDouble(v(i)));
  return out;
}

double maxAbs(const Eigen::MatrixXd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

// Orthonormal n x n basis whose first columns are the (orthonormal) columns of `a`.
Eigen::MatrixXd completeBasis(const Eigen::MatrixXd& a) {
  const Eigen::Index n = a.rows();
  const Eigen::Index r = a.cols();
  Eigen::MatrixXd v(n, n);
  v.leftCols(r) = a;
  if (n > r) {
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
    const Eigen::MatrixXd full = qr.householderQ() * Eigen::MatrixXd::Identity(n, n);
    v.rightCols(n - r) = full.rightCols(n - r);
  }
  return v;
}

void requirePositiveRadon(const BipartiteFramework& fw, const RadonCertificate& cert) {
  if (cert.lambda.size() != fw.n() || cert.mu.size() != fw.m())
    throw Error(ErrorCode::DegenerateInput, "coefficient count does not match the framework");
  if (fw.m() == 0) throw Error(ErrorCode::DegenerateInput, "stress needs points on both sides");
  for (Eigen::Index i = 0; i < cert.lambda.size(); ++i)
    if (cert.lambda(i) <= 0) throw Error(ErrorCode::DegenerateInput, "lambda is not strictly positive");
  for (Eigen::Index j = 0; j < cert.mu.size(); ++j)
    if (cert.mu(j) <= 0) throw Error(ErrorCode::DegenerateInput, "mu is not strictly positive");
  const MatrixQ P = fw.configurationP();
  const MatrixQ Q = fw.configurationQ();
  if (MatrixQ(P * cert.lambda.asDiagonal() * P.transpose()) !=
      MatrixQ(Q * cert.mu.asDiagonal() * Q.transpose()))
    throw Error(ErrorCode::DegenerateInput, "coefficients do not satisfy the Radon identity");
}

StressCertificate construct(const BipartiteFramework& fw, const RadonCertificate& cert,
                            std::span<const double> coupling, bool generalized) {
  requirePositiveRadon(fw, cert);
  const Eigen::Index n = fw.n();
  const Eigen::Index m = fw.m();
  const Eigen::Index r = affineSpanDim(fw.allPoints()) + 1;
  if (n < r || m < r)
    throw Error(ErrorCode::DegenerateInput, "a side spans less than the combined affine span");
  const auto couplingSize = static_cast<std::size_t>(std::min(n - r, m - r));
  if (generalized && coupling.size() != couplingSize)
    throw Error(ErrorCode::ShapeMismatch, "coupling block needs " + std::to_string(couplingSize) +
                                              " diagonal entries, got " +
                                              std::to_string(coupling.size()));

  const Eigen::MatrixXd x = conditioned(fw.allPoints());
  const Eigen::VectorXd sqrtLambda = sqrtOf(cert.lambda);
  const Eigen::VectorXd sqrtMu = sqrtOf(cert.mu);
  const Eigen::MatrixXd xp = homogenized(x.leftCols(n)) * sqrtLambda.asDiagonal();
  const Eigen::MatrixXd xq = homogenized(x.rightCols(m)) * sqrtMu.asDiagonal();

  // P^ Lambda^{1/2} and Q^ M^{1/2} share their left singular structure; take
  // it from the symmetrized Gram matrix.
  const Eigen::MatrixXd gram = 0.5 * (xp * xp.transpose() + xq * xq.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram);
  if (eig.info() != Eigen::Success)
    throw Error(ErrorCode::NumericalFailure, "eigendecomposition of the Gram matrix failed");
  const Eigen::VectorXd sigma2 = eig.eigenvalues().tail(r);
  if (sigma2(0) <= 1e-12 * sigma2(r - 1))
    throw Error(ErrorCode::NumericalFailure, "Gram matrix is numerically rank deficient");
  const Eigen::MatrixXd u = eig.eigenvectors().rightCols(r);
  const Eigen::VectorXd invSigma = sigma2.cwiseSqrt().cwiseInverse();

  const Eigen::MatrixXd vn = xp.transpose() * u * invSigma.asDiagonal();
  const Eigen::MatrixXd vm = xq.transpose() * u * invSigma.asDiagonal();
  const Eigen::MatrixXd ir = Eigen::MatrixXd::Identity(r, r);
  const double factorResidual =
      std::max({maxAbs(vn.transpose() * vn - ir), maxAbs(vm.transpose() * vm - ir),
                maxAbs(xp - u * sigma2.cwiseSqrt().asDiagonal() * vn.transpose()) / std::sqrt(sigma2(r - 1)),
                maxAbs(xq - u * sigma2.cwiseSqrt().asDiagonal() * vm.transpose()) / std::sqrt(sigma2(r - 1))});
  if (factorResidual > 1e-8)
    throw Error(ErrorCode::NumericalFailure,
                "shared SVD residual " + std::to_string(factorResidual) + " above tolerance");

  Eigen::MatrixXd v = Eigen::MatrixXd::Zero(n + m, n + m);
  v.topLeftCorner(n, n) = completeBasis(vn);
  v.bottomRightCorner(m, m) = completeBasis(vm);

  Eigen::MatrixXd psi = Eigen::MatrixXd::Identity(n + m, n + m);
  for (Eigen::Index i = 0; i < r; ++i) psi(i, n + i) = psi(n + i, i) = -1;
  for (std::size_t k = 0; k < coupling.size(); ++k) {
    const Eigen::Index a = r + static_cast<Eigen::Index>(k);
    psi(a, n + a) = psi(n + a, a) = coupling[k];
  }

  Eigen::VectorXd sqrtAll(n + m);
  sqrtAll << sqrtLambda, sqrtMu;
  Eigen::MatrixXd omega =
      sqrtAll.asDiagonal() * v * psi * v.transpose() * sqrtAll.asDiagonal();

  // The P and Q blocks are diag(lambda) and diag(mu) identically; round-off
  // off their diagonals is removed after checking it is negligible.
  const double scale = std::max(1.0, maxAbs(omega));
  for (Eigen::Index i = 0; i < n + m; ++i)
    for (Eigen::Index j = 0; j < n + m; ++j) {
      if (i == j || (i < n) != (j < n)) continue;
      if (std::abs(omega(i, j)) > 1e-9 * scale)
        throw Error(ErrorCode::NumericalFailure, "diagonal block of the stress is not diagonal");
      omega(i, j) = 0;
    }

  StressCertificate out;
  out.omega = SymmetricMatrix<double>::fromUpper(omega);
  out.lambda = cert.lambda;
  out.mu = cert.mu;
  Eigen::Index drops = 0;
  for (double c : coupling)
    if (std::abs(c) == 1.0) ++drops;
  out.declaredRank = n + m - r - drops;
  const Eigen::MatrixXd dense = out.omega.toDense();
  out.minEigenvalue = spectrum(dense, kDefaultStressTol).minEigenvalue;
  out.equilibriumResidual = verifyEquilibrium(dense, fw);
  return out;
}

}  // namespace

StressCertificate buildSuperStableStress(const BipartiteFramework& fw, const RadonCertificate& cert) {
  return construct(fw, cert, {}, false);
}

StressCertificate generalizedStress(const BipartiteFramework& fw, const RadonCertificate& cert,
                                    std::span<const double> coupling) {
  return construct(fw, cert, coupling, true);
}

double verifyEquilibrium(const Eigen::MatrixXd& omega, const BipartiteFramework& fw) {
  const Eigen::Index order = fw.n() + fw.m();
  if (omega.rows() != order || omega.cols() != order)
    throw Error(ErrorCode::ShapeMismatch, "stress order does not match the framework");
  const Eigen::MatrixXd config = homogenized(toDouble(fw.allPoints()));
  return maxAbs(config * omega);
}

double equilibriumTolerance(const Eigen::MatrixXd& omega, const BipartiteFramework& fw, double tol) {
  return tol * (1.0 + maxAbs(homogenized(toDouble(fw.allPoints()))) * maxAbs(omega));
}

Spectrum spectrum(const Eigen::MatrixXd& omega, double tol) {
  Spectrum s;
  if (omega.size() == 0) return s;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(omega, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& values = eig.eigenvalues();
  s.minEigenvalue = values.minCoeff();
  s.spectralNorm = values.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < values.size(); ++i)
    if (std::abs(values(i)) > tol * s.spectralNorm) ++s.numericalRank;
  return s;
}

RadonExtraction extractRadonFromStress(const Eigen::MatrixXd& omega, const BipartiteFramework& fw,
                                       double tol) {
  const Eigen::Index n = fw.n();
  const Eigen::Index m = fw.m();
  if (omega.rows() != n + m || omega.cols() != n + m)
    throw Error(ErrorCode::ShapeMismatch, "stress order does not match the framework");
  const double scale = std::max(1.0, maxAbs(omega));
  for (Eigen::Index i = 0; i < n + m; ++i)
    for (Eigen::Index j = 0; j < n + m; ++j)
      if (i != j && (i < n) == (j < n) && std::abs(omega(i, j)) > tol * scale)
        throw Error(ErrorCode::PatternViolation, "nonzero entry (" + std::to_string(i) + ", " +
                                                     std::to_string(j) + ") inside a side block");

  RadonExtraction out;
  out.lambda = omega.diagonal().head(n);
  out.mu = omega.diagonal().tail(m);
  const Eigen::MatrixXd x = toDouble(fw.allPoints());
  const Eigen::MatrixXd p = homogenized(x.leftCols(n));
  const Eigen::MatrixXd q = homogenized(x.rightCols(m));
  const Eigen::MatrixXd lhs = p * out.lambda.asDiagonal() * p.transpose();
  const Eigen::MatrixXd rhs = q * out.mu.asDiagonal() * q.transpose();
  out.residual = maxAbs(lhs - rhs);
  out.radonHolds = out.residual <= tol * std::max({1.0, maxAbs(lhs), maxAbs(rhs)});
  return out;
}

bool verifySuperStableCertificate(const BipartiteFramework& fw, const StressCertificate& cert,
                                  double tol) {
  const Eigen::Index n = fw.n();
  const Eigen::Index m = fw.m();
  if (n == 0 || m == 0 || cert.omega.order() != n + m) return false;
  if (cert.lambda.size() != n || cert.mu.size() != m) return false;
  const Eigen::MatrixXd omega = cert.omega.toDense();

  for (Eigen::Index i = 0; i < n + m; ++i) {
    const double expected = toDouble(i < n ? cert.lambda(i) : cert.mu(i - n));
    if (!(expected > 0) || std::abs(omega(i, i) - expected) > 1e-12 * expected) return false;
    for (Eigen::Index j = 0; j < n + m; ++j)
      if (i != j && (i < n) == (j < n) && omega(i, j) != 0) return false;
  }

  const double residual = verifyEquilibrium(omega, fw);
  const double residualTol = equilibriumTolerance(omega, fw, tol);
  if (!(residual <= residualTol)) return false;
  if (std::abs(residual - cert.equilibriumResidual) > residualTol) return false;

  const Spectrum s = spectrum(omega, tol);
  if (s.minEigenvalue < -tol * s.spectralNorm) return false;
  if (std::abs(s.minEigenvalue - cert.minEigenvalue) > tol * s.spectralNorm) return false;

  const Eigen::Index span = affineSpanDim(fw.allPoints());
  if (affineSpanDim(fw.P) != span || affineSpanDim(fw.Q) != span) return false;
  const Eigen::Index expectedRank = n + m - span - 1;
  return cert.declaredRank == expectedRank && s.numericalRank == expectedRank;
}

}  // namespace urbip
