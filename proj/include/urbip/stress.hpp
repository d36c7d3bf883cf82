#pragma once

#include "urbip/framework.hpp"
#include "urbip/separation.hpp"
#include "urbip/symmetric.hpp"

#include <Eigen/Dense>

#include <span>

namespace urbip {

/// Floating-point PSD equilibrium stress matrix for a complete bipartite
/// framework, with the exact coefficients it was built from.
struct StressCertificate {
  SymmetricMatrix<double> omega;  // order n + m, P block first
  Eigen::Index declaredRank = 0;
  double minEigenvalue = 0;
  double equilibriumResidual = 0;
  VectorQ lambda;
  VectorQ mu;
};

constexpr double kDefaultStressTol = 1e-8;

/// Maximum-rank PSD stress from strictly positive Radon coefficients
/// (any positive scaling). The diagonal blocks of the result are
/// diag(lambda) and diag(mu); its rank is n + m - d' - 1 with d' the
/// combined affine span dimension.
/// Throws DegenerateInput (nonpositive coefficient or broken Radon identity)
/// and NumericalFailure (factorization residual above tolerance).
StressCertificate buildSuperStableStress(const BipartiteFramework& fw, const RadonCertificate& cert);

/// Same construction with the diagonal coupling block C between the
/// complementary singular subspaces, given by its min(n-d'-1, m-d'-1)
/// diagonal entries. PSD iff every |c_k| <= 1. Throws ShapeMismatch.
StressCertificate generalizedStress(const BipartiteFramework& fw, const RadonCertificate& cert,
                                    std::span<const double> coupling);

/// max |([P^, Q^] Omega)_ij| using the framework's own coordinates.
double verifyEquilibrium(const Eigen::MatrixXd& omega, const BipartiteFramework& fw);

/// tol * (1 + ||[P^, Q^]||max * ||Omega||max).
double equilibriumTolerance(const Eigen::MatrixXd& omega, const BipartiteFramework& fw, double tol);

struct Spectrum {
  double minEigenvalue = 0;
  double spectralNorm = 0;
  Eigen::Index numericalRank = 0;  // eigenvalues with |e| > tol * spectralNorm
};

Spectrum spectrum(const Eigen::MatrixXd& omega, double tol);

struct RadonExtraction {
  Eigen::VectorXd lambda;
  Eigen::VectorXd mu;
  bool radonHolds = false;
  double residual = 0;  // ||P^ Lambda P^t - Q^ M Q^t||max
};

/// Reads Lambda and M off the diagonal of a bipartite stress matrix and
/// checks P^ Lambda P^t = Q^ M Q^t. Throws PatternViolation when an
/// off-diagonal entry inside the P or Q block is nonzero (beyond tol).
RadonExtraction extractRadonFromStress(const Eigen::MatrixXd& omega, const BipartiteFramework& fw,
                                       double tol = kDefaultStressTol);

/// Super stability check: equilibrium, PSD, rank n+m-d'-1, and equal exact
/// affine spans of the two sides (which rules out a conic at infinity).
bool verifySuperStableCertificate(const BipartiteFramework& fw, const StressCertificate& cert,
                                  double tol = kDefaultStressTol);

}  // namespace urbip
