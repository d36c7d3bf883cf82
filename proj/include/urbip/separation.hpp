#pragma once

#include "urbip/framework.hpp"
#include "urbip/symmetric.hpp"

#include <optional>
#include <vector>

namespace urbip {

/// Nonnegative coefficients with sum(lambda_i V(p_i)) = sum(mu_j V(q_j))
/// and sum(lambda) = 1. Support indices are local to the framework.
struct RadonCertificate {
  VectorQ lambda;
  VectorQ mu;
  std::vector<int> supportP;
  std::vector<int> supportQ;
};

/// Quadric A (entries in [-1, 1]) with p^t A p^ >= delta and
/// q^t A q^ <= -delta; a strict separator when delta > 0.
struct SeparationCertificate {
  SymmetricMatrix<Rational> A;
  Rational delta;
};

/// Exact optimum of the box-normalized max-margin quadric LP.
/// Throws EmptySide when either side is empty.
SeparationCertificate maxMarginQuadric(const BipartiteFramework& fw);

/// Feasible Radon coefficients, or nullopt when the lifted hulls are disjoint.
/// Either side may be empty, in which case the system is infeasible.
std::optional<RadonCertificate> radonCoefficients(const BipartiteFramework& fw);

/// Radon coefficients whose support is the maximal support over the whole
/// feasible region.
std::optional<RadonCertificate> maximalSupportRadon(const BipartiteFramework& fw);

/// Exact re-check of the Radon identity, sign, normalization and support.
bool verifyRadon(const RadonCertificate& cert, const BipartiteFramework& fw);

/// Exact evaluation of all n + m quadratic forms against +-delta, delta > 0.
bool verifySeparation(const SeparationCertificate& cert, const BipartiteFramework& fw);

/// Positions with a positive coefficient.
std::vector<int> positiveSupport(const VectorQ& coefficients);

}  // namespace urbip
