#pragma once

#include "urbip/error.hpp"
#include "urbip/framework.hpp"
#include "urbip/reduction.hpp"
#include "urbip/separation.hpp"
#include "urbip/stress.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace urbip {

enum class Verdict { UniversallyRigid, DimensionallyRigidOnly, NotDimensionallyRigid };

/// "universally-rigid", "dimensionally-rigid", "not-dimensionally-rigid".
std::string_view toString(Verdict v);
std::optional<Verdict> parseVerdict(std::string_view text);

/// How an iteration ended.
enum class StepKind {
  Exit,           // at most one unknown vertex per side remains
  DimensionSpan,  // reduced unknowns are affinely independent
  Radon,          // positive-support Radon coefficients found; known set grows
  Separation,     // reduced sides strictly separated by a quadric
  OneSided,       // reduced unknowns all on one side; Radon system trivially infeasible
};

std::string_view toString(StepKind k);
std::optional<StepKind> parseStepKind(std::string_view text);

struct IterationRecord {
  int index = 0;
  KnownSet knownBefore;
  std::vector<int> complementP;
  std::vector<int> complementQ;
  // Reduction of the unknown vertices; absent while the known set is empty.
  std::optional<VectorQ> conePoint;
  std::optional<VectorQ> functional;
  MatrixQ reducedP;  // columns follow complementP
  MatrixQ reducedQ;
  StepKind kind = StepKind::Exit;
  std::optional<RadonCertificate> radon;  // indices local to the reduced frame
  std::optional<SeparationCertificate> separation;
  KnownSet support;                        // S, in original indices
  std::optional<StressCertificate> stress; // on the reduced S-subframework
  KnownSet knownAfter;

  bool terminal() const { return kind != StepKind::Radon; }
};

struct CertificateChain {
  BipartiteFramework input;
  std::vector<IterationRecord> records;
  Verdict verdict = Verdict::NotDimensionallyRigid;
  double tolerance = kDefaultStressTol;

  /// Iterations that ran the Radon LP successfully and grew the known set.
  std::size_t lpIterations() const;
};

struct RigidityResult {
  Verdict verdict;
  CertificateChain chain;
};

/// Decides universal / dimensional rigidity of K(n, m) with the given
/// coordinates and records the evidence for every iteration.
/// Throws InvalidInput for malformed frameworks and NumericalFailure if a
/// stress certificate cannot be built in double precision.
RigidityResult rigidityTest(const BipartiteFramework& fw, double tol = kDefaultStressTol);

/// Replays every record against `fw`: exact reductions, exact LP
/// certificates, numerical stress certificates at `tol`, known-set growth
/// and the final verdict.
bool verifyChain(const BipartiteFramework& fw, const CertificateChain& chain,
                 double tol = kDefaultStressTol);

/// The framework induced on the unknown vertices after reduction.
BipartiteFramework reducedFramework(const IterationRecord& rec);

struct BatchItem {
  std::optional<RigidityResult> result;
  std::optional<ErrorCode> errorCode;
  std::string error;
};

/// rigidityTest over a list, items evaluated concurrently; results keep the
/// input order and failures stay with their item.
std::vector<BatchItem> rigidityTestBatch(std::span<const BipartiteFramework> frameworks,
                                         double tol = kDefaultStressTol, unsigned threads = 0);

}  // namespace urbip
