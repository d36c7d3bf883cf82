#include "urbip/engine.hpp"

#include "urbip/exact.hpp"
#include "urbip/geometry.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace urbip {

std::string_view toString(Verdict v) {
  switch (v) {
    case Verdict::UniversallyRigid: return "universally-rigid";
    case Verdict::DimensionallyRigidOnly: return "dimensionally-rigid";
    case Verdict::NotDimensionallyRigid: return "not-dimensionally-rigid";
  }
  return "";
}

std::optional<Verdict> parseVerdict(std::string_view text) {
  for (auto v : {Verdict::UniversallyRigid, Verdict::DimensionallyRigidOnly,
                 Verdict::NotDimensionallyRigid})
    if (toString(v) == text) return v;
  return std::nullopt;
}

std::string_view toString(StepKind k) {
  switch (k) {
    case StepKind::Exit: return "exit";
    case StepKind::DimensionSpan: return "dimension-span";
    case StepKind::Radon: return "radon";
    case StepKind::Separation: return "separation";
    case StepKind::OneSided: return "one-sided";
  }
  return "";
}

std::optional<StepKind> parseStepKind(std::string_view text) {
  for (auto k : {StepKind::Exit, StepKind::DimensionSpan, StepKind::Radon, StepKind::Separation,
                 StepKind::OneSided})
    if (toString(k) == text) return k;
  return std::nullopt;
}

std::size_t CertificateChain::lpIterations() const {
  return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const auto& r) {
    return r.kind == StepKind::Radon;
  }));
}

BipartiteFramework reducedFramework(const IterationRecord& rec) {
  // Either side may be empty here, so the checked constructor is bypassed.
  BipartiteFramework out;
  out.P = rec.reducedP;
  out.Q = rec.reducedQ;
  return out;
}

namespace {

Eigen::Index span(const MatrixQ& p, const MatrixQ& q) {
  MatrixQ all(p.rows(), p.cols() + q.cols());
  all.leftCols(p.cols()) = p;
  all.rightCols(q.cols()) = q;
  return affineSpanDim(all);
}

// Reduced coordinates of the unknown vertices, recomputed from the input.
void reduce(const BipartiteFramework& fw, IterationRecord& rec) {
  if (rec.knownBefore.empty()) {
    rec.reducedP = selectColumns(fw.P, rec.complementP);
    rec.reducedQ = selectColumns(fw.Q, rec.complementQ);
    return;
  }
  const ProjectedComplement proj = projectOutKnownSet(fw, rec.knownBefore);
  MatrixQ unknown(fw.dim(), proj.p.cols() + proj.q.cols());
  unknown.leftCols(proj.p.cols()) = proj.p;
  unknown.rightCols(proj.q.cols()) = proj.q;
  const SlideResult slid = slideToHyperplane(proj.conePoint, unknown);
  rec.conePoint = proj.conePoint;
  rec.functional = slid.functional;
  rec.reducedP = slid.points.leftCols(proj.p.cols());
  rec.reducedQ = slid.points.rightCols(proj.q.cols());
}

RadonCertificate restrictToSupport(const RadonCertificate& cert) {
  RadonCertificate out;
  out.lambda.resize(static_cast<Eigen::Index>(cert.supportP.size()));
  out.mu.resize(static_cast<Eigen::Index>(cert.supportQ.size()));
  for (std::size_t k = 0; k < cert.supportP.size(); ++k) out.lambda(k) = cert.lambda(cert.supportP[k]);
  for (std::size_t k = 0; k < cert.supportQ.size(); ++k) out.mu(k) = cert.mu(cert.supportQ[k]);
  out.supportP = positiveSupport(out.lambda);
  out.supportQ = positiveSupport(out.mu);
  return out;
}

KnownSet toOriginal(const IterationRecord& rec, const RadonCertificate& cert) {
  KnownSet s;
  for (int i : cert.supportP) s.p.push_back(rec.complementP[i]);
  for (int j : cert.supportQ) s.q.push_back(rec.complementQ[j]);
  return s;
}

bool exitCondition(const IterationRecord& rec) {
  return rec.complementP.size() <= 1 && rec.complementQ.size() <= 1;
}

}  // namespace

RigidityResult rigidityTest(const BipartiteFramework& fw, double tol) {
  if (fw.n() < 1) throw Error(ErrorCode::InvalidInput, "framework needs at least one P point");
  if (fw.m() > 0 && fw.Q.rows() != fw.P.rows())
    throw Error(ErrorCode::InvalidInput, "P and Q points have different dimensions");

  CertificateChain chain;
  chain.input = fw;
  chain.tolerance = tol;
  KnownSet known;

  for (int iteration = 0;; ++iteration) {
    IterationRecord rec;
    rec.index = iteration;
    rec.knownBefore = known;
    rec.complementP = known.complementP(fw.n());
    rec.complementQ = known.complementQ(fw.m());
    rec.knownAfter = known;

    auto finish = [&](StepKind kind, Verdict verdict) {
      rec.kind = kind;
      chain.records.push_back(std::move(rec));
      chain.verdict = verdict;
      return RigidityResult{verdict, std::move(chain)};
    };

    if (exitCondition(rec)) return finish(StepKind::Exit, Verdict::UniversallyRigid);

    reduce(fw, rec);
    const auto unknownCount =
        static_cast<Eigen::Index>(rec.complementP.size() + rec.complementQ.size());
    if (span(rec.reducedP, rec.reducedQ) == unknownCount - 1)
      return finish(StepKind::DimensionSpan, Verdict::DimensionallyRigidOnly);

    const BipartiteFramework reduced = reducedFramework(rec);
    auto radon = maximalSupportRadon(reduced);
    if (!radon) {
      if (reduced.n() == 0 || reduced.m() == 0)
        return finish(StepKind::OneSided, Verdict::NotDimensionallyRigid);
      SeparationCertificate sep = maxMarginQuadric(reduced);
      if (sep.delta <= 0)
        throw std::logic_error("Radon system infeasible but no strictly separating quadric");
      rec.separation = std::move(sep);
      return finish(StepKind::Separation, Verdict::NotDimensionallyRigid);
    }

    rec.kind = StepKind::Radon;
    rec.support = toOriginal(rec, *radon);
    const BipartiteFramework core = reduced.subframework(radon->supportP, radon->supportQ);
    rec.stress = buildSuperStableStress(core, restrictToSupport(*radon));
    rec.radon = std::move(radon);
    known = affineClosure(fw, merge(known, rec.support));
    if (!spanInvariantHolds(fw, known))
      throw std::logic_error("known set lost the equal-span property");
    rec.knownAfter = known;
    chain.records.push_back(std::move(rec));
  }
}

bool verifyChain(const BipartiteFramework& fw, const CertificateChain& chain, double tol) {
  if (!(chain.input == fw) || chain.records.empty()) return false;
  try {
    KnownSet known;
    for (std::size_t k = 0; k < chain.records.size(); ++k) {
      const IterationRecord& rec = chain.records[k];
      const bool last = k + 1 == chain.records.size();
      if (rec.index != static_cast<int>(k) || !(rec.knownBefore == known)) return false;
      if (rec.complementP != known.complementP(fw.n()) ||
          rec.complementQ != known.complementQ(fw.m()))
        return false;
      if (rec.terminal() != last) return false;

      if (rec.kind == StepKind::Exit) {
        if (!exitCondition(rec) || chain.verdict != Verdict::UniversallyRigid) return false;
        return rec.knownAfter == known;
      }
      if (exitCondition(rec)) return false;

      // Reduction: cone point and slid coordinates are recomputed exactly;
      // any valid slide functional is accepted.
      if (known.empty()) {
        if (rec.conePoint || rec.functional) return false;
        if (rec.reducedP != selectColumns(fw.P, rec.complementP) ||
            rec.reducedQ != selectColumns(fw.Q, rec.complementQ))
          return false;
      } else {
        if (!rec.conePoint || !rec.functional) return false;
        const ProjectedComplement proj = projectOutKnownSet(fw, known);
        if (*rec.conePoint != proj.conePoint || rec.functional->size() != fw.dim()) return false;
        if (rec.reducedP.cols() != proj.p.cols() || rec.reducedQ.cols() != proj.q.cols()) return false;
        if (rec.reducedP != slideAlong(proj.conePoint, proj.p, *rec.functional) ||
            rec.reducedQ != slideAlong(proj.conePoint, proj.q, *rec.functional))
          return false;
      }
      const BipartiteFramework reduced = reducedFramework(rec);
      const auto unknownCount =
          static_cast<Eigen::Index>(rec.complementP.size() + rec.complementQ.size());
      const bool independent = span(rec.reducedP, rec.reducedQ) == unknownCount - 1;

      switch (rec.kind) {
        case StepKind::DimensionSpan:
          return independent && chain.verdict == Verdict::DimensionallyRigidOnly &&
                 rec.knownAfter == known;
        case StepKind::OneSided:
          return !independent && (reduced.n() == 0 || reduced.m() == 0) &&
                 chain.verdict == Verdict::NotDimensionallyRigid && rec.knownAfter == known;
        case StepKind::Separation:
          return !independent && rec.separation && verifySeparation(*rec.separation, reduced) &&
                 chain.verdict == Verdict::NotDimensionallyRigid && rec.knownAfter == known;
        case StepKind::Radon: {
          if (independent || !rec.radon || !rec.stress) return false;
          if (!verifyRadon(*rec.radon, reduced)) return false;
          if (!(rec.support == toOriginal(rec, *rec.radon))) return false;
          const RadonCertificate core = restrictToSupport(*rec.radon);
          if (rec.stress->lambda != core.lambda || rec.stress->mu != core.mu) return false;
          const BipartiteFramework sub = reduced.subframework(rec.radon->supportP, rec.radon->supportQ);
          if (!verifySuperStableCertificate(sub, *rec.stress, tol)) return false;
          const KnownSet next = affineClosure(fw, merge(known, rec.support));
          if (!(rec.knownAfter == next) || next.size() <= known.size()) return false;
          if (!spanInvariantHolds(fw, next)) return false;
          known = next;
          break;
        }
        case StepKind::Exit:
          return false;
      }
    }
  } catch (const Error&) {
    return false;
  }
  return false;
}

std::vector<BatchItem> rigidityTestBatch(std::span<const BipartiteFramework> frameworks, double tol,
                                         unsigned threads) {
  std::vector<BatchItem> out(frameworks.size());
  if (frameworks.empty()) return out;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(frameworks.size()));

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < frameworks.size(); i = next++) {
      try {
        out[i].result = rigidityTest(frameworks[i], tol);
      } catch (const Error& e) {
        out[i].errorCode = e.code();
        out[i].error = e.what();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
    work();
  }
  return out;
}

}  // namespace urbip
