#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
// library toString overloads would otherwise win argument-dependent lookup
#define DOCTEST_STRINGIFY(...) doctest::toString(__VA_ARGS__)
#include <doctest.h>

#include "oracles.hpp"
#include "urbip/engine.hpp"
#include "urbip/exact.hpp"
#include "urbip/fixtures.hpp"
#include "urbip/geometry.hpp"
#include "urbip/reduction.hpp"

using namespace urbip;

namespace {

Rational r(long a, long b = 1) { return Rational(a) / Rational(b); }

VectorQ point(std::initializer_list<Rational> v) {
  VectorQ out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (auto& x : v) out(i++) = x;
  return out;
}

MatrixQ cols(std::initializer_list<VectorQ> pts) {
  MatrixQ m(pts.begin()->size(), static_cast<Eigen::Index>(pts.size()));
  Eigen::Index j = 0;
  for (auto& p : pts) m.col(j++) = p;
  return m;
}

}  // namespace

TEST_CASE("projection kills the known direction space") {
  // known: collinear alternating K(2,2) on the x-axis; unknown (1,1)
  const auto fw = makeFramework(2, {{0, 0}, {2, 0}, {1, 1}}, {{1, 0}, {3, 0}});
  const KnownSet known{{0, 1}, {0, 1}};
  CHECK(spanInvariantHolds(fw, known));
  const auto proj = projectOutKnownSet(fw, known);
  CHECK(proj.conePoint == point({0, 0}));
  REQUIRE(proj.p.cols() == 1);
  CHECK(proj.p.col(0) == point({0, 1}));
  CHECK(proj.indexP == std::vector<int>{2});
  CHECK(proj.q.cols() == 0);

  CHECK_THROWS_AS(projectOutKnownSet(fw, KnownSet{}), Error);
  // an unknown vertex on the known line violates the closure precondition
  const auto onLine = makeFramework(2, {{0, 0}, {2, 0}, {5, 0}}, {{1, 0}, {3, 0}});
  try {
    projectOutKnownSet(onLine, known);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ClosureViolated);
  }
}

TEST_CASE("projection of the two-stage fixture yields a coned alternating pair") {
  const auto& fw = fixture("projection_k44").framework;
  const KnownSet axis{{0, 1}, {0, 1}};
  CHECK(affineClosure(fw, axis) == axis);
  const auto proj = projectOutKnownSet(fw, axis);
  // every projected point lies in the plane z = 0 through the cone point
  CHECK(proj.conePoint == point({0, 0, 0}));
  for (Eigen::Index j = 0; j < proj.p.cols(); ++j) CHECK(proj.p(2, j) == 0);
  for (Eigen::Index j = 0; j < proj.q.cols(); ++j) CHECK(proj.q(2, j) == 0);
  MatrixQ all(3, 4);
  all << proj.p, proj.q;
  const auto slid = slideToHyperplane(proj.conePoint, all);
  // the slid points are collinear and alternate: slopes 0, 2 vs 1, 3
  CHECK(affineSpanDim(slid.points) == 1);
  CHECK(slid.points.row(1) == (MatrixQ(1, 4) << 0, 2, 1, 3).finished());
}

TEST_CASE("property: projector is idempotent and collapses the known set") {
  oracle::Generator gen(41);
  for (int k = 0; k < 60; ++k) {
    // known set: a random alternating pair on a random line in R^3
    const VectorQ base = gen.points(3, 1, 4).col(0);
    VectorQ dir = gen.points(3, 1, 4).col(0);
    if (dir.isZero()) dir(0) = 1;
    MatrixQ p(3, 3), q(3, 2);
    p.col(0) = base;
    p.col(1) = base + 2 * dir;
    q.col(0) = base + dir;
    q.col(1) = base + 3 * dir;
    p.col(2) = gen.points(3, 1, 4).col(0);
    const BipartiteFramework fw(p, q);
    const KnownSet known{{0, 1}, {0, 1}};
    if (inAffineSpan(p.col(2), knownPoints(fw, known))) continue;
    const auto proj = projectOutKnownSet(fw, known);
    // the unknown vertex replaced by its image projects to itself
    MatrixQ once = p;
    once.col(2) = proj.p.col(0);
    CHECK(projectOutKnownSet(BipartiteFramework(once, q), known).p.col(0) == proj.p.col(0));
    // the known set collapses, and the image moved orthogonally to the line
    CHECK(proj.conePoint == base);
    MatrixQ moved(3, 2);
    moved.col(0) = p.col(2) - proj.p.col(0);
    moved.col(1) = dir;
    CHECK(rank(moved) == 1);
    CHECK((proj.p.col(0) - proj.conePoint).dot(dir) == 0);
  }
}

TEST_CASE("sliding along rays") {
  const VectorQ origin = point({0, 0});
  const MatrixQ pts = cols({point({0, 1}), point({1, 1}), point({0, 2})});
  const auto slid = slideToHyperplane(origin, pts);
  CHECK(slid.functional == point({0, 1}));
  CHECK(slid.points == cols({point({0, 1}), point({1, 1}), point({0, 1})}));

  const auto one = slideToHyperplane(point({0}), cols({point({2})}));
  CHECK(one.points == cols({point({1})}));

  CHECK_THROWS_AS(slideToHyperplane(origin, cols({point({0, 0})})), Error);
  CHECK_THROWS_AS(slideAlong(origin, cols({point({1, 0})}), point({0, 1})), Error);
}

TEST_CASE("sliding the coned alternating line recovers an alternating line") {
  // apex at (0,1); P = {0,2}, Q = {1,3} sit on x-axis, scaled along rays
  const VectorQ apex = point({0, 1});
  const MatrixQ raised = cols({point({0, -1}), point({4, -1}), point({r(1, 2), r(1, 2)}), point({6, -1})});
  const auto slid = slideToHyperplane(apex, raised);
  for (Eigen::Index j = 0; j < 4; ++j) CHECK(slid.functional.dot(slid.points.col(j) - apex) == 1);
  CHECK(affineSpanDim(slid.points) == 1);
  const BipartiteFramework back(slid.points.leftCols(2), slid.points.rightCols(2));
  CHECK(rigidityTest(back).verdict == Verdict::UniversallyRigid);
}

TEST_CASE("functional search order") {
  // e1 and e2 both vanish on some difference; (1,1) works
  const MatrixQ pts = cols({point({0, 1}), point({1, 0})});
  CHECK(chooseSlideFunctional(point({0, 0}), pts) == point({1, 1}));
  // (1,1) vanishes on (1,-1): next is (1,2)
  const MatrixQ harder = cols({point({0, 1}), point({1, 0}), point({1, -1})});
  CHECK(chooseSlideFunctional(point({0, 0}), harder) == point({1, 2}));
}

TEST_CASE("property: slide is idempotent with the same functional") {
  oracle::Generator gen(43);
  for (int k = 0; k < 100; ++k) {
    const auto d = gen.integer(1, 3);
    const VectorQ p0 = gen.points(d, 1, 4).col(0);
    MatrixQ pts = gen.points(d, gen.integer(1, 5), 4);
    bool clash = false;
    for (Eigen::Index j = 0; j < pts.cols(); ++j) clash = clash || pts.col(j) == p0;
    if (clash) continue;
    const auto once = slideToHyperplane(p0, pts);
    CHECK(slideAlong(p0, once.points, once.functional) == once.points);
    for (Eigen::Index j = 0; j < pts.cols(); ++j)
      CHECK(once.functional.dot(once.points.col(j) - p0) == 1);
  }
}

TEST_CASE("affine closure") {
  const auto line = makeFramework(2, {{0, 0}, {2, 0}, {5, 0}}, {{1, 0}, {3, 0}});
  CHECK(affineClosure(line, KnownSet{{0, 1}, {0, 1}}) == (KnownSet{{0, 1, 2}, {0, 1}}));
  const auto offLine = makeFramework(2, {{0, 0}, {2, 0}, {1, 1}}, {{1, 0}, {3, 0}});
  CHECK(affineClosure(offLine, KnownSet{{0, 1}, {0, 1}}) == (KnownSet{{0, 1}, {0, 1}}));
  const auto& center = fixture("k43_center").framework;
  CHECK(affineClosure(center, KnownSet{{0, 1, 2}, {0, 1, 2}}) == (KnownSet{{0, 1, 2, 3}, {0, 1, 2}}));
}

TEST_CASE("property: closure is monotone, idempotent and order independent") {
  oracle::Generator gen(47);
  for (int k = 0; k < 60; ++k) {
    // points on two random lines in R^3, so closures are nontrivial
    MatrixQ p(3, 4), q(3, 4);
    const VectorQ a = gen.points(3, 1, 3).col(0), u = gen.points(3, 1, 3).col(0);
    for (int j = 0; j < 4; ++j) {
      p.col(j) = gen.integer(0, 1) ? VectorQ(a + gen.rational(4) * u) : gen.points(3, 1, 3).col(0);
      q.col(j) = gen.integer(0, 1) ? VectorQ(a + gen.rational(4) * u) : gen.points(3, 1, 3).col(0);
    }
    const BipartiteFramework fw(p, q);
    const KnownSet seed{{0}, {0}};
    const KnownSet bigger{{0, 1}, {0}};
    const KnownSet closed = affineClosure(fw, seed);
    CHECK(affineClosure(fw, closed) == closed);
    const KnownSet closedBigger = affineClosure(fw, bigger);
    for (int i : closed.p) CHECK(closedBigger.containsP(i));
    for (int j : closed.q) CHECK(closedBigger.containsQ(j));
    // same set listed in another order
    CHECK(affineClosure(fw, KnownSet{{1, 0}, {0}}) == closedBigger);
  }
}

TEST_CASE("coning") {
  const auto fw = oracle::lineFramework({0, 2}, {1, 3});
  const auto coned = cone(fw, point({0, 1}));
  CHECK(coned.points.cols() == 5);
  CHECK(coned.apex == 4);
  CHECK(coned.edges.size() == 4 + 4);
  CHECK(coned.points.col(4) == point({0, 1}));
  // bar directions of the cone admit no conic at infinity
  MatrixQ dirs(2, static_cast<Eigen::Index>(coned.edges.size()));
  for (std::size_t k = 0; k < coned.edges.size(); ++k)
    dirs.col(k) = coned.points.col(coned.edges[k].first) - coned.points.col(coned.edges[k].second);
  CHECK_FALSE(conicAtInfinityWitness(dirs));
  // sliding the cone's base away from the apex keeps the verdict
  CHECK(rigidityTest(fw).verdict == Verdict::UniversallyRigid);

  const auto single = cone(BipartiteFramework(MatrixQ::Zero(1, 1), MatrixQ()), point({0, 1}));
  CHECK(single.edges.size() == 1);

  try {
    cone(fw, point({1, 0}));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ApexInSpan);
  }
}
