#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
// library toString overloads would otherwise win argument-dependent lookup
#define DOCTEST_STRINGIFY(...) doctest::toString(__VA_ARGS__)
#include <doctest.h>

#include "oracles.hpp"
#include "urbip/fixtures.hpp"
#include "urbip/geometry.hpp"

using namespace urbip;

namespace {

Rational r(long a, long b = 1) { return Rational(a) / Rational(b); }

MatrixQ cols(Eigen::Index d, std::initializer_list<std::initializer_list<long>> pts) {
  MatrixQ m(d, static_cast<Eigen::Index>(pts.size()));
  Eigen::Index j = 0;
  for (auto& p : pts) {
    Eigen::Index i = 0;
    for (long v : p) m(i++, j) = v;
    ++j;
  }
  return m;
}

VectorQ point(std::initializer_list<long> v) {
  VectorQ out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (long x : v) out(i++) = x;
  return out;
}

MatrixQ cube() {
  MatrixQ m(3, 8);
  for (int k = 0; k < 8; ++k)
    for (int i = 0; i < 3; ++i) m(i, k) = (k >> i) & 1;
  return m;
}

}  // namespace

TEST_CASE("veronese lifts") {
  CHECK(veronese(point({2})).toDense() == cols(2, {{4, 2}, {2, 1}}));
  MatrixQ zero = MatrixQ::Zero(3, 3);
  zero(2, 2) = 1;
  CHECK(veronese(point({0, 0})).toDense() == zero);
  CHECK(veronese(point({1, 2})).toDense() == cols(3, {{1, 2, 1}, {2, 4, 2}, {1, 2, 1}}));
}

TEST_CASE("property: veronese is PSD of rank one") {
  oracle::Generator gen(3);
  for (int k = 0; k < 100; ++k) {
    const auto d = gen.integer(1, 4);
    const VectorQ v = gen.points(d, 1).col(0);
    const MatrixQ lift = veronese(v).toDense();
    CHECK(rank(lift) == 1);
    CHECK(lift(d, d) == 1);
    // rank one with a positive diagonal entry: x^t L x = (v^.x)^2 >= 0
    const VectorQ x = gen.points(d + 1, 1).col(0);
    CHECK((x.transpose() * lift * x)(0, 0) >= 0);
    for (Eigen::Index i = 0; i <= d; ++i) CHECK(lift(i, i) >= 0);
  }
}

TEST_CASE("affine span dimensions") {
  CHECK(affineSpanDim(cols(1, {{5}})) == 0);
  CHECK(affineSpanDim(cols(1, {{0}, {1}, {2}})) == 1);
  CHECK(affineSpanDim(cube()) == 3);
  CHECK_THROWS_AS(affineSpanDim(MatrixQ(2, 0)), Error);
}

TEST_CASE("affine span membership") {
  CHECK(inAffineSpan(point({3}), cols(1, {{0}, {1}})));
  CHECK_FALSE(inAffineSpan(point({0, 1}), cols(2, {{0, 0}, {2, 0}})));
  CHECK(inAffineSpan(point({1, 1, 1}), cols(3, {{0, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}})));
  CHECK_THROWS_AS(inAffineSpan(point({1}), MatrixQ(1, 0)), Error);
}

TEST_CASE("property: span dimension is affinely invariant") {
  oracle::Generator gen(5);
  for (int k = 0; k < 100; ++k) {
    const auto d = gen.integer(1, 3);
    MatrixQ pts = gen.points(d, gen.integer(1, 6), 4);
    if (gen.integer(0, 1) && pts.cols() > 2) pts.col(2) = (pts.col(0) + pts.col(1)) / 2;
    MatrixQ lin(d, d);
    do {
      for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) lin(i, j) = gen.rational(3);
    } while (rank(lin) < d);
    const VectorQ shift = gen.points(d, 1).col(0);
    MatrixQ moved = lin * pts;
    moved.colwise() += shift;
    CHECK(affineSpanDim(moved) == affineSpanDim(pts));
  }
}

TEST_CASE("property: membership is order independent") {
  oracle::Generator gen(6);
  for (int k = 0; k < 60; ++k) {
    MatrixQ s = gen.points(3, 3, 4);
    const VectorQ v = (s.col(0) + s.col(1)) / 2;
    const VectorQ w = gen.integer(0, 1) ? VectorQ(2 * v - s.col(0)) : gen.points(3, 1, 4).col(0);
    MatrixQ withV(3, 4);
    withV.leftCols(3) = s;
    withV.col(3) = v;
    MatrixQ reordered = withV;
    reordered.col(0).swap(reordered.col(3));
    CHECK(inAffineSpan(v, s));
    CHECK(inAffineSpan(w, withV) == inAffineSpan(w, reordered));
  }
}

TEST_CASE("general position") {
  CHECK(isGeneralPosition(cols(2, {{0, 0}, {1, 0}, {0, 1}}), 2));
  CHECK_FALSE(isGeneralPosition(cols(2, {{0, 0}, {1, 0}, {2, 0}}), 2));
  const BipartiteFramework& k65 = fixture("k65_quadric").framework;
  CHECK_FALSE(isGeneralPosition(k65.allPoints(), 3));
  CHECK(isQuadricGeneralPosition(k65.allPoints(), 3));
}

TEST_CASE("quadric general position") {
  CHECK(isQuadricGeneralPosition(cols(1, {{0}, {1}, {5}}), 1));
  CHECK_FALSE(isQuadricGeneralPosition(cols(1, {{0}, {1}, {1}}), 1));
  // six rational points on the unit circle
  const BipartiteFramework& hex = fixture("k33_conic").framework;
  CHECK_FALSE(isQuadricGeneralPosition(hex.allPoints(), 2));
  CHECK(isQuadricGeneralPosition(fixture("k43_min").framework.allPoints(), 2));
}

TEST_CASE("conic at infinity") {
  auto w = conicAtInfinityWitness(cols(2, {{1, 0}}));
  REQUIRE(w);
  CHECK(quadraticForm(*w, point({1, 0})) == 0);
  CHECK_FALSE(w->toDense().isZero());

  CHECK_FALSE(conicAtInfinityWitness(cols(1, {{1}})));

  // Alternating line {0,2} vs {1,3} coned from the apex (0,1): bar directions
  // within the line are (1,0), apex bars are (x,-1).
  const MatrixQ dirs = cols(2, {{1, 0}, {0, -1}, {1, -1}, {2, -1}, {3, -1}});
  CHECK_FALSE(conicAtInfinityWitness(dirs));
  // Two directions leave the off-diagonal entry free.
  CHECK(conicAtInfinityWitness(cols(2, {{1, 0}, {0, 1}})));
}

TEST_CASE("symmetric storage") {
  SymmetricMatrix<Rational> s(3);
  s.set(2, 0, r(1, 2));
  CHECK(s(0, 2) == r(1, 2));
  CHECK(s.packedSize() == 6);
  CHECK(SymmetricMatrix<Rational>::fromUpper(s.toDense()) == s);
  CHECK(SymmetricMatrix<Rational>::fromPacked(3, s.packed()) == s);
  CHECK_THROWS_AS(SymmetricMatrix<Rational>::fromPacked(3, {Rational(1)}), Error);
  CHECK(frobeniusInner(veronese(point({1, 2})), veronese(point({1, 2}))) == 36);
}

TEST_CASE("framework construction") {
  CHECK_THROWS_AS(BipartiteFramework(MatrixQ(2, 0), MatrixQ(2, 1)), Error);
  CHECK_THROWS_AS(BipartiteFramework(MatrixQ::Zero(2, 1), MatrixQ::Zero(3, 1)), Error);
  const BipartiteFramework one(MatrixQ::Zero(2, 1), MatrixQ());
  CHECK(one.m() == 0);
  CHECK(one.Q.rows() == 2);
}
