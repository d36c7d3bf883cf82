#include "urbip/fixtures.hpp"

#include "urbip/io.hpp"

#include <json.hpp>

#include <algorithm>

namespace urbip {

namespace {

using Points = std::vector<std::vector<Rational>>;

Rational q(long a, long b = 1) { return Rational(a) / Rational(b); }

// Rational point on the unit circle from the tangent half-angle t = a/b;
// b = 0 gives (-1, 0).
std::vector<Rational> circle(long a, long b) {
  if (b == 0) return {q(-1), q(0)};
  const Rational t = q(a, b);
  const Rational s = 1 + t * t;
  return {(1 - t * t) / s, 2 * t / s};
}

std::vector<Fixture> build() {
  using V = Verdict;
  std::vector<Fixture> out;
  auto add = [&](std::string name, Eigen::Index d, Points p, Points qs, V expected, bool derived,
                 std::string note) {
    out.push_back({std::move(name), makeFramework(d, p, qs), expected, derived, std::move(note)});
  };

  add("k11", 1, {{q(0)}}, {{q(1)}}, V::UniversallyRigid, false, "single bar");
  add("k22_line", 1, {{q(0)}, {q(2)}}, {{q(1)}, {q(3)}}, V::UniversallyRigid, false,
      "sides alternate along the line");
  add("separated_line", 1, {{q(0)}, {q(1)}}, {{q(2)}, {q(3)}}, V::NotDimensionallyRigid, false,
      "sides separated by a point");
  add("k33_conic", 2, {circle(0, 1), circle(7, 4), circle(-7, 4)},
      {circle(4, 7), circle(1, 0), circle(-4, 7)}, V::UniversallyRigid, false,
      "alternating hexagon on the unit circle");
  add("k33_split", 2, {circle(0, 1), circle(4, 7), circle(1, 0)},
      {circle(7, 4), circle(-7, 4), circle(-4, 7)}, V::NotDimensionallyRigid, false,
      "hexagon on the unit circle, sides separated by a line pair");
  add("k43_center", 2, {circle(0, 1), circle(7, 4), circle(-7, 4), {q(0), q(0)}},
      {circle(4, 7), circle(1, 0), circle(-4, 7)}, V::UniversallyRigid, false,
      "alternating hexagon plus its center; rigid through the affine closure");
  add("cube_k44", 3, {{q(0), q(0), q(0)}, {q(1), q(1), q(0)}, {q(1), q(0), q(1)}, {q(0), q(1), q(1)}},
      {{q(1), q(0), q(0)}, {q(0), q(1), q(0)}, {q(0), q(0), q(1)}, {q(1), q(1), q(1)}},
      V::UniversallyRigid, false, "parity classes of the unit cube");
  add("flexible_k32", 2, {{q(0), q(0)}, {q(1), q(1)}, {q(-2), q(-2)}}, {{q(0), q(0)}, {q(0), q(0)}},
      V::NotDimensionallyRigid, false,
      "certified core at the origin; the two remaining vertices slide onto one point");
  add("projection_k44", 3,
      {{q(0), q(0), q(0)}, {q(0), q(0), q(2)}, {q(1), q(0), q(5)}, {q(2), q(4), q(-1)}},
      {{q(0), q(0), q(1)}, {q(0), q(0), q(3)}, {q(3), q(3), q(7)}, {q(-1), q(-3), q(2)}},
      V::UniversallyRigid, false,
      "alternating K(2,2) on an axis, then an alternating K(2,2) after projection and sliding");
  add("triangle_k21", 2, {{q(0), q(0)}, {q(2), q(0)}}, {{q(1), q(1)}}, V::DimensionallyRigidOnly,
      false, "affinely independent vertices");
  add("k43_min", 2, {{q(-1), q(3)}, {q(-1), q(-1)}, {q(3), q(0)}, {q(-4), q(2)}},
      {{q(-4), q(4)}, {q(3), q(4)}, {q(-1), q(1)}}, V::UniversallyRigid, true,
      "planar K(4,3) in quadric general position");
  add("k65_quadric", 3,
      {{q(-2), q(-1), q(-5)}, {q(-3), q(2), q(1)}, {q(-5), q(3), q(0)}, {q(0), q(2), q(-3)},
       {q(-2), q(-1), q(-2)}, {q(2), q(-2), q(3)}},
      {{q(-2), q(1), q(-3)}, {q(-2), q(-5), q(-9)}, {q(-7), q(4), q(-1)}, {q(1), q(-2), q(3)},
       {q(0), q(0), q(1)}},
      V::UniversallyRigid, true, "K(6,5) in quadric general position, not in general position");
  add("k64_sphere", 3,
      {{q(-12, 13), q(0), q(5, 13)}, {q(3, 7), q(2, 7), q(6, 7)}, {q(-3, 5), q(0), q(4, 5)},
       {q(12, 17), q(-8, 17), q(9, 17)}, {q(-6, 11), q(-2, 11), q(9, 11)}, {q(2, 3), q(2, 3), q(1, 3)}},
      {{q(2, 11), q(6, 11), q(9, 11)}, {q(12, 49), q(-24, 49), q(41, 49)},
       {q(-24, 41), q(-4, 41), q(33, 41)}, {q(1), q(0), q(0)}},
      V::UniversallyRigid, true, "rational K(6,4) on the unit sphere");
  add("k55_sphere", 3,
      {{q(-1), q(0), q(0)}, {q(2, 3), q(2, 3), q(1, 3)}, {q(0), q(1), q(0)}, {q(0), q(-4, 5), q(-3, 5)},
       {q(24, 41), q(4, 41), q(33, 41)}},
      {{q(16, 29), q(12, 29), q(21, 29)}, {q(-8, 17), q(-12, 17), q(9, 17)},
       {q(-2, 3), q(2, 3), q(-1, 3)}, {q(12, 17), q(8, 17), q(9, 17)},
       {q(-12, 29), q(16, 29), q(21, 29)}},
      V::UniversallyRigid, true, "rational K(5,5) on the unit sphere");
  return out;
}

}  // namespace

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = build();
  return all;
}

const Fixture& fixture(const std::string& name) {
  const auto& all = fixtures();
  auto it = std::find_if(all.begin(), all.end(), [&](const Fixture& f) { return f.name == name; });
  if (it == all.end()) throw Error(ErrorCode::InvalidInput, "unknown fixture " + name);
  return *it;
}

std::vector<std::filesystem::path> emitFixtures(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot create " + dir.string() + ": " + ec.message());

  std::vector<std::filesystem::path> written;
  nlohmann::ordered_json manifest = nlohmann::ordered_json::array();
  for (const Fixture& f : fixtures()) {
    const auto path = dir / (f.name + ".json");
    writeFile(path, serializeFramework(FrameworkDocument{f.framework, f.name, f.expected}));
    written.push_back(path);
    manifest.push_back({{"name", f.name},
                        {"file", f.name + ".json"},
                        {"expected", std::string(toString(f.expected))},
                        {"derived", f.derived},
                        {"note", f.note}});
  }
  writeFile(dir / "manifest.json", manifest.dump(2) + "\n");
  return written;
}

}  // namespace urbip
