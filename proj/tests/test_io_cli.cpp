#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
// library toString overloads would otherwise win argument-dependent lookup
#define DOCTEST_STRINGIFY(...) doctest::toString(__VA_ARGS__)
#include <doctest.h>

#include "oracles.hpp"
#include "urbip/cli.hpp"
#include "urbip/fixtures.hpp"
#include "urbip/io.hpp"

#include <json.hpp>

#include <filesystem>
#include <sstream>

using namespace urbip;
namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = cliMain(args, out, err);
  return {status, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("urbip_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("parse frameworks") {
  const auto fw = parseFramework(R"({"d":1,"P":[["0"],["2"]],"Q":[["1"],["3"]]})");
  CHECK(fw == oracle::lineFramework({0, 2}, {1, 3}));

  const auto cube = parseFramework(R"({"d":3,
    "P":[["0","0","0"],["1","1","0"],["1","0","1"],["0","1","1"]],
    "Q":[["1","0","0"],["0","1","0"],["0","0","1"],["1","1","1"]]})");
  CHECK(cube == fixture("cube_k44").framework);

  const auto mixed = parseFramework(R"({"d":2,"P":[[1,"-3/6"]],"Q":[]})");
  CHECK(mixed.P(1, 0) == Rational(-1) / 2);
  CHECK(mixed.m() == 0);
}

TEST_CASE("parse errors carry a locus") {
  auto code = [](const std::string& text) {
    try {
      parseFramework(text);
    } catch (const Error& e) {
      return std::pair{e.code(), std::string(e.what())};
    }
    return std::pair{ErrorCode::IoError, std::string()};
  };
  auto zero = code(R"({"d":1,"P":[["1/0"]],"Q":[]})");
  CHECK(zero.first == ErrorCode::ParseError);
  CHECK(zero.second.find("P[0][0]") != std::string::npos);

  auto syntax = code("{\n\"d\": 1,\n\"P\": [[\"1\"]\n");
  CHECK(syntax.first == ErrorCode::ParseError);
  CHECK(syntax.second.find("line") != std::string::npos);

  CHECK(code(R"({"d":2,"P":[["1"]],"Q":[]})").first == ErrorCode::DimensionMismatch);
  CHECK(code(R"({"d":1,"Q":[]})").first == ErrorCode::ParseError);
  CHECK(code(R"({"d":1,"P":[],"Q":[]})").first == ErrorCode::ParseError);
  CHECK(code(R"({"d":1,"P":[["x"]],"Q":[]})").first == ErrorCode::ParseError);
  CHECK(code(R"({"d":1,"P":[["1"]],"Q":[],"expected":"wobbly"})").first == ErrorCode::ParseError);
}

TEST_CASE("property: canonical serialization round-trips") {
  oracle::Generator gen(83);
  for (int k = 0; k < 100; ++k) {
    FrameworkDocument doc{gen.framework(gen.integer(1, 3), gen.integer(1, 4), gen.integer(0, 4)),
                          std::nullopt, std::nullopt};
    if (gen.integer(0, 1)) doc.name = "random-" + std::to_string(k);
    if (gen.integer(0, 1)) doc.expected = Verdict::DimensionallyRigidOnly;
    const std::string text = serializeFramework(doc);
    const FrameworkDocument back = parseFrameworkDocument(text);
    CHECK(back.framework == doc.framework);
    CHECK(back.name == doc.name);
    CHECK(back.expected == doc.expected);
    CHECK(serializeFramework(back) == text);
  }
  // non-canonical input canonicalizes, and that is idempotent
  const std::string loose = R"({"Q":[[2]],"P":[["4/2"],["-0"]],"d":1})";
  const std::string once = serializeFramework(parseFrameworkDocument(loose));
  CHECK(serializeFramework(parseFrameworkDocument(once)) == once);
  CHECK(once.find("\"2\"") != std::string::npos);
}

TEST_CASE("certificate documents round-trip and re-verify") {
  for (const auto& f : fixtures()) {
    INFO(f.name);
    const auto chain = rigidityTest(f.framework).chain;
    const std::string text = serializeCertificate(chain);
    const CertificateChain back = parseCertificate(text);
    CHECK(serializeCertificate(back) == text);
    CHECK(verifyChain(f.framework, back, back.tolerance));
    // doubles survive bit for bit
    for (std::size_t k = 0; k < chain.records.size(); ++k)
      if (chain.records[k].stress)
        CHECK(back.records[k].stress->omega == chain.records[k].stress->omega);
  }
}

TEST_CASE("fixtures on disk") {
  const fs::path dir = scratch("fixtures");
  const auto files = emitFixtures(dir);
  CHECK(files.size() == fixtures().size());
  const auto manifest = nlohmann::json::parse(readFile(dir / "manifest.json"));
  int derived = 0;
  for (const auto& entry : manifest) {
    const auto doc = parseFrameworkDocument(readFile(dir / entry["file"].get<std::string>()));
    REQUIRE(doc.expected);
    CHECK(rigidityTest(doc.framework).verdict == *doc.expected);
    derived += entry["derived"].get<bool>();
  }
  CHECK(derived == 4);
  CHECK_THROWS_AS(emitFixtures(dir / "manifest.json" / "nested"), Error);
}

TEST_CASE("cli check, verify, trace") {
  const fs::path dir = scratch("cli");
  emitFixtures(dir);

  auto run = cli({"check", (dir / "k22_line.json").string()});
  CHECK(run.status == 0);
  CHECK(run.out == "universally-rigid\n");

  run = cli({"check", (dir / "separated_line.json").string()});
  CHECK(run.status == 0);
  CHECK(run.out == "not-dimensionally-rigid\n");

  run = cli({"check", (dir / "projection_k44.json").string(), "--trace", "--certificate",
             (dir / "p.cert").string()});
  CHECK(run.status == 0);
  const auto chain = parseCertificate(readFile(dir / "p.cert"));
  CHECK(run.err.find("iterations: " + std::to_string(chain.records.size())) != std::string::npos);
  std::size_t lines = 0;
  for (std::size_t at = run.err.find("iteration "); at != std::string::npos;
       at = run.err.find("iteration ", at + 1))
    ++lines;
  CHECK(lines == chain.records.size());

  run = cli({"verify", (dir / "projection_k44.json").string(), (dir / "p.cert").string()});
  CHECK(run.status == 0);
  CHECK(run.out == "valid universally-rigid\n");
  run = cli({"verify", (dir / "cube_k44.json").string(), (dir / "p.cert").string()});
  CHECK(run.status == 1);

  run = cli({"check", (dir / "k11.json").string(), (dir / "triangle_k21.json").string(),
             "--certificate", (dir / "certs").string()});
  CHECK(run.status == 0);
  CHECK(run.out.find("k11.json: universally-rigid") != std::string::npos);
  CHECK(run.out.find("triangle_k21.json: dimensionally-rigid") != std::string::npos);
  CHECK(fs::exists(dir / "certs" / "triangle_k21.cert.json"));

  run = cli({"check", (dir / "k22_line.json").string(), "--dump-coords"});
  CHECK(run.out.find("E 1 1") != std::string::npos);
}

TEST_CASE("cli errors and other commands") {
  const fs::path dir = scratch("cli_errors");
  emitFixtures(dir);
  writeFile(dir / "malformed.json", R"({"d":1,"P":[["1/0"]],"Q":[]})");
  auto run = cli({"check", (dir / "malformed.json").string()});
  CHECK(run.status == 2);
  CHECK(run.err.find("ParseError") != std::string::npos);

  CHECK(cli({"check", (dir / "missing.json").string()}).status == 2);
  CHECK(cli({}).status == 2);
  CHECK(cli({"frobnicate"}).status == 2);

  run = cli({"separate", (dir / "separated_line.json").string()});
  CHECK(run.status == 0);
  auto doc = nlohmann::json::parse(run.out);
  CHECK(doc["kind"] == "quadric");
  run = cli({"separate", (dir / "k22_line.json").string()});
  doc = nlohmann::json::parse(run.out);
  CHECK(doc["kind"] == "radon");
  CHECK(doc["lambda"][0] == "1/4");

  run = cli({"stress", (dir / "k22_line.json").string()});
  CHECK(run.status == 0);
  doc = nlohmann::json::parse(run.out);
  CHECK(doc["rank"] == 2);
  CHECK(doc["omega"].size() == 4);

  run = cli({"fixtures", (dir / "again").string()});
  CHECK(run.status == 0);
  CHECK(fs::exists(dir / "again" / "manifest.json"));
}
