#include "urbip/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace urbip {

using Json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& locus, const std::string& what) {
  throw Error(ErrorCode::ParseError, locus + ": " + what);
}

Json parseJson(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // Translate the byte offset into a line number.
    const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<long>(upto), '\n');
    fail("line " + std::to_string(line), e.what());
  }
}

const Json& field(const Json& obj, const std::string& key, const std::string& locus) {
  if (!obj.is_object()) fail(locus, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(locus, "missing field \"" + key + "\"");
  return *it;
}

Rational rationalFrom(const Json& j, const std::string& locus) {
  if (j.is_string()) {
    try {
      return parseRational(j.get<std::string>());
    } catch (const Error& e) {
      fail(locus, e.what());
    }
  }
  if (j.is_number_integer()) return Rational(j.get<long long>());
  fail(locus, "expected an integer or \"a/b\" string");
}

double doubleFrom(const Json& j, const std::string& locus) {
  if (!j.is_number()) fail(locus, "expected a number");
  return j.get<double>();
}

long long integerFrom(const Json& j, const std::string& locus) {
  if (!j.is_number_integer()) fail(locus, "expected an integer");
  return j.get<long long>();
}

const Json& arrayFrom(const Json& j, const std::string& locus) {
  if (!j.is_array()) fail(locus, "expected an array");
  return j;
}

Json toJson(const VectorQ& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(toString(v(i)));
  return out;
}

VectorQ vectorFrom(const Json& j, const std::string& locus) {
  arrayFrom(j, locus);
  VectorQ out(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i)
    out(static_cast<Eigen::Index>(i)) = rationalFrom(j[i], locus + "[" + std::to_string(i) + "]");
  return out;
}

// Points as an array of coordinate arrays (one per column).
Json pointsToJson(const MatrixQ& m) {
  Json out = Json::array();
  for (Eigen::Index c = 0; c < m.cols(); ++c) out.push_back(toJson(m.col(c)));
  return out;
}

MatrixQ pointsFrom(const Json& j, Eigen::Index d, const std::string& locus) {
  arrayFrom(j, locus);
  MatrixQ out(d, static_cast<Eigen::Index>(j.size()));
  for (std::size_t c = 0; c < j.size(); ++c) {
    const std::string at = locus + "[" + std::to_string(c) + "]";
    const VectorQ v = vectorFrom(j[c], at);
    if (v.size() != d)
      throw Error(ErrorCode::DimensionMismatch,
                  at + ": point has " + std::to_string(v.size()) + " coordinates, expected " +
                      std::to_string(d));
    out.col(static_cast<Eigen::Index>(c)) = v;
  }
  return out;
}

Json indicesToJson(const std::vector<int>& v) { return Json(v); }

std::vector<int> indicesFrom(const Json& j, const std::string& locus) {
  arrayFrom(j, locus);
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(static_cast<int>(integerFrom(j[i], locus + "[" + std::to_string(i) + "]")));
  return out;
}

Json knownToJson(const KnownSet& k) {
  return Json{{"P", indicesToJson(k.p)}, {"Q", indicesToJson(k.q)}};
}

KnownSet knownFrom(const Json& j, const std::string& locus) {
  return {indicesFrom(field(j, "P", locus), locus + ".P"),
          indicesFrom(field(j, "Q", locus), locus + ".Q")};
}

Json frameworkBody(const BipartiteFramework& fw) {
  return Json{{"d", fw.dim()}, {"P", pointsToJson(fw.P)}, {"Q", pointsToJson(fw.Q)}};
}

BipartiteFramework frameworkFrom(const Json& j, const std::string& locus) {
  const long long d = integerFrom(field(j, "d", locus), locus + ".d");
  if (d < 1) fail(locus + ".d", "dimension must be positive");
  MatrixQ p = pointsFrom(field(j, "P", locus), d, locus + ".P");
  MatrixQ q = pointsFrom(field(j, "Q", locus), d, locus + ".Q");
  if (p.cols() < 1) fail(locus + ".P", "at least one point required");
  return BipartiteFramework(std::move(p), std::move(q));
}

Json stressToJson(const StressCertificate& s) {
  return Json{{"order", s.omega.order()},
              {"omega", s.omega.packed()},
              {"declared_rank", s.declaredRank},
              {"min_eigenvalue", s.minEigenvalue},
              {"equilibrium_residual", s.equilibriumResidual},
              {"lambda", toJson(s.lambda)},
              {"mu", toJson(s.mu)}};
}

StressCertificate stressFrom(const Json& j, const std::string& locus) {
  StressCertificate s;
  const long long order = integerFrom(field(j, "order", locus), locus + ".order");
  const Json& packed = arrayFrom(field(j, "omega", locus), locus + ".omega");
  std::vector<double> values;
  for (std::size_t i = 0; i < packed.size(); ++i)
    values.push_back(doubleFrom(packed[i], locus + ".omega[" + std::to_string(i) + "]"));
  try {
    s.omega = SymmetricMatrix<double>::fromPacked(order, std::move(values));
  } catch (const Error& e) {
    fail(locus + ".omega", e.what());
  }
  s.declaredRank = integerFrom(field(j, "declared_rank", locus), locus + ".declared_rank");
  s.minEigenvalue = doubleFrom(field(j, "min_eigenvalue", locus), locus + ".min_eigenvalue");
  s.equilibriumResidual =
      doubleFrom(field(j, "equilibrium_residual", locus), locus + ".equilibrium_residual");
  s.lambda = vectorFrom(field(j, "lambda", locus), locus + ".lambda");
  s.mu = vectorFrom(field(j, "mu", locus), locus + ".mu");
  return s;
}

Json recordToJson(const IterationRecord& r) {
  Json out{{"index", r.index},
           {"known_before", knownToJson(r.knownBefore)},
           {"complement", Json{{"P", indicesToJson(r.complementP)}, {"Q", indicesToJson(r.complementQ)}}}};
  if (r.conePoint) out["cone_point"] = toJson(*r.conePoint);
  if (r.functional) out["functional"] = toJson(*r.functional);
  out["reduced"] = Json{{"P", pointsToJson(r.reducedP)}, {"Q", pointsToJson(r.reducedQ)}};
  out["outcome"] = std::string(toString(r.kind));
  if (r.radon)
    out["radon"] = Json{{"lambda", toJson(r.radon->lambda)},
                        {"mu", toJson(r.radon->mu)},
                        {"support", Json{{"P", r.radon->supportP}, {"Q", r.radon->supportQ}}}};
  if (r.separation) {
    Json packed = Json::array();
    for (const auto& a : r.separation->A.packed()) packed.push_back(toString(a));
    out["separation"] = Json{{"order", r.separation->A.order()},
                             {"A", std::move(packed)},
                             {"delta", toString(r.separation->delta)}};
  }
  out["support"] = knownToJson(r.support);
  if (r.stress) out["stress"] = stressToJson(*r.stress);
  out["known_after"] = knownToJson(r.knownAfter);
  return out;
}

IterationRecord recordFrom(const Json& j, Eigen::Index d, const std::string& locus) {
  IterationRecord r;
  r.index = static_cast<int>(integerFrom(field(j, "index", locus), locus + ".index"));
  r.knownBefore = knownFrom(field(j, "known_before", locus), locus + ".known_before");
  const Json& comp = field(j, "complement", locus);
  r.complementP = indicesFrom(field(comp, "P", locus + ".complement"), locus + ".complement.P");
  r.complementQ = indicesFrom(field(comp, "Q", locus + ".complement"), locus + ".complement.Q");
  if (j.contains("cone_point")) r.conePoint = vectorFrom(j["cone_point"], locus + ".cone_point");
  if (j.contains("functional")) r.functional = vectorFrom(j["functional"], locus + ".functional");
  const Json& reduced = field(j, "reduced", locus);
  r.reducedP = pointsFrom(field(reduced, "P", locus + ".reduced"), d, locus + ".reduced.P");
  r.reducedQ = pointsFrom(field(reduced, "Q", locus + ".reduced"), d, locus + ".reduced.Q");
  const Json& outcome = field(j, "outcome", locus);
  if (!outcome.is_string()) fail(locus + ".outcome", "expected a string");
  auto kind = parseStepKind(outcome.get<std::string>());
  if (!kind) fail(locus + ".outcome", "unknown outcome \"" + outcome.get<std::string>() + "\"");
  r.kind = *kind;
  if (j.contains("radon")) {
    const std::string at = locus + ".radon";
    const Json& rj = j["radon"];
    RadonCertificate c;
    c.lambda = vectorFrom(field(rj, "lambda", at), at + ".lambda");
    c.mu = vectorFrom(field(rj, "mu", at), at + ".mu");
    const KnownSet s = knownFrom(field(rj, "support", at), at + ".support");
    c.supportP = s.p;
    c.supportQ = s.q;
    r.radon = std::move(c);
  }
  if (j.contains("separation")) {
    const std::string at = locus + ".separation";
    const Json& sj = j["separation"];
    const long long order = integerFrom(field(sj, "order", at), at + ".order");
    const Json& packed = arrayFrom(field(sj, "A", at), at + ".A");
    std::vector<Rational> values;
    for (std::size_t i = 0; i < packed.size(); ++i)
      values.push_back(rationalFrom(packed[i], at + ".A[" + std::to_string(i) + "]"));
    SeparationCertificate c;
    try {
      c.A = SymmetricMatrix<Rational>::fromPacked(order, std::move(values));
    } catch (const Error& e) {
      fail(at + ".A", e.what());
    }
    c.delta = rationalFrom(field(sj, "delta", at), at + ".delta");
    r.separation = std::move(c);
  }
  r.support = knownFrom(field(j, "support", locus), locus + ".support");
  if (j.contains("stress")) r.stress = stressFrom(j["stress"], locus + ".stress");
  r.knownAfter = knownFrom(field(j, "known_after", locus), locus + ".known_after");
  return r;
}

}  // namespace

FrameworkDocument parseFrameworkDocument(std::string_view text) {
  const Json j = parseJson(text);
  if (!j.is_object()) fail("document", "expected an object");
  if (j.contains("format_version") &&
      integerFrom(j["format_version"], "format_version") != kFormatVersion)
    fail("format_version", "unsupported version");
  FrameworkDocument doc;
  doc.framework = frameworkFrom(j, "document");
  if (j.contains("name")) {
    if (!j["name"].is_string()) fail("name", "expected a string");
    doc.name = j["name"].get<std::string>();
  }
  if (j.contains("expected")) {
    if (!j["expected"].is_string()) fail("expected", "expected a string");
    doc.expected = parseVerdict(j["expected"].get<std::string>());
    if (!doc.expected) fail("expected", "unknown verdict");
  }
  return doc;
}

BipartiteFramework parseFramework(std::string_view text) {
  return parseFrameworkDocument(text).framework;
}

std::string serializeFramework(const FrameworkDocument& doc) {
  Json out{{"format_version", kFormatVersion}};
  if (doc.name) out["name"] = *doc.name;
  const Json body = frameworkBody(doc.framework);
  for (const auto& [k, v] : body.items()) out[k] = v;
  if (doc.expected) out["expected"] = std::string(toString(*doc.expected));
  return out.dump(2) + "\n";
}

std::string serializeFramework(const BipartiteFramework& fw) {
  return serializeFramework(FrameworkDocument{fw, std::nullopt, std::nullopt});
}

std::string serializeCertificate(const CertificateChain& chain) {
  Json records = Json::array();
  for (const auto& r : chain.records) records.push_back(recordToJson(r));
  Json out{{"format_version", kFormatVersion},
           {"verdict", std::string(toString(chain.verdict))},
           {"tolerances", Json{{"stress", chain.tolerance}, {"diagonal_relative", 1e-12}}},
           {"framework", frameworkBody(chain.input)},
           {"iterations", std::move(records)}};
  return out.dump(2) + "\n";
}

CertificateChain parseCertificate(std::string_view text) {
  const Json j = parseJson(text);
  if (!j.is_object()) fail("document", "expected an object");
  CertificateChain chain;
  const Json& verdict = field(j, "verdict", "document");
  if (!verdict.is_string() || !parseVerdict(verdict.get<std::string>()))
    fail("verdict", "unknown verdict");
  chain.verdict = *parseVerdict(verdict.get<std::string>());
  if (j.contains("tolerances"))
    chain.tolerance = doubleFrom(field(j["tolerances"], "stress", "tolerances"), "tolerances.stress");
  chain.input = frameworkFrom(field(j, "framework", "document"), "framework");
  const Json& records = arrayFrom(field(j, "iterations", "document"), "iterations");
  for (std::size_t i = 0; i < records.size(); ++i)
    chain.records.push_back(
        recordFrom(records[i], chain.input.dim(), "iterations[" + std::to_string(i) + "]"));
  return chain;
}

std::string readFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void writeFile(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out << contents;
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

}  // namespace urbip
