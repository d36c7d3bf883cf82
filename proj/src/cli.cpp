#include "urbip/cli.hpp"

#include "urbip/engine.hpp"
#include "urbip/fixtures.hpp"
#include "urbip/io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>

namespace urbip {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kRejected = 1;
constexpr int kInputError = 2;
constexpr int kNumericalError = 3;

int exitCode(const Error& e) {
  return e.code() == ErrorCode::NumericalFailure ? kNumericalError : kInputError;
}

Json rationals(const VectorQ& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(toString(v(i)));
  return out;
}

void trace(const CertificateChain& chain, std::ostream& err) {
  for (const auto& r : chain.records) {
    err << "iteration " << r.index << ": " << toString(r.kind) << ", unknown "
        << r.complementP.size() << "+" << r.complementQ.size();
    if (r.kind == StepKind::Radon)
      err << ", support " << r.support.size() << ", known " << r.knownBefore.size() << " -> "
          << r.knownAfter.size();
    err << "\n";
  }
  err << "iterations: " << chain.records.size() << "\n";
}

// Whitespace-separated tables: one "P i x..." / "Q j x..." row per vertex and
// one "E i j" row per bar, coordinates as decimals.
void dumpCoordinates(const BipartiteFramework& fw, std::ostream& out) {
  auto row = [&](char side, Eigen::Index k, const auto& col) {
    out << side << " " << k;
    for (Eigen::Index i = 0; i < col.size(); ++i) out << " " << toDouble(col(i));
    out << "\n";
  };
  for (Eigen::Index i = 0; i < fw.n(); ++i) row('P', i, fw.P.col(i));
  for (Eigen::Index j = 0; j < fw.m(); ++j) row('Q', j, fw.Q.col(j));
  for (Eigen::Index i = 0; i < fw.n(); ++i)
    for (Eigen::Index j = 0; j < fw.m(); ++j) out << "E " << i << " " << j << "\n";
}

struct CheckOptions {
  std::vector<std::string> files;
  std::string certificate;
  double tol = kDefaultStressTol;
  bool trace = false;
  bool dumpCoords = false;
};

int runCheck(const CheckOptions& opt, std::ostream& out, std::ostream& err) {
  std::vector<BipartiteFramework> frameworks;
  for (const auto& file : opt.files) {
    try {
      frameworks.push_back(parseFramework(readFile(file)));
    } catch (const Error& e) {
      err << file << ": " << e.what() << "\n";
      return kInputError;
    }
  }
  const bool many = frameworks.size() > 1;
  if (many && !opt.certificate.empty()) std::filesystem::create_directories(opt.certificate);

  const auto results = rigidityTestBatch(frameworks, opt.tol);
  int status = 0;
  for (std::size_t k = 0; k < results.size(); ++k) {
    const auto& item = results[k];
    const std::string prefix = many ? opt.files[k] + ": " : "";
    if (!item.result) {
      err << prefix << item.error << "\n";
      status = std::max(status, *item.errorCode == ErrorCode::NumericalFailure ? kNumericalError
                                                                               : kInputError);
      continue;
    }
    out << prefix << toString(item.result->verdict) << "\n";
    if (opt.trace) trace(item.result->chain, err);
    if (opt.dumpCoords) dumpCoordinates(frameworks[k], out);
    if (!opt.certificate.empty()) {
      std::filesystem::path target = opt.certificate;
      if (many)
        target /= std::filesystem::path(opt.files[k]).stem().string() + ".cert.json";
      writeFile(target, serializeCertificate(item.result->chain));
    }
  }
  return status;
}

int runVerify(const std::string& fwFile, const std::string& certFile, std::ostream& out) {
  const BipartiteFramework fw = parseFramework(readFile(fwFile));
  const CertificateChain chain = parseCertificate(readFile(certFile));
  if (verifyChain(fw, chain, chain.tolerance)) {
    out << "valid " << toString(chain.verdict) << "\n";
    return 0;
  }
  out << "invalid\n";
  return kRejected;
}

int runSeparate(const std::string& file, std::ostream& out) {
  const BipartiteFramework fw = parseFramework(readFile(file));
  Json doc;
  if (auto radon = maximalSupportRadon(fw)) {
    doc = {{"kind", "radon"},
           {"lambda", rationals(radon->lambda)},
           {"mu", rationals(radon->mu)},
           {"support", {{"P", radon->supportP}, {"Q", radon->supportQ}}}};
  } else if (fw.m() == 0) {
    doc = {{"kind", "one-sided"}};
  } else {
    const SeparationCertificate sep = maxMarginQuadric(fw);
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < sep.A.order(); ++i) {
      Json row = Json::array();
      for (Eigen::Index j = 0; j < sep.A.order(); ++j) row.push_back(toString(sep.A(i, j)));
      rows.push_back(std::move(row));
    }
    doc = {{"kind", "quadric"}, {"delta", toString(sep.delta)}, {"A", std::move(rows)}};
  }
  out << doc.dump(2) << "\n";
  return 0;
}

int runStress(const std::string& file, std::ostream& out) {
  const BipartiteFramework fw = parseFramework(readFile(file));
  auto radon = maximalSupportRadon(fw);
  if (!radon) {
    out << Json{{"support", nullptr}}.dump(2) << "\n";
    return 0;
  }
  const BipartiteFramework core = fw.subframework(radon->supportP, radon->supportQ);
  RadonCertificate restricted;
  restricted.lambda.resize(static_cast<Eigen::Index>(radon->supportP.size()));
  restricted.mu.resize(static_cast<Eigen::Index>(radon->supportQ.size()));
  for (std::size_t k = 0; k < radon->supportP.size(); ++k)
    restricted.lambda(k) = radon->lambda(radon->supportP[k]);
  for (std::size_t k = 0; k < radon->supportQ.size(); ++k)
    restricted.mu(k) = radon->mu(radon->supportQ[k]);
  restricted.supportP = positiveSupport(restricted.lambda);
  restricted.supportQ = positiveSupport(restricted.mu);

  const StressCertificate s = buildSuperStableStress(core, restricted);
  const Eigen::MatrixXd omega = s.omega.toDense();
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < omega.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < omega.cols(); ++j) row.push_back(omega(i, j));
    rows.push_back(std::move(row));
  }
  out << Json{{"support", {{"P", radon->supportP}, {"Q", radon->supportQ}}},
              {"rank", s.declaredRank},
              {"min_eigenvalue", s.minEigenvalue},
              {"equilibrium_residual", s.equilibriumResidual},
              {"omega", std::move(rows)}}
             .dump(2)
      << "\n";
  return 0;
}

}  // namespace

int cliMain(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Universal rigidity of complete bipartite frameworks"};
  app.require_subcommand(1);

  CheckOptions check;
  auto* checkCmd = app.add_subcommand("check", "classify frameworks and write certificate chains");
  checkCmd->add_option("files", check.files, "framework files")->required();
  checkCmd->add_option("--certificate", check.certificate,
                       "certificate output (a directory when several files are given)");
  checkCmd->add_option("--tol", check.tol, "stress tolerance")->capture_default_str();
  checkCmd->add_flag("--trace", check.trace, "list iterations on stderr");
  checkCmd->add_flag("--dump-coords", check.dumpCoords, "print vertex and edge tables");

  std::string fwFile, certFile;
  auto* verifyCmd = app.add_subcommand("verify", "re-validate a certificate chain");
  verifyCmd->add_option("framework", fwFile)->required();
  verifyCmd->add_option("certificate", certFile)->required();

  std::string file;
  auto* separateCmd = app.add_subcommand("separate", "Radon coefficients or a separating quadric");
  separateCmd->add_option("file", file)->required();
  auto* stressCmd = app.add_subcommand("stress", "maximum-rank PSD stress on the Radon support");
  stressCmd->add_option("file", file)->required();

  std::string dir;
  auto* fixturesCmd = app.add_subcommand("fixtures", "write the example corpus");
  fixturesCmd->add_option("dir", dir)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kInputError;
  }

  try {
    if (*checkCmd) return runCheck(check, out, err);
    if (*verifyCmd) return runVerify(fwFile, certFile, out);
    if (*separateCmd) return runSeparate(file, out);
    if (*stressCmd) return runStress(file, out);
    if (*fixturesCmd) {
      for (const auto& path : emitFixtures(dir)) out << path.string() << "\n";
      return 0;
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exitCode(e);
  } catch (const std::filesystem::filesystem_error& e) {
    err << "IoError: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kNumericalError;
  }
  return kInputError;
}

}  // namespace urbip
