#pragma once

#include "urbip/engine.hpp"
#include "urbip/framework.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace urbip {

struct Fixture {
  std::string name;
  BipartiteFramework framework;
  Verdict expected;
  // True when the expected verdict comes from this engine's own certificates
  // rather than from a known construction.
  bool derived = false;
  std::string note;
};

/// The built-in example corpus, in a fixed order.
const std::vector<Fixture>& fixtures();

/// Throws InvalidInput for an unknown name.
const Fixture& fixture(const std::string& name);

/// Writes <name>.json for every fixture plus manifest.json into `dir`
/// (created if missing). Returns the framework files written. Throws IoError.
std::vector<std::filesystem::path> emitFixtures(const std::filesystem::path& dir);

}  // namespace urbip
