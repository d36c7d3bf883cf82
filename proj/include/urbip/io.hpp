#pragma once

#include "urbip/engine.hpp"
#include "urbip/framework.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace urbip {

constexpr int kFormatVersion = 1;

struct FrameworkDocument {
  BipartiteFramework framework;
  std::optional<std::string> name;
  std::optional<Verdict> expected;
};

/// Framework file: {"format_version", "name"?, "d", "P", "Q", "expected"?},
/// points as arrays of "a" / "a/b" strings (plain JSON integers are also
/// accepted on input). Throws ParseError with a locus, DimensionMismatch.
FrameworkDocument parseFrameworkDocument(std::string_view text);
BipartiteFramework parseFramework(std::string_view text);

/// Canonical form: fixed key order, lowest-terms rationals, two-space indent,
/// trailing newline.
std::string serializeFramework(const FrameworkDocument& doc);
std::string serializeFramework(const BipartiteFramework& fw);

/// Certificate chain with exact values as strings and stress data as
/// round-trip-exact decimal doubles.
std::string serializeCertificate(const CertificateChain& chain);
CertificateChain parseCertificate(std::string_view text);

std::string readFile(const std::filesystem::path& path);
void writeFile(const std::filesystem::path& path, std::string_view contents);

}  // namespace urbip
