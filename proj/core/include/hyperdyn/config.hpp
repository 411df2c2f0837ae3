#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperdyn/systems.hpp"
#include "hyperdyn/theorems.hpp"

namespace hyperdyn {

struct ConfigError {
  int line = 0;  // 0 = no specific line
  std::string key;
  std::string message;
  std::string str() const;
};

/// Result of parsing a system config: a fully validated finite system or
/// an SFT handle, or a list of located errors.
struct ParsedSystem {
  std::optional<ActionSystem> finite;
  std::optional<Sft> sft;
  std::vector<ConfigError> errors;
  bool ok() const { return errors.empty() && (finite || sft); }
};

/// Line-oriented key-value format; see the repository README for the
/// schema. Validation failures (metric axioms, non-bijective generators,
/// commutation) are distinct error kinds with line locations.
ParsedSystem parse_config(const std::string& text);

std::string serialize_config(const ActionSystem& sys);
std::string serialize_config(const Sft& m);

/// Resolves "builtin:name(params)" descriptors or reads a config file.
ParsedSystem parse_system_source(const std::string& source);

/// Parses a suite file listing families, theorem ids, and bounds.
struct ParsedSuite {
  SuiteConfig config;
  std::vector<ConfigError> errors;
  bool ok() const { return errors.empty(); }
};

ParsedSuite parse_suite(const std::string& text, const Bounds& defaults);

}  // namespace hyperdyn
