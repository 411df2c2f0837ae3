#pragma once

#include <string>

#include "json.hpp"

namespace hyperdyn {

using Json = nlohmann::ordered_json;

enum class Verdict { Holds, Fails, HoldsUpToBounds, VacuouslyHolds };

std::string verdict_name(Verdict v);
Verdict verdict_from_name(const std::string& s);

/// True for holds, holds-up-to-bounds and vacuously-holds.
inline bool verdict_positive(Verdict v) { return v != Verdict::Fails; }

struct Bounds {
  int word_radius = 12;
  int cylinder_length = 3;
  int hyperspace_cap = 12;
  Json to_json() const;
};

struct PropertyReport {
  std::string property;
  Verdict verdict = Verdict::Holds;
  Json detail = Json::object();  // witnesses, counterexample, bounds, delta, ...
  Json to_json() const;
};

}  // namespace hyperdyn
