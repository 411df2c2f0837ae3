#include "hyperdyn/report.hpp"

#include <stdexcept>

namespace hyperdyn {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Holds:
      return "holds";
    case Verdict::Fails:
      return "fails";
    case Verdict::HoldsUpToBounds:
      return "holds-up-to-bounds";
    case Verdict::VacuouslyHolds:
      return "vacuously-holds";
  }
  return "";
}

Verdict verdict_from_name(const std::string& s) {
  if (s == "holds") return Verdict::Holds;
  if (s == "fails") return Verdict::Fails;
  if (s == "holds-up-to-bounds") return Verdict::HoldsUpToBounds;
  if (s == "vacuously-holds") return Verdict::VacuouslyHolds;
  throw std::invalid_argument("verdict_from_name: unknown verdict '" + s + "'");
}

Json Bounds::to_json() const {
  return Json{{"word_radius", word_radius},
              {"cylinder_length", cylinder_length},
              {"hyperspace_cap", hyperspace_cap}};
}

Json PropertyReport::to_json() const {
  Json j;
  j["property"] = property;
  j["verdict"] = verdict_name(verdict);
  j["detail"] = detail;
  return j;
}

}  // namespace hyperdyn
