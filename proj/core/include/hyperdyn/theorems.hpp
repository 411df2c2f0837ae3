#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperdyn/hyperspace.hpp"
#include "hyperdyn/properties.hpp"
#include "hyperdyn/report.hpp"
#include "hyperdyn/sft.hpp"

namespace hyperdyn {

enum class TheoremVerdict { Confirmed, ConfirmedVacuously, Refuted };

std::string theorem_verdict_name(TheoremVerdict v);

/// One verification instance. A refuted case signals an implementation bug
/// or a genuine counterexample to a proved statement; suites treat it as a
/// hard failure either way.
struct TheoremCase {
  std::string id;
  std::string system;
  TheoremVerdict verdict = TheoremVerdict::Confirmed;
  bool substantive = false;  // the interesting branch was exercised
  Json detail = Json::object();
  Json to_json() const;
};

/// Supported ids: P32, P33, P35, T34, T36, C37a, C37b, T38, T39, T310.
/// T36, T38, T310 and P35 require an abelian group.
TheoremCase verify_theorem(const std::string& id, const ActionSystem& sys, const Bounds& bounds);

/// Bounded verification over a subshift; supports T36, T38 and P35, whose
/// proofs only ever need finite witnesses inside Vietoris basics built
/// from cylinders.
TheoremCase verify_theorem_sft(const std::string& id, const Sft& m, const Bounds& bounds);

/// The proof-opens construction G = <U_i inter gamma^{-1}(V_i)> together
/// with a finite member certifying both membership claims.
struct VietorisProofWitness {
  VietorisBasic proof_basic;
  SetMask member = 0;   // one point from each intersection
  bool member_in_u = false;
  bool image_in_v = false;
};

VietorisProofWitness construct_vietoris_proof_witness(const ActionSystem& sys,
                                                      const GroupElement& gamma,
                                                      const std::vector<SetMask>& us,
                                                      const std::vector<SetMask>& vs);

struct SftVietorisProofWitness {
  std::vector<Pattern> proof_basic;
  std::vector<PeriodicSeqPoint> member;
  bool member_in_u = false;
  bool image_in_v = false;
};

SftVietorisProofWitness sft_construct_vietoris_proof_witness(const Sft& m, long long gamma,
                                                             const std::vector<Pattern>& us,
                                                             const std::vector<Pattern>& vs);

/// A = {x_1, ..., x_n} with periodic x_i in U_i (canonical order), plus the
/// stabilizer bookkeeping of the dense-periodic-points proof.
struct PeriodicWitness {
  SetMask member = 0;
  bool member_in_basic = false;
  int orbit_size = 0;                       // orbit of A under the induced image
  long long stabilizer_index_bound = 0;     // product of point stabilizer indices
  std::vector<int> point_orbit_sizes;
  int image_group_order = 0;
};

PeriodicWitness construct_periodic_witness(const ActionSystem& sys, const VietorisBasic& basic);

struct SuiteFamily {
  std::string label;
  std::vector<ActionSystem> finite;  // either this ...
  std::optional<Sft> sft;            // ... or this
};

struct SuiteConfig {
  std::vector<SuiteFamily> families;
  std::vector<std::string> theorem_ids;
  Bounds bounds;
  std::vector<std::string> require_substantive;  // ids needing >= 1 substantive case
};

struct SuiteReport {
  std::vector<TheoremCase> cases;
  int confirmed = 0;
  int vacuous = 0;
  int refuted = 0;
  bool passed = false;
  std::vector<std::string> problems;
  Json to_json() const;
};

SuiteReport run_suite(const SuiteConfig& config);

}  // namespace hyperdyn
