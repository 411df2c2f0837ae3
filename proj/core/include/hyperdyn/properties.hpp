#pragma once

#include <optional>
#include <vector>

#include "hyperdyn/group.hpp"
#include "hyperdyn/report.hpp"
#include "hyperdyn/sft.hpp"

namespace hyperdyn {

/// N(U, V) = { gamma : gamma(U) meets V } for a finite-image system,
/// described exactly as a union of fibers over image elements, plus a
/// truncated enumeration of witnessing words for display.
struct NSet {
  bool exact = true;
  std::vector<int> image_elements;       // ascending image indices
  std::vector<GroupElement> sample;      // ball members mapping into the set
  std::string fiber_note;
};

NSet n_set(const ActionSystem& sys, const ImageGroup& image, SetMask u, SetMask v, int radius);

PropertyReport is_transitive(const ActionSystem& sys);
PropertyReport is_weakly_mixing(const ActionSystem& sys);
PropertyReport is_mixing(const ActionSystem& sys);
PropertyReport has_dense_periodic_points(const ActionSystem& sys);
PropertyReport is_sdic(const ActionSystem& sys);
/// Two-condition form: transitive + dense periodic points.
/// The SDIC report is attached informationally and never gates the verdict.
PropertyReport is_devaney_chaotic(const ActionSystem& sys);

/// Diagnostic only: transitivity of the product group acting coordinatewise
/// with independent components. This is equivalent to plain transitivity
/// and strictly weaker than the single-element weak mixing condition;
/// exposed so the gap can be demonstrated on concrete systems.
PropertyReport weak_mixing_product_group_diagnostic(const ActionSystem& sys);

/// One step of the inductive simultaneous-witness construction:
/// E' = E and gamma^{-1}(U_k), F' = F and gamma^{-1}(V_k).
struct WitnessChainStep {
  SetMask e = 0, f = 0;
  GroupElement pivot;
};

struct WitnessChain {
  bool success = false;
  std::vector<WitnessChainStep> steps;
  GroupElement final_element;
  int blocking_index = -1;   // pair index with no connector, on failure
  bool containment_verified = false;  // N(E,F) inside the intersection, on the image
};

/// Replays the inductive proof that weak mixing yields one element
/// connecting n pairs simultaneously. Requires an abelian group.
WitnessChain simultaneous_weak_mixing_witness(const ActionSystem& sys,
                                              const std::vector<SetMask>& us,
                                              const std::vector<SetMask>& vs, int radius);

// ---- Bounded-certificate mode over subshifts of finite type ----

/// Whether shift^n(U) meets V, both given as patterns.
bool sft_connects(const Sft& m, const Pattern& u, long long n, const Pattern& v);

/// Least connector in the canonical exponent order 0, 1, -1, 2, -2, ...
std::optional<long long> sft_find_connector(const Sft& m, const Pattern& u, const Pattern& v,
                                            int radius);

PropertyReport sft_is_transitive(const Sft& m, const Bounds& bounds);
PropertyReport sft_is_weakly_mixing(const Sft& m, const Bounds& bounds);
PropertyReport sft_is_mixing(const Sft& m, const Bounds& bounds);
PropertyReport sft_has_dense_periodic_points(const Sft& m, const Bounds& bounds);
PropertyReport sft_is_sdic(const Sft& m, const std::vector<Rational>& delta_grid,
                           const Bounds& bounds);
PropertyReport sft_is_devaney_chaotic(const Sft& m, const Bounds& bounds);

struct SftWitnessChainStep {
  Pattern e, f;
  long long pivot = 0;
};

struct SftWitnessChain {
  bool success = false;
  std::vector<SftWitnessChainStep> steps;
  long long final_exponent = 0;
  int blocking_index = -1;
  bool containment_verified = false;
};

SftWitnessChain sft_simultaneous_weak_mixing_witness(const Sft& m,
                                                     const std::vector<Pattern>& us,
                                                     const std::vector<Pattern>& vs, int radius);

}  // namespace hyperdyn
