#pragma once

#include <vector>

#include "hyperdyn/group.hpp"

namespace hyperdyn {

/// A Vietoris basic open: the compacta contained in the union of the
/// listed opens and meeting each of them. Every entry must be non-empty.
struct VietorisBasic {
  std::vector<SetMask> opens;
};

/// The system (Sub_X, induced action) built from a base system. The
/// result is itself a valid ActionSystem over 2^n - 1 points: element i
/// of the hyperspace is elements[i], the metric table holds pairwise
/// Hausdorff distances, and the group generators are the induced
/// bijections of the element list.
struct HyperspaceSystem {
  ActionSystem system;
  std::vector<SetMask> elements;  // all non-empty subsets, bit order
};

inline constexpr int kDefaultHyperspaceCap = 12;

/// Enumerates Sub_X, the induced generators, and the Hausdorff table.
/// Throws std::invalid_argument when the base space exceeds the cap.
HyperspaceSystem build_hyperspace_system(const ActionSystem& base,
                                         int cap = kDefaultHyperspaceCap);

/// Index of a subset in the canonical element order (mask - 1).
int hyperspace_index(SetMask a);

bool vietoris_contains(const VietorisBasic& v, SetMask a);

/// Pads the shorter family with copies of the union of its own opens,
/// which leaves membership unchanged for every compact set. (Padding with
/// the full space would not: it widens the allowed union.)
std::pair<VietorisBasic, VietorisBasic> pad_to_common_length(const VietorisBasic& v1,
                                                            const VietorisBasic& v2,
                                                            int points);

/// e(U): all non-empty subsets of U, in bit order. Empty when U is empty.
std::vector<SetMask> extension_members(SetMask u);

/// Predicate form of e(U); must agree with the enumeration.
inline bool extension_contains(SetMask u, SetMask k) { return k != 0 && (k & ~u) == 0; }

}  // namespace hyperdyn
