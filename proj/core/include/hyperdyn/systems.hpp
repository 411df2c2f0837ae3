#pragma once

#include <string>
#include <vector>

#include "hyperdyn/group.hpp"
#include "hyperdyn/sft.hpp"

namespace hyperdyn {

/// Named finite test systems. All carry the discrete metric except the
/// periodic subshift subsystems, which use the shift metric.
ActionSystem builtin_cyclic_rotation(int n);   // Z via an n-cycle
ActionSystem builtin_identity(int n);          // Z acting trivially
ActionSystem builtin_commuting_pair(int n);    // Z^2 via rotations by 1 and 2
ActionSystem builtin_klein_on_4();             // finite group, (01)(23) and (02)(13)
ActionSystem builtin_product(const ActionSystem& a, const ActionSystem& b);

Sft builtin_full_shift(int k);
Sft builtin_golden_mean();  // forbid "11"
Sft builtin_swap_sft();     // matrix [[0,1],[1,0]], period 2

/// Lookup by name with integer parameters, e.g. ("cyclic_rotation", {3}).
/// Product and periodic-subsystem families expand to a list.
std::vector<ActionSystem> builtin_family(const std::string& name, const std::vector<int>& params);

/// The canonical deterministic list of finite systems (all with at most
/// max_points points) that the oracle-equivalence and theorem suites run
/// over.
std::vector<ActionSystem> standard_finite_suite(int max_points = 6);

}  // namespace hyperdyn
