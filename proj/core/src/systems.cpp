#include "hyperdyn/systems.hpp"

#include <stdexcept>

namespace hyperdyn {

namespace {

Perm rotation_perm(int n, int step) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = (i + step) % n;
  return p;
}

}  // namespace

ActionSystem builtin_cyclic_rotation(int n) {
  if (n < 1) throw std::invalid_argument("cyclic_rotation: n >= 1 required");
  GroupSpec g{GroupKind::FreeAbelian, 1, {rotation_perm(n, 1)}, true};
  return {FiniteMetricSpace::discrete(n), std::move(g), "cyclic_rotation(" + std::to_string(n) + ")"};
}

ActionSystem builtin_identity(int n) {
  if (n < 1) throw std::invalid_argument("identity: n >= 1 required");
  GroupSpec g{GroupKind::FreeAbelian, 1, {identity_perm(n)}, true};
  return {FiniteMetricSpace::discrete(n), std::move(g), "identity(" + std::to_string(n) + ")"};
}

ActionSystem builtin_commuting_pair(int n) {
  if (n < 1) throw std::invalid_argument("commuting_pair: n >= 1 required");
  GroupSpec g{GroupKind::FreeAbelian, 2, {rotation_perm(n, 1), rotation_perm(n, 2)}, true};
  return {FiniteMetricSpace::discrete(n), std::move(g), "commuting_pair(" + std::to_string(n) + ")"};
}

ActionSystem builtin_klein_on_4() {
  GroupSpec g{GroupKind::FinitePresentedByImage, 0, {{1, 0, 3, 2}, {2, 3, 0, 1}}, true};
  return {FiniteMetricSpace::discrete(4), std::move(g), "klein_on_4"};
}

ActionSystem builtin_product(const ActionSystem& a, const ActionSystem& b) {
  const int na = a.space.points(), nb = b.space.points();
  const int n = na * nb;
  // Max metric on pairs; index (i, j) -> i * nb + j.
  std::vector<Rational> table(static_cast<size_t>(n) * n);
  for (int i1 = 0; i1 < na; ++i1)
    for (int j1 = 0; j1 < nb; ++j1)
      for (int i2 = 0; i2 < na; ++i2)
        for (int j2 = 0; j2 < nb; ++j2)
          table[static_cast<size_t>(i1 * nb + j1) * n + (i2 * nb + j2)] =
              Rational::max(a.space.dist(i1, i2), b.space.dist(j1, j2));

  GroupSpec g;
  bool both_free = a.group.kind == GroupKind::FreeAbelian && b.group.kind == GroupKind::FreeAbelian;
  g.kind = both_free ? GroupKind::FreeAbelian : GroupKind::FinitePresentedByImage;
  g.abelian = a.group.abelian && b.group.abelian;
  for (const Perm& pa : a.group.generators) {
    Perm p(n);
    for (int i = 0; i < na; ++i)
      for (int j = 0; j < nb; ++j) p[i * nb + j] = pa[i] * nb + j;
    g.generators.push_back(std::move(p));
  }
  for (const Perm& pb : b.group.generators) {
    Perm p(n);
    for (int i = 0; i < na; ++i)
      for (int j = 0; j < nb; ++j) p[i * nb + j] = i * nb + pb[j];
    g.generators.push_back(std::move(p));
  }
  g.rank = both_free ? static_cast<int>(g.generators.size()) : 0;
  return {FiniteMetricSpace(n, std::move(table)), std::move(g),
          "product(" + a.name + "," + b.name + ")"};
}

Sft builtin_full_shift(int k) {
  std::vector<std::vector<int>> rows(k, std::vector<int>(k, 1));
  Sft s = sft_from_matrix(k, rows);
  s.name = "full_shift(" + std::to_string(k) + ")";
  return s;
}

Sft builtin_golden_mean() {
  Sft s = sft_from_forbidden_words(2, {"11"});
  s.name = "golden_mean";
  return s;
}

Sft builtin_swap_sft() {
  Sft s = sft_from_matrix(2, {{0, 1}, {1, 0}});
  s.name = "swap_sft";
  return s;
}

std::vector<ActionSystem> builtin_family(const std::string& name, const std::vector<int>& params) {
  auto want = [&](size_t n) {
    if (params.size() != n)
      throw std::invalid_argument("builtin_family: " + name + " expects " + std::to_string(n) +
                                  " parameter(s)");
  };
  if (name == "cyclic_rotation") {
    want(1);
    return {builtin_cyclic_rotation(params[0])};
  }
  if (name == "identity") {
    want(1);
    return {builtin_identity(params[0])};
  }
  if (name == "commuting_pair") {
    want(1);
    return {builtin_commuting_pair(params[0])};
  }
  if (name == "klein_on_4") {
    want(0);
    return {builtin_klein_on_4()};
  }
  if (name == "product_rotations") {
    want(2);
    return {builtin_product(builtin_cyclic_rotation(params[0]), builtin_cyclic_rotation(params[1]))};
  }
  if (name == "periodic_subsystem_full_shift") {
    want(2);
    return {periodic_subsystem(builtin_full_shift(params[0]), params[1])};
  }
  if (name == "standard_finite") {
    return standard_finite_suite(params.empty() ? 6 : params[0]);
  }
  throw std::invalid_argument("builtin_family: unknown family '" + name + "'");
}

std::vector<ActionSystem> standard_finite_suite(int max_points) {
  std::vector<ActionSystem> all;
  all.push_back(builtin_identity(1));
  all.push_back(builtin_identity(2));
  all.push_back(builtin_cyclic_rotation(2));
  all.push_back(builtin_cyclic_rotation(3));
  all.push_back(builtin_cyclic_rotation(4));
  all.push_back(builtin_klein_on_4());
  all.push_back(builtin_commuting_pair(4));
  all.push_back(builtin_product(builtin_cyclic_rotation(2), builtin_cyclic_rotation(3)));
  all.push_back(periodic_subsystem(builtin_full_shift(2), 1));
  all.push_back(periodic_subsystem(builtin_full_shift(2), 2));
  all.push_back(periodic_subsystem(builtin_golden_mean(), 2));
  std::vector<ActionSystem> out;
  for (auto& s : all)
    if (s.space.points() <= max_points) out.push_back(std::move(s));
  return out;
}

}  // namespace hyperdyn
