// Independent brute-force oracles for the dynamical properties on finite
// systems. These deliberately share no code with the production checkers:
// every quantifier in the definitions is evaluated literally over all
// non-empty subsets and the full image group, so a disagreement points at
// a bug in exactly one place.
#pragma once

#include <vector>

#include "hyperdyn/group.hpp"
#include "hyperdyn/report.hpp"

namespace oracles {

using hyperdyn::ActionSystem;
using hyperdyn::ImageGroup;
using hyperdyn::SetMask;
using hyperdyn::Verdict;

// Precomputed g(U) for every image element and every non-empty subset.
struct ActionTable {
  int n = 0;
  int image_size = 0;
  std::vector<std::vector<SetMask>> image;  // image[g][mask - 1]

  explicit ActionTable(const ActionSystem& sys) {
    n = sys.space.points();
    ImageGroup ig(sys);
    image_size = ig.size();
    const SetMask count = hyperdyn::full_mask(n);
    image.assign(image_size, std::vector<SetMask>(count));
    for (int g = 0; g < image_size; ++g)
      for (SetMask u = 1; u <= count; ++u) image[g][u - 1] = ig.apply_set(g, u);
  }

  bool connects(int g, SetMask u, SetMask v) const { return (image[g][u - 1] & v) != 0; }
};

inline Verdict oracle_transitive(const ActionSystem& sys) {
  ActionTable t(sys);
  const SetMask count = hyperdyn::full_mask(t.n);
  for (SetMask u = 1; u <= count; ++u)
    for (SetMask v = 1; v <= count; ++v) {
      bool found = false;
      for (int g = 0; g < t.image_size && !found; ++g) found = t.connects(g, u, v);
      if (!found) return Verdict::Fails;
    }
  return Verdict::Holds;
}

inline Verdict oracle_weakly_mixing(const ActionSystem& sys) {
  ActionTable t(sys);
  const SetMask count = hyperdyn::full_mask(t.n);
  for (SetMask u1 = 1; u1 <= count; ++u1)
    for (SetMask v1 = 1; v1 <= count; ++v1)
      for (SetMask u2 = 1; u2 <= count; ++u2)
        for (SetMask v2 = 1; v2 <= count; ++v2) {
          bool found = false;
          for (int g = 0; g < t.image_size && !found; ++g)
            found = t.connects(g, u1, v1) && t.connects(g, u2, v2);
          if (!found) return Verdict::Fails;
        }
  return Verdict::Holds;
}

// Mixing asks for a finite excluded subset of the acting group. When the
// group is finite that set may be the whole group, so the condition is
// vacuous. When the group is infinite every fiber of the map onto the
// finite image is infinite, so the complement of N(U, V) is finite exactly
// when every image element connects U to V.
inline Verdict oracle_mixing(const ActionSystem& sys) {
  if (!sys.group.is_infinite()) return Verdict::VacuouslyHolds;
  ActionTable t(sys);
  const SetMask count = hyperdyn::full_mask(t.n);
  for (SetMask u = 1; u <= count; ++u)
    for (SetMask v = 1; v <= count; ++v)
      for (int g = 0; g < t.image_size; ++g)
        if (!t.connects(g, u, v)) return Verdict::Fails;
  return Verdict::Holds;
}

inline Verdict oracle_dense_periodic(const ActionSystem& sys) {
  // Every open set contains a singleton, so it is enough that each point
  // has finite orbit; verify that literally via orbit closure.
  const int n = sys.space.points();
  for (int x = 0; x < n; ++x) {
    SetMask orb = hyperdyn::orbit(sys, x);
    if (orb == 0 || hyperdyn::set_size(orb) > n) return Verdict::Fails;
  }
  return Verdict::Holds;
}

// SDIC: some delta > 0 such that every neighborhood of every point holds a
// point pushed at least delta away by some element. Candidate deltas only
// need to range over realized positive distances; the neighborhood radius
// quantifier only needs values below the minimum positive distance, where
// the neighborhood of x collapses to {x} itself.
inline Verdict oracle_sdic(const ActionSystem& sys) {
  ActionTable t(sys);
  const int n = t.n;
  std::vector<hyperdyn::Rational> deltas;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (sys.space.dist(i, j) > hyperdyn::Rational(0)) deltas.push_back(sys.space.dist(i, j));
  if (deltas.empty()) return Verdict::Fails;  // single point: no positive delta is realized

  ImageGroup ig(sys);
  for (const auto& delta : deltas) {
    bool delta_works = true;
    for (int x = 0; x < n && delta_works; ++x) {
      // Smallest neighborhood of x: only points strictly closer than every
      // positive distance, i.e. x alone.
      hyperdyn::Rational eps = deltas[0];
      for (const auto& d : deltas) eps = hyperdyn::Rational::min(eps, d);
      bool separated = false;
      for (int y = 0; y < n && !separated; ++y) {
        if (!(sys.space.dist(x, y) < eps)) continue;
        for (int g = 0; g < ig.size() && !separated; ++g)
          if (!(sys.space.dist(ig.apply(g, x), ig.apply(g, y)) < delta)) separated = true;
      }
      if (!separated) delta_works = false;
    }
    if (delta_works) return Verdict::Holds;
  }
  return Verdict::Fails;
}

inline Verdict oracle_devaney(const ActionSystem& sys) {
  bool t = oracle_transitive(sys) != Verdict::Fails;
  bool p = oracle_dense_periodic(sys) != Verdict::Fails;
  return (t && p) ? Verdict::Holds : Verdict::Fails;
}

}  // namespace oracles
