#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperdyn/metric.hpp"

namespace hyperdyn {

/// A bijection of {0, ..., n-1}, stored as its image list.
using Perm = std::vector<int>;

bool is_permutation(const Perm& p);
Perm identity_perm(int n);
Perm inverse_perm(const Perm& p);
/// (a * b)(x) = a[b[x]]: b applied first.
Perm compose_perm(const Perm& a, const Perm& b);

enum class GroupKind {
  FreeAbelian,          // Z^rank, generators are the standard basis images
  FinitePresentedByImage  // the group is identified with its image in Sym(X)
};

struct GroupSpec {
  GroupKind kind = GroupKind::FreeAbelian;
  int rank = 0;  // FreeAbelian only; must equal generators.size()
  std::vector<Perm> generators;
  bool abelian = true;

  /// Whether the abstract group is infinite (Z^d with d >= 1). For
  /// FinitePresentedByImage the group equals its finite image.
  bool is_infinite() const { return kind == GroupKind::FreeAbelian && rank >= 1; }
};

/// Group element: exponent vector for free abelian groups (the normal
/// form), reduced word of (generator, exponent) factors otherwise.
struct GroupElement {
  std::vector<int> exps;
  std::vector<std::pair<int, int>> word;
  bool free = true;

  static GroupElement identity(const GroupSpec& spec);
  static GroupElement generator(const GroupSpec& spec, int i, int exp = 1);

  bool is_identity() const;
  std::string str() const;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

GroupElement g_mul(const GroupSpec& spec, const GroupElement& a, const GroupElement& b);
GroupElement g_inv(const GroupSpec& spec, const GroupElement& a);

struct ActionSystem {
  FiniteMetricSpace space;
  GroupSpec group;
  std::string name;
};

/// Checks that generators are bijections of the space's points and commute
/// when the spec requires it. Returns human-readable problems; empty = ok.
std::vector<std::string> validate_action_system(const ActionSystem& sys);

/// Applies the action homomorphism: the permutation of g applied to x.
int evaluate(const ActionSystem& sys, const GroupElement& g, int x);

/// Elementwise image of a non-empty set; cardinality preserved.
SetMask act_on_set(const ActionSystem& sys, const GroupElement& g, SetMask a);

Perm element_perm(const ActionSystem& sys, const GroupElement& g);

/// The finite image of the group in Sym(X): closure of the generator
/// images under composition and inverse, with a shortest preimage word
/// for each element (breadth-first, generators in index order, then
/// their inverses).
class ImageGroup {
 public:
  explicit ImageGroup(const ActionSystem& sys);

  int size() const { return static_cast<int>(elements_.size()); }
  const Perm& perm(int i) const { return elements_[i]; }
  const GroupElement& word(int i) const { return words_[i]; }
  int identity() const { return 0; }
  int index_of(const Perm& p) const;
  int mul(int a, int b) const;
  int inv(int a) const;
  int apply(int g, int x) const { return elements_[g][x]; }
  SetMask apply_set(int g, SetMask s) const;

  /// Image of an abstract group element. For free abelian groups this is
  /// the map whose fibers are all infinite whenever the group is infinite
  /// (the kernel has finite index in Z^d only when d = 0).
  int element_image(const ActionSystem& sys, const GroupElement& g) const;

 private:
  std::vector<Perm> elements_;
  std::vector<GroupElement> words_;
  std::map<Perm, int> index_;
};

/// Smallest generator-and-inverse-closed set containing x.
SetMask orbit(const ActionSystem& sys, int x);

struct PeriodicPointReport {
  bool periodic = true;  // always, on finite spaces
  int orbit_size = 0;
  long long stabilizer_index = 0;  // equals orbit_size (orbit-stabilizer)
};

PeriodicPointReport is_periodic_point(const ActionSystem& sys, int x);

/// All elements of word length (L1 norm) <= radius, ordered by length then
/// lexicographically with sign rank 0 < + < -. For finite-image groups the
/// ball is the set of image elements reachable within the radius.
std::vector<GroupElement> enumerate_ball(const GroupSpec& spec, int radius);

}  // namespace hyperdyn
