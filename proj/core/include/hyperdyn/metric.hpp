#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "hyperdyn/rational.hpp"

namespace hyperdyn {

/// A non-empty subset of points, encoded as a bitmask. Bit i set means
/// point i is a member. Supports spaces with up to 63 points, which covers
/// every exhaustive enumeration this library performs.
using SetMask = std::uint64_t;

inline SetMask full_mask(int n) { return (SetMask{1} << n) - 1; }
inline int set_size(SetMask s) { return std::popcount(s); }
inline bool set_contains(SetMask s, int i) { return (s >> i) & 1; }
inline int lowest_point(SetMask s) { return std::countr_zero(s); }

std::string set_str(SetMask s);

/// Finite metric space: a point count and an exact pairwise distance table.
class FiniteMetricSpace {
 public:
  FiniteMetricSpace(int points, std::vector<Rational> table);

  static FiniteMetricSpace discrete(int points);
  /// d(i, j) = |i - j| on {0, ..., points-1}.
  static FiniteMetricSpace line(int points);

  int points() const { return points_; }
  const Rational& dist(int i, int j) const { return table_[i * points_ + j]; }

  friend bool operator==(const FiniteMetricSpace& a, const FiniteMetricSpace& b) {
    return a.points_ == b.points_ && a.table_ == b.table_;
  }

 private:
  int points_;
  std::vector<Rational> table_;  // row-major, points_ x points_
};

struct MetricViolation {
  enum class Axiom { Identity, Symmetry, Triangle };
  Axiom axiom;
  int i = -1, j = -1, k = -1;
  std::string str() const;
};

/// Checks the three metric axioms. Empty result means the table is a metric.
/// A malformed table (wrong dimensions) is an input error and throws
/// std::invalid_argument before any axiom is examined.
std::vector<MetricViolation> validate_metric(int points, const std::vector<Rational>& table);
std::vector<MetricViolation> validate_metric(const FiniteMetricSpace& space);

/// d(x, S) = min over s in S of d(x, s). S must be non-empty.
Rational point_set_distance(const FiniteMetricSpace& space, int x, SetMask s);

/// Hausdorff distance: max of the two directed sup-inf distances.
/// Both sets must be non-empty.
Rational hausdorff_distance(const FiniteMetricSpace& space, SetMask a, SetMask b);

}  // namespace hyperdyn
