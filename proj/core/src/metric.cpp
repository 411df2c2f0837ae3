#include "hyperdyn/metric.hpp"

#include <stdexcept>

namespace hyperdyn {

std::string set_str(SetMask s) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < 64; ++i) {
    if (!set_contains(s, i)) continue;
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  out += "}";
  return out;
}

FiniteMetricSpace::FiniteMetricSpace(int points, std::vector<Rational> table)
    : points_(points), table_(std::move(table)) {
  if (points_ <= 0) throw std::invalid_argument("FiniteMetricSpace: need at least one point");
  if (points_ > 63) throw std::invalid_argument("FiniteMetricSpace: at most 63 points supported");
  if (table_.size() != static_cast<size_t>(points_) * points_)
    throw std::invalid_argument("FiniteMetricSpace: table is not points x points");
}

FiniteMetricSpace FiniteMetricSpace::discrete(int points) {
  std::vector<Rational> t(static_cast<size_t>(points) * points, Rational(1));
  for (int i = 0; i < points; ++i) t[i * points + i] = Rational(0);
  return FiniteMetricSpace(points, std::move(t));
}

FiniteMetricSpace FiniteMetricSpace::line(int points) {
  std::vector<Rational> t;
  t.reserve(static_cast<size_t>(points) * points);
  for (int i = 0; i < points; ++i)
    for (int j = 0; j < points; ++j) t.emplace_back(i > j ? i - j : j - i);
  return FiniteMetricSpace(points, std::move(t));
}

std::string MetricViolation::str() const {
  switch (axiom) {
    case Axiom::Identity:
      return "identity axiom at (" + std::to_string(i) + "," + std::to_string(j) + ")";
    case Axiom::Symmetry:
      return "symmetry axiom at (" + std::to_string(i) + "," + std::to_string(j) + ")";
    case Axiom::Triangle:
      return "triangle axiom at (" + std::to_string(i) + "," + std::to_string(j) + "," +
             std::to_string(k) + ")";
  }
  return "";
}

std::vector<MetricViolation> validate_metric(int points, const std::vector<Rational>& table) {
  if (points <= 0 || table.size() != static_cast<size_t>(points) * points)
    throw std::invalid_argument("validate_metric: malformed table dimensions");
  auto d = [&](int i, int j) -> const Rational& { return table[i * points + j]; };
  std::vector<MetricViolation> out;
  for (int i = 0; i < points; ++i)
    for (int j = 0; j < points; ++j) {
      bool bad = (i == j) ? !d(i, j).is_zero() : (d(i, j).is_zero() || d(i, j).is_negative());
      if (bad) out.push_back({MetricViolation::Axiom::Identity, i, j, -1});
    }
  for (int i = 0; i < points; ++i)
    for (int j = i + 1; j < points; ++j)
      if (d(i, j) != d(j, i)) out.push_back({MetricViolation::Axiom::Symmetry, i, j, -1});
  for (int i = 0; i < points; ++i)
    for (int j = 0; j < points; ++j)
      for (int k = 0; k < points; ++k)
        if (d(i, k) > d(i, j) + d(j, k))
          out.push_back({MetricViolation::Axiom::Triangle, i, j, k});
  return out;
}

std::vector<MetricViolation> validate_metric(const FiniteMetricSpace& space) {
  std::vector<Rational> t;
  t.reserve(static_cast<size_t>(space.points()) * space.points());
  for (int i = 0; i < space.points(); ++i)
    for (int j = 0; j < space.points(); ++j) t.push_back(space.dist(i, j));
  return validate_metric(space.points(), t);
}

Rational point_set_distance(const FiniteMetricSpace& space, int x, SetMask s) {
  if (s == 0) throw std::invalid_argument("point_set_distance: empty set");
  if (x < 0 || x >= space.points())
    throw std::invalid_argument("point_set_distance: point out of range");
  bool first = true;
  Rational best;
  for (int i = 0; i < space.points(); ++i) {
    if (!set_contains(s, i)) continue;
    const Rational& d = space.dist(x, i);
    if (first || d < best) best = d;
    first = false;
  }
  return best;
}

Rational hausdorff_distance(const FiniteMetricSpace& space, SetMask a, SetMask b) {
  if (a == 0 || b == 0) throw std::invalid_argument("hausdorff_distance: empty set");
  Rational h(0);
  for (int i = 0; i < space.points(); ++i) {
    if (set_contains(a, i)) h = Rational::max(h, point_set_distance(space, i, b));
    if (set_contains(b, i)) h = Rational::max(h, point_set_distance(space, i, a));
  }
  return h;
}

}  // namespace hyperdyn
