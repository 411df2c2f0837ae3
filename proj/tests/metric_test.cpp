#include <vector>

#include "doctest.h"
#include "hyperdyn/metric.hpp"

using namespace hyperdyn;

TEST_CASE("set mask helpers") {
  CHECK(full_mask(3) == 0b111);
  CHECK(set_size(0b101) == 2);
  CHECK(set_contains(0b101, 2));
  CHECK_FALSE(set_contains(0b101, 1));
  CHECK(lowest_point(0b100) == 2);
}

TEST_CASE("builtin spaces are metrics") {
  CHECK(validate_metric(FiniteMetricSpace::discrete(5)).empty());
  CHECK(validate_metric(FiniteMetricSpace::line(5)).empty());
  CHECK(FiniteMetricSpace::line(4).dist(0, 3) == Rational(3));
  CHECK(FiniteMetricSpace::discrete(4).dist(1, 2) == Rational(1));
  CHECK(FiniteMetricSpace::discrete(4).dist(2, 2) == Rational(0));
}

TEST_CASE("validate_metric reports each axiom") {
  // Identity: nonzero diagonal.
  std::vector<Rational> t1{Rational(1), Rational(1), Rational(1), Rational(0)};
  auto v1 = validate_metric(2, t1);
  REQUIRE_FALSE(v1.empty());
  CHECK(v1[0].axiom == MetricViolation::Axiom::Identity);

  // Identity: zero distance between distinct points.
  std::vector<Rational> t2{Rational(0), Rational(0), Rational(0), Rational(0)};
  auto v2 = validate_metric(2, t2);
  REQUIRE_FALSE(v2.empty());
  CHECK(v2[0].axiom == MetricViolation::Axiom::Identity);

  // Symmetry.
  std::vector<Rational> t3{Rational(0), Rational(1), Rational(2), Rational(0)};
  auto v3 = validate_metric(2, t3);
  REQUIRE_FALSE(v3.empty());
  CHECK(v3[0].axiom == MetricViolation::Axiom::Symmetry);

  // Triangle: d(0,2) = 5 > 1 + 1.
  std::vector<Rational> t4{Rational(0), Rational(1), Rational(5),
                           Rational(1), Rational(0), Rational(1),
                           Rational(5), Rational(1), Rational(0)};
  auto v4 = validate_metric(3, t4);
  REQUIRE_FALSE(v4.empty());
  CHECK(v4[0].axiom == MetricViolation::Axiom::Triangle);

  // Malformed table is an input error, not an axiom violation.
  CHECK_THROWS_AS(validate_metric(3, t1), std::invalid_argument);
}

TEST_CASE("point-set distance") {
  auto line = FiniteMetricSpace::line(5);
  CHECK(point_set_distance(line, 0, 0b11000) == Rational(3));
  CHECK(point_set_distance(line, 3, 0b11000) == Rational(0));
}

TEST_CASE("hausdorff distance hand-checked values") {
  auto line = FiniteMetricSpace::line(4);
  CHECK(hausdorff_distance(line, 0b0001, 0b1000) == Rational(3));
  CHECK(hausdorff_distance(line, 0b0011, 0b1100) == Rational(2));
  // {0} vs {0,1,2,3}: sup over the big set of distance to {0} is 3.
  CHECK(hausdorff_distance(line, 0b0001, 0b1111) == Rational(3));
  // Subset at distance zero only when equal.
  CHECK(hausdorff_distance(line, 0b0110, 0b0110) == Rational(0));
}

TEST_CASE("hausdorff metric axioms exhaustively on a small space") {
  auto space = FiniteMetricSpace::line(4);
  const SetMask count = full_mask(4);
  std::vector<Rational> h((count + 1) * (count + 1), Rational(0));
  auto at = [&](SetMask a, SetMask b) -> Rational& { return h[a * (count + 1) + b]; };
  for (SetMask a = 1; a <= count; ++a)
    for (SetMask b = 1; b <= count; ++b) at(a, b) = hausdorff_distance(space, a, b);

  for (SetMask a = 1; a <= count; ++a)
    for (SetMask b = 1; b <= count; ++b) {
      CHECK((at(a, b) == Rational(0)) == (a == b));
      CHECK(at(a, b) == at(b, a));
      for (SetMask c = 1; c <= count; ++c) CHECK(at(a, c) <= at(a, b) + at(b, c));
    }
}
