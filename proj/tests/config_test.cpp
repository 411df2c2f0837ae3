#include "doctest.h"
#include "hyperdyn/config.hpp"
#include "hyperdyn/systems.hpp"

using namespace hyperdyn;

TEST_CASE("finite system config round trip") {
  auto sys = builtin_cyclic_rotation(3);
  auto parsed = parse_config(serialize_config(sys));
  REQUIRE(parsed.ok());
  REQUIRE(parsed.finite.has_value());
  CHECK(parsed.finite->space == sys.space);
  CHECK(parsed.finite->group.kind == sys.group.kind);
  CHECK(parsed.finite->group.rank == sys.group.rank);
  CHECK(parsed.finite->group.generators == sys.group.generators);
}

TEST_CASE("sft config round trip") {
  auto gm = builtin_golden_mean();
  auto parsed = parse_config(serialize_config(gm));
  REQUIRE(parsed.ok());
  REQUIRE(parsed.sft.has_value());
  CHECK(parsed.sft->k == gm.k);
  CHECK(parsed.sft->rows == gm.rows);
}

TEST_CASE("discrete metric shorthand and comments") {
  auto parsed = parse_config(
      "# a 2-cycle\n"
      "space points 2\n"
      "space metric discrete\n"
      "group kind free_abelian 1\n"
      "group gen 1 0\n");
  REQUIRE(parsed.ok());
  CHECK(parsed.finite->space == FiniteMetricSpace::discrete(2));
}

TEST_CASE("parse errors carry line numbers and kinds") {
  // Bad rational on line 3.
  auto p1 = parse_config(
      "space points 2\n"
      "space row 0 1\n"
      "space row x 0\n"
      "group kind free_abelian 1\n"
      "group gen 1 0\n");
  REQUIRE_FALSE(p1.ok());
  CHECK(p1.errors[0].line == 3);

  // Non-bijective generator is located, and is not a metric error.
  auto p2 = parse_config(
      "space points 2\n"
      "space metric discrete\n"
      "group kind free_abelian 1\n"
      "group gen 0 0\n");
  REQUIRE_FALSE(p2.ok());
  CHECK(p2.errors[0].line == 4);
  CHECK(p2.errors[0].message == "not a bijection");

  // Metric axiom violation is its own error kind.
  auto p3 = parse_config(
      "space points 2\n"
      "space row 0 1\n"
      "space row 2 0\n"
      "group kind free_abelian 1\n"
      "group gen 1 0\n");
  REQUIRE_FALSE(p3.ok());
  CHECK(p3.errors[0].message.find("metric axiom violation") != std::string::npos);

  // Unknown directive.
  auto p4 = parse_config("bogus directive\n");
  REQUIRE_FALSE(p4.ok());
  CHECK(p4.errors[0].line == 1);

  // Mixing the two config kinds is rejected.
  auto p5 = parse_config("space points 2\nsft alphabet 2\n");
  REQUIRE_FALSE(p5.ok());

  CHECK_FALSE(parse_config("").ok());
}

TEST_CASE("builtin descriptors") {
  auto p1 = parse_system_source("builtin:cyclic_rotation(4)");
  REQUIRE(p1.ok());
  CHECK(p1.finite->space.points() == 4);

  auto p2 = parse_system_source("builtin:golden_mean");
  REQUIRE(p2.ok());
  CHECK(p2.sft.has_value());

  CHECK_FALSE(parse_system_source("builtin:nope").ok());
  CHECK_FALSE(parse_system_source("builtin:cyclic_rotation(a)").ok());
  CHECK_FALSE(parse_system_source("/no/such/file.cfg").ok());
}

TEST_CASE("suite parsing") {
  Bounds defaults;
  auto s = parse_suite(
      "family standard_finite 6\n"
      "family sft golden_mean\n"
      "theorem T34 T39\n"
      "require_substantive T39\n"
      "radius 8\n",
      defaults);
  REQUIRE(s.ok());
  CHECK(s.config.families.size() == 2);
  CHECK(s.config.theorem_ids == std::vector<std::string>{"T34", "T39"});
  CHECK(s.config.require_substantive == std::vector<std::string>{"T39"});
  CHECK(s.config.bounds.word_radius == 8);
  CHECK(s.config.bounds.cylinder_length == defaults.cylinder_length);

  CHECK_FALSE(parse_suite("", defaults).ok());
  CHECK_FALSE(parse_suite("family sft unknown_shift\n", defaults).ok());
  CHECK_FALSE(parse_suite("theorem T34\nradius -3\n", defaults).ok());
}
