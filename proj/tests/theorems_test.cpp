#include "doctest.h"
#include "hyperdyn/systems.hpp"
#include "hyperdyn/theorems.hpp"

using namespace hyperdyn;

namespace {
const std::vector<std::string> kAllIds{"P32", "P33", "P35",  "T34", "T36",
                                       "C37a", "C37b", "T38", "T39", "T310"};
}

TEST_CASE("vietoris proof witness construction") {
  auto sys = builtin_cyclic_rotation(3);
  auto g = GroupElement::generator(sys.group, 0);
  // gamma = rotation by one connects {0}->{1} and {1,2}->{2,0}.
  auto w = construct_vietoris_proof_witness(sys, g, {0b001, 0b110}, {0b010, 0b101});
  CHECK(w.member_in_u);
  CHECK(w.image_in_v);
  CHECK(w.proof_basic.opens.size() == 2);
  // Independent recheck of both membership claims.
  CHECK(vietoris_contains(VietorisBasic{{0b001, 0b110}}, w.member));
  CHECK(vietoris_contains(VietorisBasic{{0b010, 0b101}}, act_on_set(sys, g, w.member)));

  // A gamma that misses some pair is rejected with the failing index named.
  CHECK_THROWS_AS(construct_vietoris_proof_witness(sys, g, {0b001}, {0b100}),
                  std::invalid_argument);
}

TEST_CASE("periodic witness construction") {
  auto sys = builtin_commuting_pair(4);
  VietorisBasic basic{{0b0011, 0b1100}};
  auto w = construct_periodic_witness(sys, basic);
  CHECK(w.member_in_basic);
  CHECK(vietoris_contains(basic, w.member));
  CHECK(w.orbit_size >= 1);
  CHECK(w.orbit_size <= w.stabilizer_index_bound);
  CHECK(w.image_group_order % w.orbit_size == 0);
  CHECK(w.point_orbit_sizes.size() == basic.opens.size());
}

TEST_CASE("every theorem id runs without refutation on the standard suite") {
  Bounds b;
  for (const auto& sys : standard_finite_suite()) {
    for (const auto& id : kAllIds) {
      CAPTURE(sys.name);
      CAPTURE(id);
      auto c = verify_theorem(id, sys, b);
      CHECK(c.verdict != TheoremVerdict::Refuted);
    }
  }
}

TEST_CASE("T39 is substantive everywhere and T34 records the converse failure") {
  Bounds b;
  for (const auto& sys : standard_finite_suite()) {
    auto c = verify_theorem("T39", sys, b);
    CHECK(c.verdict == TheoremVerdict::Confirmed);
    CHECK(c.substantive);
  }
  auto t34 = verify_theorem("T34", builtin_cyclic_rotation(3), b);
  CHECK(t34.verdict == TheoremVerdict::ConfirmedVacuously);
  CHECK(t34.detail.contains("note"));  // base transitive, hyperspace not
  CHECK(t34.detail["base_transitive"] == "holds");
}

TEST_CASE("single-point system exercises the substantive branches") {
  Bounds b;
  auto triv = builtin_identity(1);
  for (const auto& id : {"P35", "T34", "C37a", "C37b", "T310"}) {
    auto c = verify_theorem(id, triv, b);
    CHECK(c.verdict == TheoremVerdict::Confirmed);
    CHECK(c.substantive);
  }
}

TEST_CASE("abelian-only theorems reject non-abelian systems") {
  ActionSystem nonab{FiniteMetricSpace::discrete(3),
                     GroupSpec{GroupKind::FinitePresentedByImage, 0,
                               {Perm{1, 0, 2}, Perm{0, 2, 1}}, false},
                     "sym3"};
  Bounds b;
  for (const auto& id : {"T36", "T38", "T310", "P35"})
    CHECK_THROWS_AS(verify_theorem(id, nonab, b), std::invalid_argument);
  // Abelianity is not needed elsewhere.
  CHECK_NOTHROW(verify_theorem("T34", nonab, b));
  CHECK_NOTHROW(verify_theorem("T39", nonab, b));
}

TEST_CASE("unknown ids are rejected") {
  Bounds b;
  CHECK_THROWS_AS(verify_theorem("T999", builtin_identity(1), b), std::invalid_argument);
  CHECK_THROWS_AS(verify_theorem_sft("T34", builtin_golden_mean(), b), std::invalid_argument);
}

TEST_CASE("bounded theorem verification on subshifts") {
  Bounds b;
  for (const auto& m : {builtin_full_shift(2), builtin_golden_mean()}) {
    for (const auto& id : {"T36", "T38", "P35"}) {
      CAPTURE(m.name);
      CAPTURE(id);
      auto c = verify_theorem_sft(id, m, b);
      CHECK(c.verdict != TheoremVerdict::Refuted);
      CHECK(c.substantive);
    }
  }
}

TEST_CASE("subshift proof witness replay") {
  auto gm = builtin_golden_mean();
  std::vector<Pattern> us{cylinder_pattern(gm, {"0", 0})};
  std::vector<Pattern> vs{cylinder_pattern(gm, {"1", 0})};
  auto w = sft_construct_vietoris_proof_witness(gm, 1, us, vs);
  CHECK(w.member_in_u);
  CHECK(w.image_in_v);
  REQUIRE(w.member.size() == 1);
  CHECK(point_matches(w.member[0], us[0]));
}

TEST_CASE("suite runner") {
  SuiteConfig cfg;
  cfg.families.push_back({"standard_finite", standard_finite_suite(4), std::nullopt});
  cfg.families.push_back({"golden_mean", {}, builtin_golden_mean()});
  cfg.theorem_ids = {"T34", "T36", "T38", "T39"};
  cfg.require_substantive = {"T39"};
  auto report = run_suite(cfg);
  CHECK(report.passed);
  CHECK(report.refuted == 0);
  CHECK(report.problems.empty());
  CHECK(report.confirmed > 0);

  // An unsatisfiable substantiveness requirement turns into a problem:
  // subshift families only run T36/T38/P35, so no T39 case can exist.
  cfg.families = {{"golden_mean", {}, builtin_golden_mean()}};
  cfg.theorem_ids = {"T36", "T39"};
  cfg.require_substantive = {"T39"};
  auto strict = run_suite(cfg);
  CHECK_FALSE(strict.passed);
  CHECK_FALSE(strict.problems.empty());
}
