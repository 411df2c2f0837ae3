#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "hyperdyn/sft.hpp"
#include "hyperdyn/systems.hpp"

using namespace hyperdyn;

namespace {

// Brute-force count of allowed words by direct enumeration.
long long brute_word_count(const Sft& m, int len) {
  long long count = 0;
  std::vector<int> w(len, 0);
  while (true) {
    if (m.word_allowed(w)) ++count;
    int i = len - 1;
    while (i >= 0 && w[i] == m.k - 1) w[i--] = 0;
    if (i < 0) break;
    ++w[i];
  }
  return count;
}

}  // namespace

TEST_CASE("builtin subshift oracles") {
  auto full = builtin_full_shift(2);
  CHECK(sft_is_irreducible(full));
  auto pf = sft_is_primitive(full);
  CHECK(pf.primitive);
  CHECK(pf.exponent == 1);

  auto gm = builtin_golden_mean();
  CHECK(sft_is_irreducible(gm));
  auto pg = sft_is_primitive(gm);
  CHECK(pg.primitive);
  CHECK(pg.exponent == 2);

  auto sw = builtin_swap_sft();
  CHECK(sft_is_irreducible(sw));
  auto ps = sft_is_primitive(sw);
  CHECK_FALSE(ps.primitive);
  CHECK(ps.period == 2);
}

TEST_CASE("construction from forbidden words") {
  auto gm = sft_from_forbidden_words(2, {"11"});
  CHECK(gm.k == 2);
  CHECK(gm.allowed(0, 0));
  CHECK(gm.allowed(0, 1));
  CHECK(gm.allowed(1, 0));
  CHECK_FALSE(gm.allowed(1, 1));

  // Forbidding a single symbol prunes it away.
  auto one = sft_from_forbidden_words(2, {"1"});
  CHECK(one.k == 1);

  // Empty language is rejected.
  CHECK_THROWS_AS(sft_from_forbidden_words(2, {"0", "1"}), std::invalid_argument);

  // Bad matrix rows are rejected too.
  CHECK_THROWS_AS(sft_from_matrix(2, {{0, 0}, {0, 0}}), std::invalid_argument);
}

TEST_CASE("higher-block recoding preserves periodic point counts") {
  // Forbid 111 over {0,1}: periodic points of period dividing p are cyclic
  // binary words of length p whose periodic extension avoids 111.
  auto m = sft_from_forbidden_words(2, {"111"});
  CHECK(trace_power(m, 1) == 1);  // only ...000...
  CHECK(trace_power(m, 2) == 3);  // 00, 01, 10
  CHECK(trace_power(m, 3) == 7);  // all except 111
}

TEST_CASE("word counting matches brute force") {
  for (const Sft& m : {builtin_full_shift(2), builtin_golden_mean(), builtin_swap_sft()})
    for (int len = 1; len <= 6; ++len) CHECK(count_words_of_length(m, len) == brute_word_count(m, len));
  // Golden mean word counts are the Fibonacci numbers.
  auto gm = builtin_golden_mean();
  CHECK(count_words_of_length(gm, 1) == 2);
  CHECK(count_words_of_length(gm, 2) == 3);
  CHECK(count_words_of_length(gm, 3) == 5);
  CHECK(count_words_of_length(gm, 4) == 8);
}

TEST_CASE("cylinder enumeration order") {
  auto gm = builtin_golden_mean();
  auto cyls = cylinders_up_to(gm, 2);
  REQUIRE(cyls.size() == 5);
  CHECK(cyls[0].word == "0");
  CHECK(cyls[1].word == "1");
  CHECK(cyls[2].word == "00");
  CHECK(cyls[3].word == "01");
  CHECK(cyls[4].word == "10");
  for (const auto& c : cyls) CHECK(c.anchor == 0);
}

TEST_CASE("pattern operations") {
  auto gm = builtin_golden_mean();
  Pattern p = cylinder_pattern(gm, {"01", 0});
  CHECK(p.cells.at(0) == 0);
  CHECK(p.cells.at(1) == 1);

  Pattern q = shift_pattern(p, 2);  // y_i = x_{i+2}: constraints move left
  CHECK(q.cells.at(-2) == 0);
  CHECK(q.cells.at(-1) == 1);

  CHECK_FALSE(merge_patterns(p, cylinder_pattern(gm, {"1", 0})).has_value());
  auto merged = merge_patterns(p, cylinder_pattern(gm, {"10", 1}));
  REQUIRE(merged.has_value());
  CHECK(merged->cells.size() == 3);

  // Gap filling: 1_1 is realizable (101) but 11 is not.
  Pattern gap;
  gap.cells[0] = 1;
  gap.cells[2] = 1;
  CHECK(pattern_fillable(gm, gap));
  Pattern bad;
  bad.cells[0] = 1;
  bad.cells[1] = 1;
  CHECK_FALSE(pattern_fillable(gm, bad));
  CHECK(pattern_fillable(gm, Pattern{}));  // empty pattern = whole space
}

TEST_CASE("periodic sequence points") {
  PeriodicSeqPoint x{{0, 1}, 0};
  CHECK(x.at(0) == 0);
  CHECK(x.at(1) == 1);
  CHECK(x.at(-1) == 1);
  PeriodicSeqPoint y{{0, 1}, 1};  // shifted copy
  CHECK(y.at(1) == 0);

  auto d = first_disagreement(x, y);
  REQUIRE(d.has_value());
  CHECK(*d == 0);
  CHECK_FALSE(first_disagreement(x, x).has_value());
  // Same point under different presentations.
  PeriodicSeqPoint x2{{0, 1, 0, 1}, 2};
  CHECK_FALSE(first_disagreement(x, x2).has_value());

  Pattern p;
  p.cells[0] = 1;
  p.cells[2] = 1;
  auto gm = builtin_golden_mean();
  auto through = periodic_point_through(gm, p);
  REQUIRE(through.has_value());
  CHECK(point_matches(*through, p));
  // The constructed cycle respects the transition matrix.
  for (size_t i = 0; i < through->cycle.size(); ++i)
    CHECK(gm.allowed(through->cycle[i], through->cycle[(i + 1) % through->cycle.size()]));
}

TEST_CASE("periodic subsystems") {
  auto full = builtin_full_shift(2);
  auto sub = periodic_subsystem(full, 2);
  CHECK(sub.space.points() == trace_power(full, 2));  // 4 points
  CHECK(validate_action_system(sub).empty());
  CHECK(validate_metric(sub.space).empty());

  auto gm = builtin_golden_mean();
  CHECK(periodic_subsystem(gm, 2).space.points() == 3);
  CHECK_THROWS(periodic_subsystem(builtin_swap_sft(), 1));  // trace 0: no fixed points
}
