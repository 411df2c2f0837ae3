#include "doctest.h"
#include "hyperdyn/group.hpp"
#include "hyperdyn/systems.hpp"

using namespace hyperdyn;

TEST_CASE("permutation utilities") {
  Perm p{1, 2, 0};
  CHECK(is_permutation(p));
  CHECK_FALSE(is_permutation(Perm{0, 0, 1}));
  CHECK(inverse_perm(p) == Perm{2, 0, 1});
  CHECK(compose_perm(p, p) == Perm{2, 0, 1});
  CHECK(compose_perm(p, inverse_perm(p)) == identity_perm(3));
}

TEST_CASE("free abelian group elements") {
  auto sys = builtin_cyclic_rotation(3);
  auto id = GroupElement::identity(sys.group);
  auto g = GroupElement::generator(sys.group, 0);
  CHECK(id.is_identity());
  CHECK_FALSE(g.is_identity());
  CHECK(g_mul(sys.group, g, g_inv(sys.group, g)) == id);
  auto g2 = g_mul(sys.group, g, g);
  CHECK(g2.exps == std::vector<int>{2});
}

TEST_CASE("action evaluation on the 3-cycle") {
  auto sys = builtin_cyclic_rotation(3);
  auto g = GroupElement::generator(sys.group, 0);
  CHECK(evaluate(sys, g, 0) == 1);
  CHECK(evaluate(sys, g, 2) == 0);
  CHECK(evaluate(sys, g_inv(sys.group, g), 0) == 2);
  CHECK(act_on_set(sys, g, 0b011) == 0b110);
  // Bijections preserve cardinality.
  CHECK(set_size(act_on_set(sys, g, 0b101)) == 2);
}

TEST_CASE("action system validation") {
  auto sys = builtin_cyclic_rotation(3);
  CHECK(validate_action_system(sys).empty());

  auto bad = sys;
  bad.group.generators[0] = Perm{0, 0, 1};
  CHECK_FALSE(validate_action_system(bad).empty());

  // Non-commuting generators under an abelian spec.
  ActionSystem nc{FiniteMetricSpace::discrete(3),
                  GroupSpec{GroupKind::FinitePresentedByImage, 0,
                            {Perm{1, 0, 2}, Perm{0, 2, 1}}, true},
                  "noncommuting"};
  CHECK_FALSE(validate_action_system(nc).empty());
  nc.group.abelian = false;
  CHECK(validate_action_system(nc).empty());
}

TEST_CASE("image group closure of the 4-cycle") {
  auto sys = builtin_cyclic_rotation(4);
  ImageGroup ig(sys);
  CHECK(ig.size() == 4);
  CHECK(ig.perm(ig.identity()) == identity_perm(4));
  for (int a = 0; a < ig.size(); ++a) {
    CHECK(ig.mul(a, ig.inv(a)) == ig.identity());
    CHECK(ig.index_of(ig.perm(a)) == a);
  }
  // Shortest preimage words: the inverse generator reaches rotation-by-3
  // in one step, so its stored word is the exponent vector [-1].
  int rot3 = ig.index_of(Perm{3, 0, 1, 2});
  CHECK(ig.word(rot3).exps == std::vector<int>{-1});
  // element_image is a homomorphism.
  auto g = GroupElement::generator(sys.group, 0, 2);
  int img = ig.element_image(sys, g);
  CHECK(ig.apply(img, 0) == 2);
}

TEST_CASE("klein image group") {
  auto sys = builtin_klein_on_4();
  ImageGroup ig(sys);
  CHECK(ig.size() == 4);
  for (int a = 0; a < ig.size(); ++a) CHECK(ig.inv(a) == a);  // every element an involution
  CHECK_FALSE(sys.group.is_infinite());
}

TEST_CASE("orbits and periodic points") {
  auto rot = builtin_cyclic_rotation(3);
  CHECK(orbit(rot, 0) == full_mask(3));
  auto triv = builtin_identity(2);
  CHECK(orbit(triv, 1) == 0b10);

  auto pp = is_periodic_point(rot, 0);
  CHECK(pp.periodic);
  CHECK(pp.orbit_size == 3);
  CHECK(pp.stabilizer_index == 3);
  CHECK(is_periodic_point(triv, 0).orbit_size == 1);
}

TEST_CASE("ball enumeration order") {
  auto sys = builtin_cyclic_rotation(3);
  auto ball = enumerate_ball(sys.group, 2);
  REQUIRE(ball.size() == 5);
  CHECK(ball[0].exps == std::vector<int>{0});
  CHECK(ball[1].exps == std::vector<int>{1});
  CHECK(ball[2].exps == std::vector<int>{-1});
  CHECK(ball[3].exps == std::vector<int>{2});
  CHECK(ball[4].exps == std::vector<int>{-2});

  auto pair = builtin_commuting_pair(4);
  auto ball2 = enumerate_ball(pair.group, 1);
  CHECK(ball2.size() == 5);  // identity plus four signed unit vectors
  CHECK(ball2[0].is_identity());
}

TEST_CASE("ball enumeration for finite-image groups") {
  auto sys = builtin_klein_on_4();
  auto ball = enumerate_ball(sys.group, 4);
  CHECK(ball.size() == 4);  // the whole group is reachable
  CHECK(ball[0].is_identity());
}
