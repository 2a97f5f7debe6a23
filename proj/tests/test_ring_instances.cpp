#include <doctest.h>

#include <algorithm>

#include "clones/errors.hpp"
#include "clones/rings.hpp"

using namespace clones;

namespace {

int index_of(const EndRing& er, const Endo& e) {
  const int i = er.index_of_endo(e);
  REQUIRE(i >= 0);
  return i;
}

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("builtin groups satisfy the axioms") {
  for (const std::string& name : builtin_group_names()) {
    CAPTURE(name);
    CHECK_NOTHROW(validate_group(builtin_group(name)));
  }
}

TEST_CASE("endomorphism counts for small abelian groups") {
  CHECK(end_ring(builtin_group("Z2")).elements.size() == 2);
  CHECK(end_ring(builtin_group("Z4")).elements.size() == 4);
  CHECK(end_ring(builtin_group("Z2xZ2")).elements.size() == 16);
  CHECK(end_ring(builtin_group("Z6")).elements.size() == 6);
  CHECK(end_ring(builtin_group("Z2^3")).elements.size() == 512);
}

TEST_CASE("End(Z2) is exactly the zero map and the identity") {
  const EndRing er = end_ring(builtin_group("Z2"));
  CHECK(er.elements == std::vector<Endo>{{0, 0}, {0, 1}});
  CHECK(er.ring.size == 2);
  CHECK(check_rig_axioms(er.ring).empty());
}

TEST_CASE("composition and additivity of endomorphisms") {
  const FinAbGroup z4 = builtin_group("Z4");
  const Endo dbl{0, 2, 0, 2};
  const Endo tpl{0, 3, 2, 1};
  CHECK(is_additive(z4, dbl));
  CHECK(is_additive(z4, tpl));
  CHECK_FALSE(is_additive(z4, Endo{0, 1, 1, 1}));
  CHECK(compose(dbl, tpl) == Endo{0, 2, 0, 2});  // 2*(3x) = 6x = 2x
}

TEST_CASE("the two-by-two matrix ring over F2") {
  const EndRing er = end_ring(builtin_group("Z2xZ2"));
  REQUIRE(er.elements.size() == 16);
  const int zero = er.ring.zero;
  const int one = er.ring.one;
  CHECK(er.elements[static_cast<std::size_t>(zero)] == Endo{0, 0, 0, 0});
  CHECK(er.elements[static_cast<std::size_t>(one)] == Endo{0, 1, 2, 3});

  std::vector<int> all(16);
  for (int i = 0; i < 16; ++i) all[static_cast<std::size_t>(i)] = i;
  const std::vector<int> scalars = sorted({zero, one});

  // the center is the scalars, and the scalars centralize everything
  CHECK(centralizer(er.ring, all) == scalars);
  CHECK(centralizer(er.ring, scalars) == all);

  // the scalars are not self-centralizing, so not maximal commutative
  CHECK_FALSE(is_maximal_commutative(er.ring, scalars));
  CHECK_FALSE(is_maximal_commutative_direct(er.ring, scalars));

  // the diagonal subring is maximal commutative by both routes
  const std::vector<int> diagonal = sorted({index_of(er, {0, 0, 0, 0}),
                                            index_of(er, {0, 1, 0, 1}),
                                            index_of(er, {0, 0, 2, 2}),
                                            index_of(er, {0, 1, 2, 3})});
  CHECK(centralizer(er.ring, diagonal) == diagonal);
  CHECK(is_maximal_commutative(er.ring, diagonal));
  CHECK(is_maximal_commutative_direct(er.ring, diagonal));
}

TEST_CASE("subring closure grows a seed to a unital subring") {
  const EndRing er = end_ring(builtin_group("Z2xZ2"));
  const std::vector<int> minimal = subring_closure(er.ring, {});
  CHECK(minimal == sorted({er.ring.zero, er.ring.one}));
  const std::vector<int> everything = subring_closure(
      er.ring, {index_of(er, {0, 2, 1, 3}), index_of(er, {0, 3, 2, 1})});
  CHECK(everything.size() == 16);  // a swap and a shear generate all of it
}

TEST_CASE("module commutant of the natural matrix action is the scalars") {
  const EndRing er = end_ring(builtin_group("Z2xZ2"));
  ModuleAction natural;
  natural.ring = er.ring;
  natural.group = builtin_group("Z2xZ2");
  for (const Endo& e : er.elements) natural.action.push_back(e);
  CHECK_NOTHROW(validate_action(natural));
  CHECK(action_is_faithful(natural));

  const ModuleCommutant mc = module_commutant(natural);
  CHECK(mc.commutant == sorted({er.ring.zero, er.ring.one}));
  CHECK(double_centralizer(mc) == mc.image);
  CHECK(has_double_centralizer_property(natural));
}

TEST_CASE("module commutant of the scalar action is the full matrix ring") {
  const EndRing er = end_ring(builtin_group("Z2xZ2"));
  ModuleAction scalar;
  scalar.ring = builtin_rig("Z2");
  scalar.group = builtin_group("Z2xZ2");
  scalar.action = {Endo{0, 0, 0, 0}, Endo{0, 1, 2, 3}};
  CHECK_NOTHROW(validate_action(scalar));
  CHECK(action_is_faithful(scalar));

  const ModuleCommutant mc = module_commutant(scalar);
  CHECK(mc.commutant.size() == 16);
  const std::vector<int> dc = double_centralizer(mc);
  CHECK(dc == sorted({er.ring.zero, er.ring.one}));
  CHECK(dc == mc.image);
  CHECK(has_double_centralizer_property(scalar));
}

TEST_CASE("the regular commutant is the opposite ring") {
  const OppositeWitness z4 = regular_commutant_is_opposite(builtin_rig("Z4"));
  CHECK(z4.holds());
  CHECK(z4.centralizer_size == 4);

  const OppositeWitness ut = regular_commutant_is_opposite(builtin_rig("UT2_F2"));
  CHECK(ut.holds());
  CHECK(ut.centralizer_size == 8);
  CHECK(ut.centralizer_is_right_multiplications);
  CHECK(ut.anti_isomorphism_valid);
}

TEST_CASE("enumeration refuses large non-elementary groups") {
  CHECK_THROWS_AS(end_ring(builtin_group("Z6"), 5), EnumerationTooLarge);
  CHECK_NOTHROW(end_ring(builtin_group("Z6"), 6));
  // elementary abelian groups take the structural path regardless of size
  CHECK_NOTHROW(end_ring(builtin_group("Z2^3"), 2));
}

TEST_CASE("action validation flags non-actions") {
  ModuleAction bad;
  bad.ring = builtin_rig("Z2");
  bad.group = builtin_group("Z2xZ2");
  bad.action = {Endo{0, 0, 0, 0}, Endo{0, 0, 0, 0}};  // 1 does not act as identity
  CHECK_THROWS_AS(validate_action(bad), std::invalid_argument);
  CHECK_FALSE(action_is_faithful(ModuleAction{
      builtin_rig("Z2"), builtin_group("Z2xZ2"), {Endo{0, 0, 0, 0}, Endo{0, 0, 0, 0}}}));
}
