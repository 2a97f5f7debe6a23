#include <doctest.h>

#include "clones/commutant.hpp"
#include "clones/errors.hpp"
#include "clones/rig_theories.hpp"

using namespace clones;

namespace {

const OpTable kAnd{2, 2, {0, 0, 0, 1}};
const OpTable kOr{2, 2, {0, 1, 1, 1}};
const OpTable kNot{1, 2, {1, 0}};
const OpTable kXor{2, 2, {0, 1, 1, 0}};

}  // namespace

TEST_CASE("commutant of the join-with-zero generators is the linear theory") {
  const std::vector<OpTable> gens{kOr, constant_op(0, 0, 2)};
  const Theory c = commutant(gens, 2, 3);
  CHECK(c.arity_counts() == std::vector<std::size_t>{1, 2, 4, 8});
  CHECK(equal_upto(c, mat_theory(builtin_rig("bool2"), 3), 3));
  CHECK(c.generators.empty());  // commutants carry no generator provenance
  const Theory cc = double_commutant(gens, 2, 3);
  CHECK(equal_upto(cc, c, 3));
}

TEST_CASE("commutant of the affine theory is the pointed theory and back") {
  const Rig b = builtin_rig("bool2");
  const Theory aff = mat_aff_theory(b, 3);
  const Theory caff = commutant(generating_ops(aff), 2, 3);
  CHECK(caff.arity_counts() == std::vector<std::size_t>{2, 3, 5, 9});
  CHECK(equal_upto(caff, pointed_mod_theory(b, 3), 3));

  const Theory ptd = pointed_mod_theory(b, 3);
  const Theory cptd = commutant(generating_ops(ptd), 2, 3);
  CHECK(cptd.arity_counts() == std::vector<std::size_t>{0, 1, 3, 7});
  CHECK(equal_upto(cptd, aff, 3));
}

TEST_CASE("commutant of no generators is the full theory") {
  const Theory c = commutant({}, 2, 3);
  CHECK(c.arity_counts() == std::vector<std::size_t>{2, 4, 16, 256});
  CHECK(equal_upto(c, full_theory(2, 3), 3));
}

TEST_CASE("linear theories over small fields are balanced") {
  const Theory m2 = mat_theory(builtin_rig("Z2"), 2);
  const Theory c2 = commutant(generating_ops(m2), 2, 2);
  CHECK(c2.arity_counts() == std::vector<std::size_t>{1, 2, 4});
  CHECK(equal_upto(c2, m2, 2));

  const Theory m3 = mat_theory(builtin_rig("Z3"), 2);
  const Theory c3 = commutant(generating_ops(m3), 3, 2);
  CHECK(c3.arity_counts() == std::vector<std::size_t>{1, 3, 9});
  CHECK(equal_upto(c3, m3, 2));

  CHECK(is_balanced(mat_theory(builtin_rig("bool2"), 3)));
}

TEST_CASE("the Z4 binary slice needs backtracking and matches the linear slice") {
  const Theory m4 = mat_theory(builtin_rig("Z4"), 2);
  CommutantOptions opts;
  opts.strategy = SliceStrategy::backtracking;
  const Theory c4 = commutant(generating_ops(m4), 4, 2, nullptr, opts);
  CHECK(c4.arity_counts() == std::vector<std::size_t>{1, 4, 16});
  CHECK(equal_upto(c4, m4, 2));

  // automatic strategy must reach the same result (4^16 candidates exceed
  // the default cap, so it falls back to the search)
  const Theory c4_auto = commutant(generating_ops(m4), 4, 2);
  CHECK(equal_upto(c4_auto, c4, 2));
}

TEST_CASE("both slice strategies agree on assorted generator families") {
  struct Family {
    int carrier;
    int max_arity;
    std::vector<OpTable> gens;
  };
  const std::vector<Family> families{
      {2, 3, {kOr, constant_op(0, 0, 2)}},
      {2, 3, {kXor, kNot}},
      {3, 2, {OpTable{1, 3, {1, 2, 0}}}},
      {3, 2, {OpTable{2, 3, {0, 0, 0, 0, 1, 1, 0, 1, 2}}}},
  };
  for (const Family& f : families) {
    CAPTURE(f.carrier);
    for (int n = 0; n <= f.max_arity; ++n) {
      CommutantOptions ex;
      ex.strategy = SliceStrategy::exhaustive;
      CommutantOptions bt;
      bt.strategy = SliceStrategy::backtracking;
      CHECK(commutant_slice(f.gens, f.carrier, n, ex) == commutant_slice(f.gens, f.carrier, n, bt));
    }
  }
}

TEST_CASE("a worker pool does not change the exhaustive result") {
  CommutantOptions serial;
  serial.threads = 1;
  CommutantOptions pooled;
  pooled.threads = 4;
  const std::vector<OpTable> gens{kOr};
  for (int n = 0; n <= 3; ++n)
    CHECK(commutant_slice(gens, 2, n, serial) == commutant_slice(gens, 2, n, pooled));
}

TEST_CASE("saturation and balance") {
  // clone{or, 0} is the linear theory over the boolean rig, which commutes
  // with itself exactly; so it is balanced, hence saturated.
  const Theory join_zero = clone_generate({kOr, constant_op(0, 0, 2)}, 2, 3);
  CHECK(is_balanced(join_zero));
  CHECK(is_saturated(join_zero));

  // the pointed theory's commutant is the affine theory, which is strictly
  // smaller, so it is not balanced; but the affine commutant comes back to
  // the pointed theory, so it is saturated.
  const Theory ptd = pointed_mod_theory(builtin_rig("bool2"), 3);
  CHECK_FALSE(is_balanced(ptd));
  CHECK(is_saturated(ptd));

  const Theory projections = projections_theory(2, 2);
  CHECK_FALSE(is_balanced(projections));  // everything commutes with projections
}

TEST_CASE("theory commutation matches operation commutation on generators") {
  const Theory a = clone_generate({kAnd}, 2, 2);
  const Theory o = clone_generate({kOr}, 2, 2);
  CommutantOptions opts;
  CHECK_FALSE(theories_commute(generating_ops(a), generating_ops(o), 2, opts));
  CHECK(theories_commute(generating_ops(o), generating_ops(o), 2, opts));
  CHECK(is_commutative(mat_theory(builtin_rig("bool2"), 3)));
  CHECK(is_commutative(mat_theory(builtin_rig("F4"), 2)));
  CHECK_FALSE(is_commutative(mat_theory(builtin_rig("UT2_F2"), 2)));
}

TEST_CASE("generator-pair commutativity agrees with the all-pairs scan") {
  const std::vector<Theory> theories{
      clone_generate({kOr}, 2, 2),
      clone_generate({kOr, constant_op(0, 0, 2)}, 2, 3),
      clone_generate({kAnd, kNot}, 2, 2),
      mat_theory(builtin_rig("Z3"), 2),
      projections_theory(2, 2),
  };
  for (const Theory& t : theories) CHECK(is_commutative(t) == is_commutative_all_pairs(t));
}

TEST_CASE("exhaustive scans refuse candidate sets beyond the cap") {
  CommutantOptions opts;
  opts.strategy = SliceStrategy::exhaustive;
  opts.cap = 100;
  CHECK_THROWS_AS(commutant_slice({kOr}, 2, 3, opts), EnumerationTooLarge);  // 2^8 candidates
  opts.cap = 256;
  CHECK_NOTHROW(commutant_slice({kOr}, 2, 3, opts));
}

TEST_CASE("the search reports an exhausted node budget") {
  CommutantOptions opts;
  opts.strategy = SliceStrategy::backtracking;
  opts.node_budget = 1;
  CHECK_THROWS_AS(commutant_slice({}, 2, 3, opts), IntractableSlice);
}

TEST_CASE("commutes_with_all filters single operations") {
  CHECK(commutes_with_all(projection(2, 0, 2), {kOr, kAnd}));
  CHECK_FALSE(commutes_with_all(kNot, {kOr}));
  // not is not additive (not(a) xor not(b) = a xor b != not(a xor b)), so it
  // fails against xor; the identity passes against everything.
  CHECK_FALSE(commutes_with_all(kNot, {kXor}));
  CHECK(commutes_with_all(OpTable{1, 2, {0, 1}}, {kXor, kOr, kAnd, kNot}));
}
