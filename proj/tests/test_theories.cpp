#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "clones/errors.hpp"
#include "clones/theory.hpp"

using namespace clones;

namespace {

OpTable table(int arity, int carrier, std::vector<int> values) {
  OpTable op{arity, carrier, std::move(values)};
  op.validate();
  return op;
}

const OpTable kAnd = table(2, 2, {0, 0, 0, 1});
const OpTable kOr = table(2, 2, {0, 1, 1, 1});
const OpTable kNot = table(1, 2, {1, 0});
const OpTable kC0 = constant_op(0, 0, 2);
const OpTable kC1 = constant_op(0, 1, 2);

}  // namespace

TEST_CASE("full theory materializes every table per arity") {
  const Theory t = full_theory(2, 2);
  CHECK(t.arity_counts() == std::vector<std::size_t>{2, 4, 16});
  CHECK(slice_is_full(2, 2, 16));
  CHECK_FALSE(slice_is_full(2, 2, 15));
  const Theory t3 = full_theory(3, 2);
  CHECK(t3.arity_counts() == std::vector<std::size_t>{3, 27, 19683});
}

TEST_CASE("full theory refuses slices beyond the cap") {
  CHECK_THROWS_AS(full_theory(3, 3, 100), EnumerationTooLarge);
  CHECK_THROWS_AS(full_theory(2, 3, 100), EnumerationTooLarge);
  CHECK_NOTHROW(full_theory(2, 3, 256));
}

TEST_CASE("projections theory is the empty-generator clone") {
  const Theory p = projections_theory(2, 2);
  CHECK(p.arity_counts() == std::vector<std::size_t>{0, 1, 2});
  const Theory c = clone_generate({}, 2, 2);
  CHECK(equal_upto(p, c, 2));
  CHECK(c.generators.empty());
}

TEST_CASE("clone generated by or") {
  const Theory t = clone_generate({kOr}, 2, 2);
  CHECK(t.arity_counts() == std::vector<std::size_t>{0, 1, 3});
  CHECK(t.slice(1) == std::vector<OpTable>{projection(1, 0, 2)});
  CHECK(t.contains(kOr));
  CHECK_FALSE(t.contains(kAnd));
  CHECK_THROWS_AS(t.contains(table(3, 2, {0, 0, 0, 1, 0, 1, 1, 1})), std::invalid_argument);
}

TEST_CASE("nullary generators lift to constants of every arity") {
  const Theory t = clone_generate({kOr, kC0, kC1}, 2, 3);
  CHECK(t.arity_counts() == std::vector<std::size_t>{2, 3, 5, 9});
  const std::vector<OpTable> expected_binary{
      table(2, 2, {0, 0, 0, 0}), table(2, 2, {0, 0, 1, 1}), table(2, 2, {0, 1, 0, 1}),
      table(2, 2, {0, 1, 1, 1}), table(2, 2, {1, 1, 1, 1})};
  CHECK(t.slice(2) == expected_binary);

  const Theory join_zero = clone_generate({kOr, kC0}, 2, 3);
  CHECK(join_zero.arity_counts() == std::vector<std::size_t>{1, 2, 4, 8});
}

TEST_CASE("clone generation is idempotent") {
  const Theory t = clone_generate({kOr, kC0}, 2, 3);
  std::vector<OpTable> members;
  for (int n = 0; n <= t.max_arity; ++n)
    for (const OpTable& op : t.slice(n)) members.push_back(op);
  const Theory again = clone_generate(members, 2, 3);
  CHECK(equal_upto(t, again, 3));
}

TEST_CASE("subset and equality comparisons respect carrier and bound") {
  const Theory p = projections_theory(2, 3);
  const Theory t = clone_generate({kOr}, 2, 3);
  CHECK(subset_upto(p, t, 3));
  CHECK_FALSE(subset_upto(t, p, 3));
  CHECK_FALSE(equal_upto(p, t, 3));
  CHECK(equal_upto(t, t, 3));
  CHECK_FALSE(equal_upto(t, projections_theory(3, 3), 3));  // carrier mismatch
  CHECK_THROWS_AS(equal_upto(t, p, 4), std::invalid_argument);
}

TEST_CASE("generating_ops falls back to members when provenance is absent") {
  const Theory t = clone_generate({kOr}, 2, 2);
  CHECK(generating_ops(t) == std::vector<OpTable>{kOr});
  Theory anonymous = t;
  anonymous.generators.clear();
  std::size_t member_count = 0;
  for (const auto& slice : anonymous.ops_by_arity) member_count += slice.size();
  CHECK(generating_ops(anonymous).size() == member_count);
}

TEST_CASE("center of the and-not clone is the projections") {
  const Theory t = clone_generate({kAnd, kNot}, 2, 3);
  CHECK(t.arity_counts() == std::vector<std::size_t>{0, 4, 16, 256});
  const Theory z = center(t);
  CHECK(z.arity_counts() == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(equal_upto(z, projections_theory(2, 3), 3));
}

TEST_CASE("clone invariant checking accepts clones and flags non-clones") {
  Theory good = clone_generate({kOr, kC0}, 2, 2);
  CHECK_NOTHROW(assert_clone(good));
  CHECK_NOTHROW(assert_clone(full_theory(2, 2)));

  Theory bad = projections_theory(2, 1);
  bad.ops_by_arity[1] = {kNot};  // drops the identity, adds an unclosed op
  CHECK_THROWS_AS(assert_clone(bad), std::logic_error);

  Theory open_slice = clone_generate({kOr}, 2, 2);
  auto& binaries = open_slice.ops_by_arity[2];
  binaries.erase(std::find(binaries.begin(), binaries.end(), kOr));
  CHECK_THROWS_AS(assert_clone(open_slice), std::logic_error);
}
