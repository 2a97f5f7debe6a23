#include <doctest.h>

#include "clones/rig.hpp"
#include "clones/rig_theories.hpp"
#include "clones/theory.hpp"

using namespace clones;

TEST_CASE("builtin rigs satisfy the axioms") {
  for (const std::string& name : builtin_rig_names()) {
    CAPTURE(name);
    const Rig r = builtin_rig(name);
    CHECK(check_rig_axioms(r).empty());
  }
}

TEST_CASE("builtin rig shapes") {
  CHECK(builtin_rig("Z2").size == 2);
  CHECK(builtin_rig("Z3").size == 3);
  CHECK(builtin_rig("Z4").size == 4);
  CHECK(builtin_rig("bool2").size == 2);
  CHECK(builtin_rig("F4").size == 4);
  CHECK(builtin_rig("UT2_F2").size == 8);

  CHECK(mul_commutative(builtin_rig("Z2")));
  CHECK(mul_commutative(builtin_rig("Z3")));
  CHECK(mul_commutative(builtin_rig("Z4")));
  CHECK(mul_commutative(builtin_rig("bool2")));
  CHECK(mul_commutative(builtin_rig("F4")));
  CHECK_FALSE(mul_commutative(builtin_rig("UT2_F2")));

  CHECK(is_ring(builtin_rig("Z4")));
  CHECK(is_ring(builtin_rig("F4")));
  CHECK(is_ring(builtin_rig("UT2_F2")));
  CHECK_FALSE(is_ring(builtin_rig("bool2")));  // no additive inverses
}

TEST_CASE("F4 is a field of characteristic two") {
  const Rig f4 = builtin_rig("F4");
  // elements 0, 1, w, w+1 encoded 0..3; addition is xor.
  CHECK(rig_add(f4, 2, 3) == 1);
  CHECK(rig_add(f4, 2, 2) == 0);
  CHECK(rig_mul(f4, 2, 2) == 3);  // w * w = w + 1
  CHECK(rig_mul(f4, 2, 3) == 1);  // w * (w+1) = 1
}

TEST_CASE("opposite swaps multiplication and is an involution") {
  const Rig u = builtin_rig("UT2_F2");
  const Rig uo = opposite(u);
  CHECK(check_rig_axioms(uo).empty());
  CHECK(uo.mul != u.mul);
  CHECK(opposite(uo) == u);
  CHECK(opposite(builtin_rig("Z4")) == builtin_rig("Z4"));
}

TEST_CASE("row operations are left-linear combinations") {
  const Rig b = builtin_rig("bool2");
  CHECK(op_of_row(b, {1, 1}) == OpTable{2, 2, {0, 1, 1, 1}});
  CHECK(op_of_row(b, {0, 1}) == OpTable{2, 2, {0, 0, 1, 1}});
  CHECK(op_of_row(b, {}) == constant_op(0, 0, 2));
  const Rig z4 = builtin_rig("Z4");
  CHECK(op_of_row(z4, {3}) == OpTable{1, 4, {0, 3, 2, 1}});
  // row products: kron1 of the or row with the second-projection row
  const OpTable p = kron1(op_of_row(b, {1, 1}), op_of_row(b, {0, 1}));
  CHECK(p.table ==
        std::vector<int>{0, 0, 1, 1, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1});
}

TEST_CASE("matrix kronecker multiplies second-factor entries on the left") {
  const Rig z4 = builtin_rig("Z4");
  const RMatrix x{1, 2, {1, 2}};
  const RMatrix y{1, 2, {3, 1}};
  const RMatrix p = matrix_kronecker(z4, x, y);
  CHECK(p.rows == 1);
  CHECK(p.cols == 4);
  // entry at column (i,l) = i*2+l is y[l] * x[i]
  CHECK(p.entries == std::vector<int>{3, 1, 2, 2});
}

TEST_CASE("row form of a matrix product is the operation product, same order") {
  for (const std::string& name : {std::string("Z4"), std::string("bool2")}) {
    CAPTURE(name);
    const Rig r = builtin_rig(name);
    std::vector<std::vector<int>> rows;
    rows.push_back({});
    for (int a = 0; a < r.size; ++a) {
      rows.push_back({a});
      for (int b = 0; b < r.size; ++b) rows.push_back({a, b});
    }
    for (const auto& rho : rows)
      for (const auto& sigma : rows) {
        const RMatrix x{1, static_cast<int>(rho.size()), rho};
        const RMatrix y{1, static_cast<int>(sigma.size()), sigma};
        const OpTable lhs = op_of_row(r, matrix_kronecker(r, x, y).entries);
        CHECK(lhs == kron1(op_of_row(r, rho), op_of_row(r, sigma)));
      }
  }
}

TEST_CASE("the swapped argument order breaks on projection rows") {
  const Rig b = builtin_rig("bool2");
  const std::vector<int> rho{1, 0};    // first projection as a row
  const std::vector<int> sigma{0, 1};  // second projection as a row
  const RMatrix xm{1, 2, rho};
  const RMatrix ym{1, 2, sigma};
  const OpTable swapped = op_of_row(b, matrix_kronecker(b, ym, xm).entries);
  const OpTable product = kron1(op_of_row(b, rho), op_of_row(b, sigma));
  CHECK(swapped.table ==
        std::vector<int>{0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 1, 1, 1, 1});
  CHECK(product.table ==
        std::vector<int>{0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1});
  CHECK(swapped != product);
}

TEST_CASE("linear theories over bool2") {
  const Rig b = builtin_rig("bool2");
  const Theory m = mat_theory(b, 3);
  CHECK(m.arity_counts() == std::vector<std::size_t>{1, 2, 4, 8});
  const std::vector<OpTable> expected_binary{
      OpTable{2, 2, {0, 0, 0, 0}}, OpTable{2, 2, {0, 0, 1, 1}}, OpTable{2, 2, {0, 1, 0, 1}},
      OpTable{2, 2, {0, 1, 1, 1}}};
  CHECK(m.slice(2) == expected_binary);
  CHECK(equal_upto(m, clone_generate({OpTable{2, 2, {0, 1, 1, 1}}, constant_op(0, 0, 2)}, 2, 3),
                   3));

  const Theory aff = mat_aff_theory(b, 3);
  CHECK(aff.arity_counts() == std::vector<std::size_t>{0, 1, 3, 7});

  const Theory ptd = pointed_mod_theory(b, 3);
  CHECK(ptd.arity_counts() == std::vector<std::size_t>{2, 3, 5, 9});
  const std::vector<OpTable> expected_unary{OpTable{1, 2, {0, 0}}, OpTable{1, 2, {0, 1}},
                                            OpTable{1, 2, {1, 1}}};
  CHECK(ptd.slice(1) == expected_unary);
  const OpTable or2{2, 2, {0, 1, 1, 1}};
  CHECK(equal_upto(ptd,
                   clone_generate({or2, constant_op(0, 0, 2), constant_op(0, 1, 2)}, 2, 3), 3));
}

TEST_CASE("linear theory sizes follow row counts because rows never collide") {
  // evaluating a row operation at a unit vector recovers the row entry, so
  // distinct rows give distinct tables over every builtin rig.
  for (const std::string& name : builtin_rig_names()) {
    CAPTURE(name);
    CHECK_FALSE(mat_rows_collide(builtin_rig(name), 2));
  }
  const Theory m = mat_theory(builtin_rig("Z3"), 2);
  CHECK(m.arity_counts() == std::vector<std::size_t>{1, 3, 9});
}
