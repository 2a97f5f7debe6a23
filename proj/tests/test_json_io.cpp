#include <doctest.h>

#include "clones/json_io.hpp"
#include "clones/rig_theories.hpp"

using namespace clones;

namespace {

const OpTable kOr{2, 2, {0, 1, 1, 1}};
const OpTable kAnd{2, 2, {0, 0, 0, 1}};

}  // namespace

TEST_CASE("operation documents round-trip, including nullary carriers") {
  const std::vector<OpTable> ops{kOr, kAnd, projection(1, 0, 3), constant_op(0, 2, 5),
                                 constant_op(3, 1, 2)};
  for (const OpTable& op : ops) {
    CAPTURE(op.arity);
    CHECK(op_from_json(op_to_json(op)) == op);
  }
}

TEST_CASE("the carrier is inferred from the table length when absent") {
  const Json binary{{"arity", 2}, {"table", {0, 1, 1, 1}}};
  CHECK(op_from_json(binary) == kOr);
  const Json big{{"arity", 2}, {"table", std::vector<int>(9, 0)}};
  CHECK(op_from_json(big).carrier == 3);

  // nullary tables default to the smallest carrier containing the value
  const Json nullary{{"arity", 0}, {"table", {2}}};
  CHECK(op_from_json(nullary).carrier == 3);
  // an explicit field or a surrounding-document hint overrides the inference
  const Json pinned{{"arity", 0}, {"carrier", 7}, {"table", {2}}};
  CHECK(op_from_json(pinned).carrier == 7);
  CHECK(op_from_json(nullary, 5).carrier == 5);
}

TEST_CASE("malformed operation documents are parse errors") {
  CHECK_THROWS_AS(op_from_json(Json{{"arity", 2}}), ParseError);
  CHECK_THROWS_AS(op_from_json(Json{{"arity", 2}, {"table", {0, 1, 1}}}), ParseError);
  CHECK_THROWS_AS(op_from_json(Json{{"arity", 1}, {"table", {0, 9}}, {"carrier", 2}}),
                  ParseError);
  CHECK_THROWS_AS(op_from_json(Json{{"arity", -1}, {"table", {0}}}), ParseError);
  CHECK_THROWS_AS(op_from_json(Json::array()), ParseError);
}

TEST_CASE("theory documents round-trip with slices and generators") {
  const Theory t = clone_generate({kOr, constant_op(0, 0, 2)}, 2, 3);
  const Json doc = theory_to_json(t);
  const Theory back = theory_from_json(doc);
  CHECK(back.carrier == t.carrier);
  CHECK(back.max_arity == t.max_arity);
  CHECK(back.generators == t.generators);
  CHECK(equal_upto(back, t, 3));
}

TEST_CASE("generator-only documents are closed on load") {
  Json doc;
  doc["carrier"] = 2;
  doc["max_arity"] = 2;
  doc["generators"] = Json::array({op_to_json(kOr)});
  const Theory t = theory_from_json(doc);
  CHECK(t.arity_counts() == std::vector<std::size_t>{0, 1, 3});
}

TEST_CASE("slice documents that are not clones are rejected") {
  const Theory t = clone_generate({kOr}, 2, 2);
  Json doc = theory_to_json(t);
  // drop the or operation from the binary slice, leaving generators dangling
  auto& binaries = doc["ops_by_arity"][2];
  binaries.erase(binaries.size() - 1);
  CHECK_THROWS_AS(theory_from_json(doc), ParseError);
}

TEST_CASE("builtin theory references") {
  const Theory m = builtin_theory("mat:bool2", 3);
  CHECK(m.arity_counts() == std::vector<std::size_t>{1, 2, 4, 8});
  CHECK(equal_upto(m, mat_theory(builtin_rig("bool2"), 3), 3));
  CHECK(builtin_theory("projections:2", 2).arity_counts() ==
        std::vector<std::size_t>{0, 1, 2});
  CHECK(builtin_theory("full:2", 2).arity_counts() == std::vector<std::size_t>{2, 4, 16});
  CHECK(builtin_theory("mat_aff:bool2", 3).arity_counts() ==
        std::vector<std::size_t>{0, 1, 3, 7});
  CHECK(builtin_theory("pointed:bool2", 3).arity_counts() ==
        std::vector<std::size_t>{2, 3, 5, 9});
  CHECK_THROWS_AS(builtin_theory("mystery:2", 2), ParseError);
  CHECK_THROWS_AS(builtin_theory("full", 2), ParseError);
  CHECK_THROWS_AS(builtin_theory("mat:unknown_rig", 2), ParseError);
}

TEST_CASE("theory documents may name builtins directly") {
  Json doc;
  doc["builtin"] = "mat:bool2";
  doc["max_arity"] = 2;
  const Theory t = theory_from_json(doc);
  CHECK(t.arity_counts() == std::vector<std::size_t>{1, 2, 4});
}

TEST_CASE("rig and group documents round-trip") {
  for (const std::string& name : builtin_rig_names()) {
    CAPTURE(name);
    const Rig r = builtin_rig(name);
    // emission fills in default labels, so compare the structure and then
    // require the labeled form to round-trip exactly
    const Rig back = rig_from_json(rig_to_json(r));
    CHECK(back.size == r.size);
    CHECK(back.add == r.add);
    CHECK(back.mul == r.mul);
    CHECK(back.zero == r.zero);
    CHECK(back.one == r.one);
    CHECK(rig_from_json(rig_to_json(back)) == back);
  }
  for (const std::string& name : builtin_group_names()) {
    CAPTURE(name);
    const FinAbGroup g = builtin_group(name);
    CHECK(group_from_json(group_to_json(g)) == g);
  }
  CHECK(rig_from_ref("Z4").size == 4);
  CHECK(rig_from_ref("rig:bool2").size == 2);
  CHECK(rig_from_ref("ring:Z3").size == 3);
  CHECK(group_from_ref("group:Z2xZ2").size == 4);
  CHECK_THROWS_AS(rig_from_ref("Z9"), ParseError);
  CHECK_THROWS_AS(group_from_ref("K4"), ParseError);
}

TEST_CASE("module documents round-trip") {
  const EndRing er = end_ring(builtin_group("Z2xZ2"));
  ModuleAction natural;
  natural.ring = er.ring;
  natural.group = builtin_group("Z2xZ2");
  for (const Endo& e : er.elements) natural.action.push_back(e);
  const ModuleAction back = action_from_json(action_to_json(natural));
  CHECK(back.ring == natural.ring);
  CHECK(back.group == natural.group);
  CHECK(back.action == natural.action);

  Json corrupt = action_to_json(natural);
  corrupt["action"][1] = corrupt["action"][0];
  CHECK_THROWS_AS(action_from_json(corrupt), ParseError);
}

TEST_CASE("value documents round-trip and validate anchors") {
  const Theory t = mat_theory(builtin_rig("bool2"), 3);
  const FreeElement e = canonicalize(t, kOr, {0, 2}, 3);
  CHECK(element_from_json(element_to_json(e)) == e);

  Json doc = element_to_json(e);
  doc["anchor"][0] = 9;
  CHECK_THROWS_AS(element_from_json(doc), ParseError);
  doc["anchor"] = Json::array({0});
  CHECK_THROWS_AS(element_from_json(doc), ParseError);  // anchor shorter than arity
}

TEST_CASE("files that are not json are parse errors") {
  CHECK_THROWS_AS(load_json_file("/nonexistent/path.json"), ParseError);
}
