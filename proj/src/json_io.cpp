#include "clones/json_io.hpp"

#include <algorithm>
#include <fstream>

#include "clones/errors.hpp"

namespace clones {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw ParseError(msg); }

void require(bool ok, const std::string& msg) {
  if (!ok) fail(msg);
}

int get_int(const Json& doc, const char* field) {
  require(doc.contains(field), std::string("missing field \"") + field + "\"");
  const Json& v = doc.at(field);
  require(v.is_number_integer(), std::string("field \"") + field + "\" must be an integer");
  return v.get<int>();
}

std::vector<int> int_list(const Json& v, const char* what) {
  require(v.is_array(), std::string(what) + " must be an array");
  std::vector<int> out;
  out.reserve(v.size());
  for (const Json& e : v) {
    require(e.is_number_integer(), std::string(what) + " entries must be integers");
    out.push_back(e.get<int>());
  }
  return out;
}

std::vector<std::vector<int>> int_table(const Json& v, const char* what) {
  require(v.is_array(), std::string(what) + " must be an array of rows");
  std::vector<std::vector<int>> out;
  out.reserve(v.size());
  for (const Json& row : v) out.push_back(int_list(row, what));
  return out;
}

// Labels from an "elements" field that may be a count or a label list.
std::pair<int, std::vector<std::string>> elements_field(const Json& v) {
  if (v.is_number_integer()) return {v.get<int>(), {}};
  require(v.is_array(), "\"elements\" must be a label list or a count");
  std::vector<std::string> labels;
  for (const Json& e : v) {
    require(e.is_string(), "\"elements\" entries must be strings");
    labels.push_back(e.get<std::string>());
  }
  return {static_cast<int>(labels.size()), labels};
}

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> out(n);
  for (int i = 0; i < n; ++i) out[i] = std::to_string(i);
  return out;
}

// The unique s >= 1 with s^arity == len, or 0 when none exists.
int carrier_from_length(int arity, std::size_t len) {
  for (int s = 1; s <= static_cast<int>(len); ++s) {
    unsigned long long p = 0;
    if (!checked_pow(static_cast<unsigned long long>(s), static_cast<unsigned long long>(arity),
                     p))
      return 0;
    if (p == len) return s;
    if (p > len) return 0;
  }
  return 0;
}

}  // namespace

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open file: " + path);
  Json doc = Json::parse(in, nullptr, false);
  if (doc.is_discarded()) fail("invalid JSON in file: " + path);
  return doc;
}

Json op_to_json(const OpTable& op) {
  return Json{{"arity", op.arity}, {"carrier", op.carrier}, {"table", op.table}};
}

OpTable op_from_json(const Json& doc, int carrier_hint) {
  require(doc.is_object(), "operation document must be an object");
  OpTable op;
  op.arity = get_int(doc, "arity");
  require(doc.contains("table"), "missing field \"table\"");
  op.table = int_list(doc.at("table"), "\"table\"");
  if (doc.contains("carrier")) {
    op.carrier = get_int(doc, "carrier");
  } else if (carrier_hint > 0) {
    op.carrier = carrier_hint;
  } else if (op.arity >= 1) {
    op.carrier = carrier_from_length(op.arity, op.table.size());
    require(op.carrier > 0, "table length is not a perfect power matching the arity");
  } else {
    require(op.table.size() == 1, "nullary operation must have a one-entry table");
    op.carrier = op.table[0] + 1;
  }
  try {
    op.validate();
  } catch (const std::invalid_argument& e) {
    fail(std::string("invalid operation document: ") + e.what());
  }
  return op;
}

Json theory_to_json(const Theory& t) {
  Json gens = Json::array();
  for (const OpTable& g : t.generators) gens.push_back(op_to_json(g));
  Json slices = Json::array();
  for (int n = 0; n <= t.max_arity; ++n) {
    Json slice = Json::array();
    for (const OpTable& op : t.slice(n)) slice.push_back(op_to_json(op));
    slices.push_back(std::move(slice));
  }
  return Json{{"carrier", t.carrier},
              {"max_arity", t.max_arity},
              {"generators", std::move(gens)},
              {"ops_by_arity", std::move(slices)}};
}

Theory theory_from_json(const Json& doc, std::size_t cap) {
  require(doc.is_object(), "theory document must be an object");
  if (doc.contains("builtin")) {
    const Json& b = doc.at("builtin");
    require(b.is_string(), "\"builtin\" must be a string");
    int max_arity = doc.contains("max_arity") ? get_int(doc, "max_arity") : 3;
    return builtin_theory(b.get<std::string>(), max_arity, cap);
  }
  require(doc.contains("carrier"), "missing field \"carrier\"");
  const Json& c = doc.at("carrier");
  int carrier = 0;
  if (c.is_number_integer()) {
    carrier = c.get<int>();
  } else {
    carrier = elements_field(c).first;
  }
  require(carrier >= 1, "carrier must be positive");
  int max_arity = doc.contains("max_arity") ? get_int(doc, "max_arity") : 3;
  require(max_arity >= 0, "max_arity must be non-negative");

  std::vector<OpTable> generators;
  if (doc.contains("generators")) {
    const Json& g = doc.at("generators");
    require(g.is_array(), "\"generators\" must be an array");
    for (const Json& opdoc : g) generators.push_back(op_from_json(opdoc, carrier));
  }

  if (doc.contains("ops_by_arity")) {
    const Json& slices = doc.at("ops_by_arity");
    require(slices.is_array(), "\"ops_by_arity\" must be an array of slices");
    require(static_cast<int>(slices.size()) == max_arity + 1,
            "\"ops_by_arity\" must list one slice per arity from 0 to max_arity");
    Theory t;
    t.carrier = carrier;
    t.max_arity = max_arity;
    t.generators = std::move(generators);
    t.ops_by_arity.resize(max_arity + 1);
    for (int n = 0; n <= max_arity; ++n) {
      const Json& slice = slices.at(n);
      require(slice.is_array(), "each slice must be an array of operations");
      for (const Json& opdoc : slice) {
        OpTable op = op_from_json(opdoc, carrier);
        require(op.arity == n, "operation listed under the wrong arity");
        t.ops_by_arity[n].push_back(std::move(op));
      }
      std::sort(t.ops_by_arity[n].begin(), t.ops_by_arity[n].end());
      t.ops_by_arity[n].erase(std::unique(t.ops_by_arity[n].begin(), t.ops_by_arity[n].end()),
                              t.ops_by_arity[n].end());
    }
    try {
      assert_clone(t);
    } catch (const std::logic_error& e) {
      fail(std::string("theory document is not a clone: ") + e.what());
    }
    return t;
  }
  return clone_generate(generators, carrier, max_arity, cap);
}

Json rig_to_json(const Rig& r) {
  return Json{{"elements", r.labels.empty() ? default_labels(r.size) : r.labels},
              {"add", r.add},
              {"mul", r.mul},
              {"zero", r.zero},
              {"one", r.one}};
}

Rig rig_from_json(const Json& doc) {
  require(doc.is_object(), "rig document must be an object");
  if (doc.contains("builtin")) {
    const Json& b = doc.at("builtin");
    require(b.is_string(), "\"builtin\" must be a string");
    return rig_from_ref(b.get<std::string>());
  }
  require(doc.contains("elements"), "missing field \"elements\"");
  auto [size, labels] = elements_field(doc.at("elements"));
  Rig r;
  r.size = size;
  r.labels = std::move(labels);
  require(doc.contains("add") && doc.contains("mul"), "rig needs \"add\" and \"mul\" tables");
  r.add = int_table(doc.at("add"), "\"add\"");
  r.mul = int_table(doc.at("mul"), "\"mul\"");
  r.zero = get_int(doc, "zero");
  r.one = get_int(doc, "one");
  try {
    validate_rig(r);
  } catch (const std::invalid_argument& e) {
    fail(std::string("invalid rig document: ") + e.what());
  }
  return r;
}

Json group_to_json(const FinAbGroup& g) {
  return Json{{"elements", g.labels.empty() ? default_labels(g.size) : g.labels},
              {"add", g.add},
              {"zero", g.zero}};
}

FinAbGroup group_from_json(const Json& doc) {
  require(doc.is_object(), "group document must be an object");
  if (doc.contains("builtin")) {
    const Json& b = doc.at("builtin");
    require(b.is_string(), "\"builtin\" must be a string");
    return group_from_ref(b.get<std::string>());
  }
  require(doc.contains("elements"), "missing field \"elements\"");
  auto [size, labels] = elements_field(doc.at("elements"));
  FinAbGroup g;
  g.size = size;
  g.labels = std::move(labels);
  require(doc.contains("add"), "missing field \"add\"");
  g.add = int_table(doc.at("add"), "\"add\"");
  g.zero = get_int(doc, "zero");
  try {
    validate_group(g);
  } catch (const std::invalid_argument& e) {
    fail(std::string("invalid group document: ") + e.what());
  }
  return g;
}

Json action_to_json(const ModuleAction& a) {
  return Json{{"ring", rig_to_json(a.ring)},
              {"group", group_to_json(a.group)},
              {"action", a.action}};
}

ModuleAction action_from_json(const Json& doc) {
  require(doc.is_object(), "module document must be an object");
  require(doc.contains("ring") && doc.contains("group") && doc.contains("action"),
          "module needs \"ring\", \"group\", and \"action\"");
  ModuleAction a;
  a.ring = rig_from_json(doc.at("ring"));
  a.group = group_from_json(doc.at("group"));
  auto rows = int_table(doc.at("action"), "\"action\"");
  a.action.assign(rows.begin(), rows.end());
  try {
    validate_action(a);
  } catch (const std::invalid_argument& e) {
    fail(std::string("invalid module document: ") + e.what());
  }
  return a;
}

Json element_to_json(const FreeElement& e) {
  return Json{{"op", op_to_json(e.op)}, {"anchor", e.anchor}, {"set_size", e.set_size}};
}

FreeElement element_from_json(const Json& doc) {
  require(doc.is_object(), "value document must be an object");
  require(doc.contains("op"), "missing field \"op\"");
  FreeElement e;
  e.op = op_from_json(doc.at("op"));
  require(doc.contains("anchor"), "missing field \"anchor\"");
  e.anchor = int_list(doc.at("anchor"), "\"anchor\"");
  e.set_size = get_int(doc, "set_size");
  require(static_cast<int>(e.anchor.size()) == e.op.arity,
          "anchor length must equal the operation arity");
  for (int x : e.anchor)
    require(x >= 0 && x < e.set_size, "anchor entries must lie in the set");
  return e;
}

namespace {

std::pair<std::string, std::string> split_ref(const std::string& ref) {
  auto pos = ref.find(':');
  if (pos == std::string::npos) return {"", ref};
  return {ref.substr(0, pos), ref.substr(pos + 1)};
}

int parse_count(const std::string& s, const std::string& ref) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size() || v < 1) fail("builtin reference needs a positive size: " + ref);
    return v;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    fail("builtin reference needs a positive size: " + ref);
  }
}

}  // namespace

Theory builtin_theory(const std::string& ref, int max_arity, std::size_t cap) {
  auto [kind, name] = split_ref(ref);
  require(!kind.empty(), "builtin theory reference must look like kind:name (got \"" + ref +
                             "\"); kinds: full, projections, mat, mat_aff, pointed");
  try {
    if (kind == "full") return full_theory(parse_count(name, ref), max_arity, cap);
    if (kind == "projections") return projections_theory(parse_count(name, ref), max_arity);
    if (kind == "mat") return mat_theory(builtin_rig(name), max_arity);
    if (kind == "mat_aff") return mat_aff_theory(builtin_rig(name), max_arity);
    if (kind == "pointed" || kind == "pointed_mod")
      return pointed_mod_theory(builtin_rig(name), max_arity);
  } catch (const std::invalid_argument& e) {
    fail(std::string("bad builtin theory reference \"") + ref + "\": " + e.what());
  }
  fail("unknown builtin theory kind \"" + kind + "\" in \"" + ref + "\"");
}

Rig rig_from_ref(const std::string& ref) {
  auto [kind, name] = split_ref(ref);
  require(kind.empty() || kind == "ring" || kind == "rig",
          "expected a rig reference, got \"" + ref + "\"");
  try {
    return builtin_rig(name);
  } catch (const std::invalid_argument& e) {
    fail(std::string(e.what()));
  }
}

FinAbGroup group_from_ref(const std::string& ref) {
  auto [kind, name] = split_ref(ref);
  require(kind.empty() || kind == "group", "expected a group reference, got \"" + ref + "\"");
  try {
    return builtin_group(name);
  } catch (const std::invalid_argument& e) {
    fail(std::string(e.what()));
  }
}

}  // namespace clones
