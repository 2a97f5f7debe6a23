#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "clones/monad.hpp"
#include "clones/rings.hpp"
#include "clones/rig_theories.hpp"
#include "clones/theory.hpp"

namespace clones {

using Json = nlohmann::json;

/// Malformed document or file: wrong shape, missing field, failed invariant.
/// The CLI maps this to the usage/parse exit code.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads and parses a JSON file; throws ParseError with the path on failure.
Json load_json_file(const std::string& path);

/// Operation document: {"arity": n, "carrier": s, "table": [ints]}.
/// "carrier" may be omitted on load: for arity >= 1 it is recovered from the
/// table length (the unique s with s^n entries); for a bare nullary document
/// it defaults to the smallest carrier containing the value.
Json op_to_json(const OpTable& op);
OpTable op_from_json(const Json& doc, int carrier_hint = 0);

/// Theory document: {"carrier": s or label list, "max_arity": N,
/// "generators": [op docs], "ops_by_arity": [[op docs] per arity]} or
/// {"builtin": "kind:name", "max_arity": N}. When "ops_by_arity" is absent
/// the slices are regenerated from the generators.
Json theory_to_json(const Theory& t);
Theory theory_from_json(const Json& doc, std::size_t cap = kDefaultEnumerationCap);

/// Rig document: {"elements": [labels], "add": [[...]], "mul": [[...]],
/// "zero": i, "one": j} or {"builtin": name}.
Json rig_to_json(const Rig& r);
Rig rig_from_json(const Json& doc);

/// Group document: {"elements": [labels], "add": [[...]], "zero": i} or
/// {"builtin": name}.
Json group_to_json(const FinAbGroup& g);
FinAbGroup group_from_json(const Json& doc);

/// Module document: {"ring": rig doc, "group": group doc,
/// "action": [[...] per ring element]}.
Json action_to_json(const ModuleAction& a);
ModuleAction action_from_json(const Json& doc);

/// Free-algebra value document: {"op": op doc, "anchor": [ints],
/// "set_size": n}.
Json element_to_json(const FreeElement& e);
FreeElement element_from_json(const Json& doc);

/// Builtin theory registry, addressed as "kind:name":
///   full:<s>, projections:<s>, mat:<rig>, mat_aff:<rig>, pointed:<rig>
/// (alias pointed_mod:<rig>), where <rig> is a builtin rig name.
Theory builtin_theory(const std::string& ref, int max_arity,
                      std::size_t cap = kDefaultEnumerationCap);

/// Resolves a rig reference: a builtin name, optionally prefixed "ring:" or
/// "rig:".
Rig rig_from_ref(const std::string& ref);

/// Resolves a group reference: a builtin name, optionally prefixed "group:".
FinAbGroup group_from_ref(const std::string& ref);

}  // namespace clones
