#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "clones/commutant.hpp"
#include "clones/errors.hpp"
#include "clones/json_io.hpp"
#include "clones/monad.hpp"
#include "clones/rig_theories.hpp"
#include "clones/rings.hpp"
#include "clones/verification.hpp"

namespace {

using namespace clones;

std::size_t env_default_cap() {
  const char* env = std::getenv("CLONE_COMMUTANT_CAP");
  if (!env) return kDefaultEnumerationCap;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used == std::string(env).size() && v >= 1) return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
  }
  throw ParseError("CLONE_COMMUTANT_CAP must be a positive integer");
}

SliceStrategy parse_strategy(const std::string& s) {
  if (s == "auto") return SliceStrategy::automatic;
  if (s == "exhaustive") return SliceStrategy::exhaustive;
  if (s == "backtracking") return SliceStrategy::backtracking;
  throw ParseError("unknown strategy \"" + s + "\" (use auto, exhaustive, or backtracking)");
}

// ---- rendering -----------------------------------------------------------

void print_op_text(std::ostream& os, const OpTable& op) {
  os << "arity: " << op.arity << "\ncarrier: " << op.carrier << "\ntable:";
  for (int v : op.table) os << " " << v;
  os << "\n";
}

void print_tuple_text(std::ostream& os, const OpTuple& tuple) {
  os << "in_arity: " << tuple.in_arity << "\ncarrier: " << tuple.carrier
     << "\ncomponents: " << tuple.components.size() << "\n";
  for (const OpTable& op : tuple.components) {
    os << "  table:";
    for (int v : op.table) os << " " << v;
    os << "\n";
  }
}

void print_theory_text(std::ostream& os, const Theory& t) {
  os << "carrier: " << t.carrier << "\nmax_arity: " << t.max_arity << "\n";
  const auto counts = t.arity_counts();
  for (std::size_t n = 0; n < counts.size(); ++n)
    os << "arity " << n << ": " << counts[n] << (counts[n] == 1 ? " op" : " ops") << "\n";
}

void print_element_text(std::ostream& os, const FreeElement& e) {
  os << "set_size: " << e.set_size << "\nanchor:";
  for (int x : e.anchor) os << " " << x;
  os << "\n";
  print_op_text(os, e.op);
}

Json tuple_to_json(const OpTuple& tuple) {
  Json components = Json::array();
  for (const OpTable& op : tuple.components) components.push_back(op_to_json(op));
  return Json{{"in_arity", tuple.in_arity},
              {"carrier", tuple.carrier},
              {"components", std::move(components)}};
}

Json counts_json(const Theory& t) {
  Json counts = Json::array();
  for (std::size_t c : t.arity_counts()) counts.push_back(c);
  return counts;
}

// Decodes the first argument grid on which the two products differ.
std::string witness_text(const OpTable& mu, const OpTable& nu) {
  const OpTable k1 = kron1(mu, nu);
  const OpTable k2 = kron2(mu, nu);
  for (std::size_t t = 0; t < k1.table.size(); ++t) {
    if (k1.table[t] == k2.table[t]) continue;
    std::ostringstream os;
    const std::vector<int> x = decode_index(t, mu.arity * nu.arity, mu.carrier);
    os << "witness matrix (" << mu.arity << " rows x " << nu.arity << " cols):\n";
    for (int i = 0; i < mu.arity; ++i) {
      for (int l = 0; l < nu.arity; ++l)
        os << (l ? " " : "") << x[static_cast<std::size_t>(i * nu.arity + l)];
      os << "\n";
    }
    os << "columns-then-outer gives " << k1.table[t] << ", rows-then-outer gives " << k2.table[t]
       << "\n";
    return os.str();
  }
  return "";
}

Json witness_json(const OpTable& mu, const OpTable& nu) {
  const OpTable k1 = kron1(mu, nu);
  const OpTable k2 = kron2(mu, nu);
  for (std::size_t t = 0; t < k1.table.size(); ++t) {
    if (k1.table[t] == k2.table[t]) continue;
    const std::vector<int> x = decode_index(t, mu.arity * nu.arity, mu.carrier);
    Json rows = Json::array();
    for (int i = 0; i < mu.arity; ++i) {
      Json row = Json::array();
      for (int l = 0; l < nu.arity; ++l) row.push_back(x[static_cast<std::size_t>(i * nu.arity + l)]);
      rows.push_back(std::move(row));
    }
    return Json{{"matrix", std::move(rows)}, {"first", k1.table[t]}, {"second", k2.table[t]}};
  }
  return Json();
}

// ---- input helpers --------------------------------------------------------

OpTable load_op(const std::string& path) { return op_from_json(load_json_file(path)); }

OpTuple load_tuple(const std::string& path) {
  const Json doc = load_json_file(path);
  if (!doc.is_array() || doc.empty())
    throw ParseError("an operation tuple document must be a non-empty array of operations");
  OpTuple tuple;
  for (const Json& opdoc : doc) tuple.components.push_back(op_from_json(opdoc));
  tuple.in_arity = tuple.components.front().arity;
  tuple.carrier = tuple.components.front().carrier;
  try {
    tuple.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid operation tuple: ") + e.what());
  }
  return tuple;
}

Theory cli_theory(const std::string& file, const std::string& builtin, int arity,
                  std::size_t cap) {
  if (file.empty() == builtin.empty())
    throw ParseError("provide exactly one theory: a document path or --builtin kind:name");
  if (!builtin.empty()) return builtin_theory(builtin, arity, cap);
  return theory_from_json(load_json_file(file), cap);
}

// A path when the file exists, otherwise a builtin reference.
Theory theory_from_path_or_ref(const std::string& value, int arity, std::size_t cap) {
  if (std::filesystem::exists(value)) return theory_from_json(load_json_file(value), cap);
  return builtin_theory(value, arity, cap);
}

Rig cli_rig(const std::string& file, const std::string& builtin) {
  if (file.empty() == builtin.empty())
    throw ParseError("provide exactly one ring: a document path or --builtin name");
  if (!builtin.empty()) return rig_from_ref(builtin);
  return rig_from_json(load_json_file(file));
}

FinAbGroup cli_group(const std::string& file, const std::string& builtin) {
  if (file.empty() == builtin.empty())
    throw ParseError("provide exactly one group: a document path or --builtin name");
  if (!builtin.empty()) return group_from_ref(builtin);
  return group_from_json(load_json_file(file));
}

std::vector<FreeElement> load_elements(const std::string& path) {
  const Json doc = load_json_file(path);
  if (!doc.is_array()) throw ParseError("expected an array of value documents");
  std::vector<FreeElement> out;
  for (const Json& e : doc) out.push_back(element_from_json(e));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"operations, clones, commutants, and their ring and monad views"};
  app.require_subcommand(1);

  std::size_t cap = 0;
  try {
    cap = env_default_cap();
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  int threads = 1;
  std::string strategy = "auto";
  bool as_json = false;
  app.add_option("--cap", cap, "enumeration cap on full slice scans")->capture_default_str();
  app.add_option("--threads", threads, "worker threads for exhaustive scans")
      ->check(CLI::Range(1, 64));
  app.add_option("--strategy", strategy, "commutant slice strategy")
      ->check(CLI::IsMember({"auto", "exhaustive", "backtracking"}));
  app.add_flag("--json", as_json, "emit JSON instead of text");
  // let the global flags above appear after a subcommand name
  app.fallthrough();

  // kron -------------------------------------------------------------------
  auto* kron_cmd = app.add_subcommand("kron", "Kronecker product of two operations");
  std::string kron_a, kron_b;
  bool kron_second = false, kron_multi = false, kron_both = false;
  kron_cmd->add_option("left", kron_a, "operation document")->required();
  kron_cmd->add_option("right", kron_b, "operation document")->required();
  kron_cmd->add_flag("--second", kron_second, "compute the second product instead of the first");
  kron_cmd->add_flag("--multi", kron_multi, "treat the documents as operation tuples");
  kron_cmd->add_flag("--both", kron_both, "also report whether the pair commutes");

  // commutes ---------------------------------------------------------------
  auto* commutes_cmd = app.add_subcommand("commutes", "do two operations commute?");
  std::string commutes_a, commutes_b;
  commutes_cmd->add_option("first", commutes_a, "operation document")->required();
  commutes_cmd->add_option("second", commutes_b, "operation document")->required();

  // commutant / center -----------------------------------------------------
  auto* commutant_cmd = app.add_subcommand("commutant", "commutant clone of a theory");
  std::string commutant_file, commutant_builtin, commutant_ambient;
  int commutant_arity = 3;
  commutant_cmd->add_option("theory", commutant_file, "theory document");
  commutant_cmd->add_option("--builtin", commutant_builtin, "builtin theory kind:name");
  commutant_cmd->add_option("--arity", commutant_arity, "arity bound")->check(CLI::Range(0, 12));
  commutant_cmd->add_option("--ambient", commutant_ambient,
                            "ambient theory (document path or builtin reference)");

  auto* center_cmd = app.add_subcommand("center", "center of a theory");
  std::string center_file, center_builtin;
  int center_arity = 3;
  center_cmd->add_option("theory", center_file, "theory document");
  center_cmd->add_option("--builtin", center_builtin, "builtin theory kind:name");
  center_cmd->add_option("--arity", center_arity, "arity bound")->check(CLI::Range(0, 12));

  // predicates ---------------------------------------------------------------
  auto* iscomm_cmd = app.add_subcommand("is-commutative", "is the theory commutative?");
  std::string iscomm_file, iscomm_builtin;
  int iscomm_arity = 3;
  bool iscomm_all_pairs = false;
  iscomm_cmd->add_option("theory", iscomm_file, "theory document");
  iscomm_cmd->add_option("--builtin", iscomm_builtin, "builtin theory kind:name");
  iscomm_cmd->add_option("--arity", iscomm_arity, "arity bound")->check(CLI::Range(0, 12));
  iscomm_cmd->add_flag("--all-pairs", iscomm_all_pairs,
                       "check every pair of member operations, not only generators");

  auto* issat_cmd = app.add_subcommand("is-saturated", "does the double commutant return the theory?");
  std::string issat_file, issat_builtin, issat_ambient;
  int issat_arity = 3;
  issat_cmd->add_option("theory", issat_file, "theory document");
  issat_cmd->add_option("--builtin", issat_builtin, "builtin theory kind:name");
  issat_cmd->add_option("--arity", issat_arity, "arity bound")->check(CLI::Range(0, 12));
  issat_cmd->add_option("--ambient", issat_ambient, "ambient theory");

  auto* isbal_cmd = app.add_subcommand("is-balanced", "does the commutant equal the theory?");
  std::string isbal_file, isbal_builtin, isbal_ambient;
  int isbal_arity = 3;
  isbal_cmd->add_option("theory", isbal_file, "theory document");
  isbal_cmd->add_option("--builtin", isbal_builtin, "builtin theory kind:name");
  isbal_cmd->add_option("--arity", isbal_arity, "arity bound")->check(CLI::Range(0, 12));
  isbal_cmd->add_option("--ambient", isbal_ambient, "ambient theory");

  // monad --------------------------------------------------------------------
  auto* monad_cmd = app.add_subcommand("monad", "free-algebra view of a theory");
  monad_cmd->require_subcommand(1);
  std::string monad_file, monad_builtin;
  int monad_arity = 3;
  monad_cmd->add_option("--theory", monad_file, "theory document");
  monad_cmd->add_option("--builtin", monad_builtin, "builtin theory kind:name");
  monad_cmd->add_option("--arity", monad_arity, "arity bound")->check(CLI::Range(0, 12));

  auto* monad_apply_cmd = monad_cmd->add_subcommand("apply", "all values on a finite set");
  int monad_set = 2;
  monad_apply_cmd->add_option("--set-size", monad_set, "size of the set")->check(CLI::Range(0, 12));

  auto* monad_unit_cmd = monad_cmd->add_subcommand("unit", "the value of one point");
  int unit_set = 2, unit_point = 0;
  monad_unit_cmd->add_option("--set-size", unit_set, "size of the set")->check(CLI::Range(1, 12));
  monad_unit_cmd->add_option("--point", unit_point, "the point")->check(CLI::Range(0, 11));

  auto* monad_mult_cmd = monad_cmd->add_subcommand("mult", "substitute values into an operation");
  std::string mult_outer, mult_args;
  monad_mult_cmd->add_option("--outer", mult_outer, "outer operation document")->required();
  monad_mult_cmd->add_option("--args", mult_args, "array of value documents")->required();

  auto* monad_kock_cmd = monad_cmd->add_subcommand("kock", "Kronecker product of two values");
  std::string kock_a, kock_b;
  bool kock_second = false;
  monad_kock_cmd->add_option("--first", kock_a, "value document")->required();
  monad_kock_cmd->add_option("--with", kock_b, "value document")->required();
  monad_kock_cmd->add_flag("--second", kock_second, "use the second product");

  auto* monad_check_cmd = monad_cmd->add_subcommand("check", "commutation through the monad view");
  std::string monad_other;
  int monad_bound = 2;
  monad_check_cmd->add_option("--with", monad_other,
                              "second theory (document path or builtin reference); "
                              "defaults to the first theory");
  monad_check_cmd->add_option("--bound", monad_bound, "set-size bound")->check(CLI::Range(0, 12));

  // ring ---------------------------------------------------------------------
  auto* ring_cmd = app.add_subcommand("ring", "endomorphism rings and centralizers");
  ring_cmd->require_subcommand(1);

  auto* ring_end_cmd = ring_cmd->add_subcommand("end", "endomorphism ring of an abelian group");
  std::string end_group_file, end_group_builtin;
  ring_end_cmd->add_option("group", end_group_file, "group document");
  ring_end_cmd->add_option("--builtin", end_group_builtin, "builtin group name");

  auto* ring_cen_cmd = ring_cmd->add_subcommand("centralizer", "centralizer of a subset");
  std::string cen_ring_file, cen_ring_builtin;
  std::vector<int> cen_subset;
  ring_cen_cmd->add_option("ring", cen_ring_file, "ring document");
  ring_cen_cmd->add_option("--builtin", cen_ring_builtin, "builtin ring name");
  ring_cen_cmd->add_option("--subset", cen_subset, "element indices")->delimiter(',');

  auto* ring_mod_cmd = ring_cmd->add_subcommand("module-commutant",
                                                "linear self-maps of a module");
  std::string mod_action_file;
  ring_mod_cmd->add_option("module", mod_action_file, "module document")->required();

  auto* ring_double_cmd = ring_cmd->add_subcommand("double", "double centralizer of a module");
  std::string double_action_file;
  ring_double_cmd->add_option("module", double_action_file, "module document")->required();

  auto* ring_reg_cmd = ring_cmd->add_subcommand(
      "regular-opposite", "is the regular commutant the opposite ring?");
  std::string reg_ring_file, reg_ring_builtin;
  ring_reg_cmd->add_option("ring", reg_ring_file, "ring document");
  ring_reg_cmd->add_option("--builtin", reg_ring_builtin, "builtin ring name");

  auto* ring_max_cmd = ring_cmd->add_subcommand("maximal",
                                                "is a subring maximal commutative?");
  std::string max_ring_file, max_ring_builtin;
  std::vector<int> max_subset;
  ring_max_cmd->add_option("ring", max_ring_file, "ring document");
  ring_max_cmd->add_option("--builtin", max_ring_builtin, "builtin ring name");
  ring_max_cmd->add_option("--subset", max_subset, "element indices")->delimiter(',')->required();

  // verify-examples ------------------------------------------------------------
  auto* verify_cmd = app.add_subcommand("verify-examples", "run the built-in example checks");
  std::string verify_filter, verify_corrupt;
  verify_cmd->add_option("--filter", verify_filter, "run only checks whose name contains this");
  verify_cmd->add_option("--corrupt-builtin", verify_corrupt,
                         "test mode: substitute a wrong rig for this builtin so dependent "
                         "checks fail visibly");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e) ? 2 : 0;
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e) ? 2 : 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    CommutantOptions copts;
    copts.cap = cap;
    copts.threads = threads;
    copts.strategy = parse_strategy(strategy);

    if (app.got_subcommand(kron_cmd)) {
      if (kron_multi) {
        const OpTuple a = load_tuple(kron_a);
        const OpTuple b = load_tuple(kron_b);
        const OpTuple product = kron_second ? kron2_multi(a, b) : kron1_multi(a, b);
        const bool agree = kron1_multi(a, b) == kron2_multi(a, b);
        if (as_json) {
          Json out = tuple_to_json(product);
          if (kron_both) out["commute"] = agree;
          std::cout << out.dump() << "\n";
        } else {
          print_tuple_text(std::cout, product);
          if (kron_both) std::cout << "commute: " << (agree ? "true" : "false") << "\n";
        }
        return 0;
      }
      const OpTable a = load_op(kron_a);
      const OpTable b = load_op(kron_b);
      const OpTable product = kron_second ? kron2(a, b) : kron1(a, b);
      const bool agree = commutes(a, b);
      if (as_json) {
        Json out = op_to_json(product);
        if (kron_both) {
          out["commute"] = agree;
          if (!agree) out["witness"] = witness_json(a, b);
        }
        std::cout << out.dump() << "\n";
      } else {
        print_op_text(std::cout, product);
        if (kron_both) {
          std::cout << "commute: " << (agree ? "true" : "false") << "\n";
          if (!agree) std::cout << witness_text(a, b);
        }
      }
      return 0;
    }

    if (app.got_subcommand(commutes_cmd)) {
      const OpTable a = load_op(commutes_a);
      const OpTable b = load_op(commutes_b);
      const bool agree = commutes(a, b);
      if (as_json) {
        Json out{{"commute", agree}};
        if (!agree) out["witness"] = witness_json(a, b);
        std::cout << out.dump() << "\n";
      } else {
        std::cout << "commute: " << (agree ? "true" : "false") << "\n";
        if (!agree) std::cout << witness_text(a, b);
      }
      return agree ? 0 : 1;
    }

    if (app.got_subcommand(commutant_cmd)) {
      const Theory t = cli_theory(commutant_file, commutant_builtin, commutant_arity, cap);
      Theory ambient;
      const Theory* ambient_ptr = nullptr;
      if (!commutant_ambient.empty()) {
        ambient = theory_from_path_or_ref(commutant_ambient, commutant_arity, cap);
        ambient_ptr = &ambient;
      }
      const Theory c =
          commutant(generating_ops(t), t.carrier, commutant_arity, ambient_ptr, copts);
      if (as_json) {
        Json out = theory_to_json(c);
        out["arity_counts"] = counts_json(c);
        std::cout << out.dump() << "\n";
      } else {
        print_theory_text(std::cout, c);
      }
      return 0;
    }

    if (app.got_subcommand(center_cmd)) {
      const Theory t = cli_theory(center_file, center_builtin, center_arity, cap);
      const Theory c = center(t);
      if (as_json) {
        Json out = theory_to_json(c);
        out["arity_counts"] = counts_json(c);
        std::cout << out.dump() << "\n";
      } else {
        print_theory_text(std::cout, c);
      }
      return 0;
    }

    if (app.got_subcommand(iscomm_cmd)) {
      const Theory t = cli_theory(iscomm_file, iscomm_builtin, iscomm_arity, cap);
      const bool result = iscomm_all_pairs ? is_commutative_all_pairs(t) : is_commutative(t);
      if (as_json)
        std::cout << Json{{"result", result}}.dump() << "\n";
      else
        std::cout << (result ? "true" : "false") << "\n";
      return result ? 0 : 1;
    }

    if (app.got_subcommand(issat_cmd) || app.got_subcommand(isbal_cmd)) {
      const bool saturated = app.got_subcommand(issat_cmd);
      const std::string& file = saturated ? issat_file : isbal_file;
      const std::string& builtin = saturated ? issat_builtin : isbal_builtin;
      const std::string& ambient_ref = saturated ? issat_ambient : isbal_ambient;
      const int arity = saturated ? issat_arity : isbal_arity;
      const Theory t = cli_theory(file, builtin, arity, cap);
      Theory ambient;
      const Theory* ambient_ptr = nullptr;
      if (!ambient_ref.empty()) {
        ambient = theory_from_path_or_ref(ambient_ref, arity, cap);
        ambient_ptr = &ambient;
      }
      const bool result =
          saturated ? is_saturated(t, ambient_ptr, copts) : is_balanced(t, ambient_ptr, copts);
      if (as_json)
        std::cout << Json{{"result", result}}.dump() << "\n";
      else
        std::cout << (result ? "true" : "false") << "\n";
      return result ? 0 : 1;
    }

    if (app.got_subcommand(monad_cmd)) {
      const Theory t = cli_theory(monad_file, monad_builtin, monad_arity, cap);
      if (monad_cmd->got_subcommand(monad_apply_cmd)) {
        const std::vector<FreeElement> values = monad_apply(t, monad_set);
        if (as_json) {
          Json out = Json::array();
          for (const FreeElement& e : values) out.push_back(element_to_json(e));
          std::cout << out.dump() << "\n";
        } else {
          std::cout << "values: " << values.size() << "\n";
          for (const FreeElement& e : values) print_element_text(std::cout, e);
        }
        return 0;
      }
      if (monad_cmd->got_subcommand(monad_unit_cmd)) {
        const FreeElement e = unit(t, unit_set, unit_point);
        if (as_json)
          std::cout << element_to_json(e).dump() << "\n";
        else
          print_element_text(std::cout, e);
        return 0;
      }
      if (monad_cmd->got_subcommand(monad_mult_cmd)) {
        const OpTable outer = load_op(mult_outer);
        const std::vector<FreeElement> args = load_elements(mult_args);
        const FreeElement e = mult(t, outer, args);
        if (as_json)
          std::cout << element_to_json(e).dump() << "\n";
        else
          print_element_text(std::cout, e);
        return 0;
      }
      if (monad_cmd->got_subcommand(monad_kock_cmd)) {
        const FreeElement a = element_from_json(load_json_file(kock_a));
        const FreeElement b = element_from_json(load_json_file(kock_b));
        const FreeElement e = kock_second ? kock_kron2(t, a, b) : kock_kron1(t, a, b);
        if (as_json)
          std::cout << element_to_json(e).dump() << "\n";
        else
          print_element_text(std::cout, e);
        return 0;
      }
      // monad check
      bool result = false;
      if (monad_other.empty()) {
        result = monad_is_commutative(t, monad_bound);
      } else {
        const Theory other = theory_from_path_or_ref(monad_other, monad_arity, cap);
        result = monads_commute(t, other, monad_bound);
      }
      if (as_json)
        std::cout << Json{{"result", result}}.dump() << "\n";
      else
        std::cout << (result ? "true" : "false") << "\n";
      return result ? 0 : 1;
    }

    if (app.got_subcommand(ring_cmd)) {
      if (ring_cmd->got_subcommand(ring_end_cmd)) {
        const FinAbGroup g = cli_group(end_group_file, end_group_builtin);
        const EndRing er = end_ring(g);
        if (as_json) {
          Json endos = Json::array();
          for (const Endo& e : er.elements) endos.push_back(e);
          std::cout << Json{{"size", er.elements.size()},
                            {"ring", rig_to_json(er.ring)},
                            {"endomorphisms", std::move(endos)}}
                           .dump()
                    << "\n";
        } else {
          std::cout << "endomorphisms: " << er.elements.size() << "\nzero index: " << er.ring.zero
                    << "\none index: " << er.ring.one << "\n";
        }
        return 0;
      }
      if (ring_cmd->got_subcommand(ring_cen_cmd)) {
        const Rig r = cli_rig(cen_ring_file, cen_ring_builtin);
        const std::vector<int> cen = centralizer(r, cen_subset);
        if (as_json) {
          std::cout << Json{{"indices", cen},
                            {"size", cen.size()},
                            {"ring", rig_to_json(subring_rig(r, cen))}}
                           .dump()
                    << "\n";
        } else {
          std::cout << "centralizer size: " << cen.size() << "\nindices:";
          for (int i : cen) std::cout << " " << i;
          std::cout << "\n";
        }
        return 0;
      }
      if (ring_cmd->got_subcommand(ring_mod_cmd)) {
        const ModuleAction a = action_from_json(load_json_file(mod_action_file));
        const ModuleCommutant mc = module_commutant(a);
        if (as_json) {
          std::cout << Json{{"ambient_size", mc.ambient.elements.size()},
                            {"image", mc.image},
                            {"commutant", mc.commutant},
                            {"commutant_ring",
                             rig_to_json(subring_rig(mc.ambient.ring, mc.commutant))}}
                           .dump()
                    << "\n";
        } else {
          std::cout << "ambient endomorphisms: " << mc.ambient.elements.size()
                    << "\nimage size: " << mc.image.size()
                    << "\ncommutant size: " << mc.commutant.size() << "\ncommutant indices:";
          for (int i : mc.commutant) std::cout << " " << i;
          std::cout << "\n";
        }
        return 0;
      }
      if (ring_cmd->got_subcommand(ring_double_cmd)) {
        const ModuleAction a = action_from_json(load_json_file(double_action_file));
        const ModuleCommutant mc = module_commutant(a);
        const std::vector<int> dc = double_centralizer(mc);
        const bool property = (dc == mc.image) && action_is_faithful(a);
        if (as_json) {
          std::cout << Json{{"double_centralizer", dc},
                            {"image", mc.image},
                            {"property", property}}
                           .dump()
                    << "\n";
        } else {
          std::cout << "double centralizer size: " << dc.size()
                    << "\nimage size: " << mc.image.size()
                    << "\ndouble centralizer property: " << (property ? "true" : "false") << "\n";
        }
        return property ? 0 : 1;
      }
      if (ring_cmd->got_subcommand(ring_reg_cmd)) {
        const Rig r = cli_rig(reg_ring_file, reg_ring_builtin);
        const OppositeWitness w = regular_commutant_is_opposite(r);
        if (as_json) {
          std::cout << Json{{"holds", w.holds()},
                            {"centralizer_size", w.centralizer_size},
                            {"centralizer_is_right_multiplications",
                             w.centralizer_is_right_multiplications},
                            {"anti_isomorphism_valid", w.anti_isomorphism_valid}}
                           .dump()
                    << "\n";
        } else {
          std::cout << "regular commutant is the opposite ring: "
                    << (w.holds() ? "true" : "false")
                    << "\ncentralizer size: " << w.centralizer_size << "\n";
        }
        return w.holds() ? 0 : 1;
      }
      // ring maximal
      const Rig r = cli_rig(max_ring_file, max_ring_builtin);
      const bool self_cen = is_maximal_commutative(r, max_subset);
      const bool direct = is_maximal_commutative_direct(r, max_subset);
      if (as_json) {
        std::cout << Json{{"self_centralizing", self_cen}, {"direct_search", direct}}.dump()
                  << "\n";
      } else {
        std::cout << "self-centralizing: " << (self_cen ? "true" : "false")
                  << "\nmaximal by direct search: " << (direct ? "true" : "false") << "\n";
      }
      return (self_cen && direct) ? 0 : 1;
    }

    // verify-examples
    VerifyOptions vopts;
    vopts.filter = verify_filter;
    vopts.threads = threads;
    vopts.corrupt_builtin = verify_corrupt;
    const std::vector<CheckResult> results = run_example_checks(vopts);
    bool all_passed = true;
    for (const CheckResult& r : results) all_passed = all_passed && r.passed;
    if (as_json) {
      Json checks = Json::array();
      for (const CheckResult& r : results)
        checks.push_back(Json{{"name", r.name},
                              {"status", r.passed ? "pass" : "fail"},
                              {"details", r.details}});
      std::cout << Json{{"checks", std::move(checks)}}.dump() << "\n";
    } else {
      for (const CheckResult& r : results)
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name
                  << (r.passed ? "" : ": " + r.details) << "\n";
      std::cout << (all_passed ? "all checks passed" : "some checks FAILED") << " ("
                << results.size() << " run)\n";
    }
    return all_passed ? 0 : 1;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const EnumerationTooLarge& e) {
    std::cerr << "intractable: " << e.what() << "\n";
    return 3;
  } catch (const IntractableSlice& e) {
    std::cerr << "intractable: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
