#include "clones/verification.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "clones/commutant.hpp"
#include "clones/monad.hpp"
#include "clones/rig_theories.hpp"
#include "clones/rings.hpp"

namespace clones {

namespace {

std::string fmt_counts(const std::vector<std::size_t>& counts) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i) out << ",";
    out << counts[i];
  }
  out << "]";
  return out.str();
}

std::vector<OpTable> member_ops(const Theory& t) {
  std::vector<OpTable> all;
  for (const auto& slice : t.ops_by_arity) all.insert(all.end(), slice.begin(), slice.end());
  return all;
}

// First arity at which two theories' slices differ, rendered for a report.
std::string slice_diff(const Theory& a, const Theory& b, int bound) {
  for (int n = 0; n <= bound; ++n) {
    if (a.slice(n) != b.slice(n)) {
      std::ostringstream out;
      out << "slices differ at arity " << n << " (" << a.slice(n).size() << " vs "
          << b.slice(n).size() << " ops)";
      return out.str();
    }
  }
  return "slices equal";
}

struct Ctx {
  int threads = 1;
  std::string corrupt_builtin;

  Rig rig(const std::string& name) const {
    // Test mode: a corrupted builtin resolves to a different (valid) rig, so
    // every check pinned to the real tables reports a concrete diff.
    if (name == corrupt_builtin && name == "bool2") return builtin_rig("Z2");
    return builtin_rig(name);
  }

  CommutantOptions copts() const {
    CommutantOptions o;
    o.threads = threads;
    return o;
  }
};

using CheckFn = std::function<std::string(const Ctx&)>;  // empty string = pass

// --- 1 ------------------------------------------------------------------

std::string check_matrix_kronecker_bridge(const Ctx& ctx) {
  for (const char* name : {"Z4", "bool2"}) {
    const Rig r = ctx.rig(name);
    std::vector<std::vector<int>> rows;
    for (int len = 0; len <= 2; ++len) {
      std::vector<int> row(static_cast<std::size_t>(len), 0);
      while (true) {
        rows.push_back(row);
        int d = 0;
        for (; d < len; ++d) {
          if (++row[static_cast<std::size_t>(d)] < r.size) break;
          row[static_cast<std::size_t>(d)] = 0;
        }
        if (d == len) break;
      }
    }
    for (const auto& rho : rows)
      for (const auto& sigma : rows) {
        RMatrix x{1, static_cast<int>(rho.size()), rho};
        RMatrix y{1, static_cast<int>(sigma.size()), sigma};
        RMatrix k = matrix_kronecker(r, x, y);
        OpTable lhs = op_of_row(r, k.entries);
        OpTable rhs = kron1(op_of_row(r, rho), op_of_row(r, sigma));
        if (lhs != rhs) {
          std::ostringstream out;
          out << "bridge law fails over " << name << " for rows of lengths " << rho.size()
              << " and " << sigma.size();
          return out.str();
        }
      }
  }
  return "";
}

// --- 2 ------------------------------------------------------------------

std::string check_mat_commutative_iff_rig(const Ctx& ctx) {
  for (const char* name : {"Z2", "Z3", "Z4", "bool2", "F4"}) {
    if (!is_commutative(mat_theory(ctx.rig(name), 3)))
      return std::string("matrix theory over ") + name + " reported noncommutative";
  }
  if (is_commutative(mat_theory(ctx.rig("UT2_F2"), 3)))
    return "matrix theory over UT2_F2 reported commutative";
  return "";
}

// --- 3 ------------------------------------------------------------------

std::string check_join_clone_commutant_balanced(const Ctx& ctx) {
  const OpTable join{2, 2, {0, 1, 1, 1}};
  const OpTable bottom = constant_op(0, 0, 2);
  const std::vector<OpTable> gens{join, bottom};
  const Theory c = commutant(gens, 2, 3, nullptr, ctx.copts());
  const std::vector<std::size_t> expected{1, 2, 4, 8};
  if (c.arity_counts() != expected)
    return "commutant counts " + fmt_counts(c.arity_counts()) + ", expected " +
           fmt_counts(expected);
  const Theory m = mat_theory(ctx.rig("bool2"), 3);
  if (!equal_upto(c, m, 3))
    return "commutant of {join, bottom} is not the bool2 matrix theory: " + slice_diff(c, m, 3);
  const Theory cc = double_commutant(gens, 2, 3, nullptr, ctx.copts());
  if (!equal_upto(cc, c, 3))
    return "double commutant differs from the commutant: " + slice_diff(cc, c, 3);
  return "";
}

// --- 4 ------------------------------------------------------------------

std::string check_mat_opposite_commutants(const Ctx& ctx) {
  for (const char* name : {"Z2", "Z3", "Z4"}) {
    const Rig r = ctx.rig(name);
    const Rig ro = opposite(r);
    const Theory m = mat_theory(r, 2);
    const Theory mo = mat_theory(ro, 2);
    const Theory cm = commutant(m.generators, r.size, 2, nullptr, ctx.copts());
    if (!equal_upto(cm, mo, 2))
      return std::string("commutant of the ") + name +
             " matrix theory is not the opposite matrix theory: " + slice_diff(cm, mo, 2);
    const Theory cmo = commutant(mo.generators, r.size, 2, nullptr, ctx.copts());
    if (!equal_upto(cmo, m, 2))
      return std::string("commutant of the opposite ") + name +
             " matrix theory is not the matrix theory: " + slice_diff(cmo, m, 2);
  }
  return "";
}

// --- 5 ------------------------------------------------------------------

std::string check_affine_pointed_commutants(const Ctx& ctx) {
  const Rig b = ctx.rig("bool2");
  const Theory aff = mat_aff_theory(b, 3);
  const Theory caff = commutant(aff.generators, 2, 3, nullptr, ctx.copts());
  const OpTable join{2, 2, {0, 1, 1, 1}};
  const Theory j01 =
      clone_generate({join, constant_op(0, 0, 2), constant_op(0, 1, 2)}, 2, 3);
  const std::vector<std::size_t> expected{2, 3, 5, 9};
  if (caff.arity_counts() != expected)
    return "affine commutant counts " + fmt_counts(caff.arity_counts()) + ", expected " +
           fmt_counts(expected);
  if (!equal_upto(caff, j01, 3))
    return "affine commutant is not the {join, 0, 1} clone: " + slice_diff(caff, j01, 3);
  const Theory ptd = pointed_mod_theory(b, 3);
  const Theory cptd = commutant(ptd.generators, 2, 3, nullptr, ctx.copts());
  if (!equal_upto(cptd, aff, 3))
    return "pointed-module commutant is not the affine theory: " + slice_diff(cptd, aff, 3);
  return "";
}

// --- 6 ------------------------------------------------------------------

std::string check_empty_generators_full_commutant(const Ctx& ctx) {
  const Theory c = commutant({}, 2, 3, nullptr, ctx.copts());
  const std::vector<std::size_t> expected{2, 4, 16, 256};
  if (c.arity_counts() != expected)
    return "commutant counts " + fmt_counts(c.arity_counts()) + ", expected " +
           fmt_counts(expected);
  const Theory full = full_theory(2, 3);
  if (!equal_upto(c, full, 3))
    return "empty-generator commutant misses part of the full theory: " + slice_diff(c, full, 3);
  return "";
}

// --- 7 ------------------------------------------------------------------

std::string check_galois_connection_binary_clones(const Ctx& ctx) {
  const std::vector<OpTable> binaries = full_theory(2, 2).slice(2);
  std::vector<Theory> theories;
  std::set<std::vector<std::vector<OpTable>>> seen;
  for (std::size_t i = 0; i < binaries.size(); ++i)
    for (std::size_t j = i; j < binaries.size(); ++j) {
      Theory t = clone_generate({binaries[i], binaries[j]}, 2, 2);
      if (seen.insert(t.ops_by_arity).second) theories.push_back(std::move(t));
    }

  std::vector<Theory> firsts, seconds, thirds;
  for (const Theory& t : theories) {
    Theory c = commutant(t.generators, 2, 2, nullptr, ctx.copts());
    Theory cc = commutant(member_ops(c), 2, 2, nullptr, ctx.copts());
    Theory ccc = commutant(member_ops(cc), 2, 2, nullptr, ctx.copts());
    firsts.push_back(std::move(c));
    seconds.push_back(std::move(cc));
    thirds.push_back(std::move(ccc));
  }

  for (std::size_t a = 0; a < theories.size(); ++a) {
    if (!subset_upto(theories[a], seconds[a], 2))
      return "a clone escapes its double commutant (clone #" + std::to_string(a) + ")";
    if (!equal_upto(firsts[a], thirds[a], 2))
      return "commutant differs from triple commutant (clone #" + std::to_string(a) + ")";
    for (std::size_t b = 0; b < theories.size(); ++b) {
      if (a == b || !subset_upto(theories[a], theories[b], 2)) continue;
      if (!subset_upto(firsts[b], firsts[a], 2))
        return "antitonicity fails between clones #" + std::to_string(a) + " and #" +
               std::to_string(b);
    }
  }
  return "";
}

// --- 8 ------------------------------------------------------------------

std::string check_symmetry_transposition(const Ctx&) {
  std::vector<OpTable> ops;
  const Theory full2 = full_theory(2, 2);
  for (int n = 0; n <= 2; ++n)
    for (const OpTable& op : full2.slice(n)) ops.push_back(op);

  auto laws = [](const OpTable& mu, const OpTable& nu) -> bool {
    if (commutes(mu, nu) != commutes(nu, mu)) return false;
    return kron2(mu, nu) == transpose_vars(kron1(nu, mu), nu.arity, mu.arity);
  };

  for (const OpTable& mu : ops)
    for (const OpTable& nu : ops)
      if (!laws(mu, nu)) return "symmetry or transposition law fails on a 2-element pair";

  std::mt19937 rng(20260817u);
  std::uniform_int_distribution<int> arity_pick(1, 2);
  std::uniform_int_distribution<int> value(0, 2);
  auto random_op = [&]() {
    OpTable op{arity_pick(rng), 3, {}};
    op.table.resize(table_size(3, op.arity));
    for (auto& v : op.table) v = value(rng);
    return op;
  };
  for (int trial = 0; trial < 1000; ++trial)
    if (!laws(random_op(), random_op()))
      return "symmetry or transposition law fails on a random 3-element pair";
  return "";
}

// --- 9 ------------------------------------------------------------------

std::string check_theory_monad_bridge(const Ctx& ctx) {
  const OpTable and2{2, 2, {0, 0, 0, 1}};
  const OpTable or2{2, 2, {0, 1, 1, 1}};
  const OpTable not1{1, 2, {1, 0}};
  std::vector<std::pair<std::string, Theory>> theories;
  theories.emplace_back("mat:bool2", mat_theory(ctx.rig("bool2"), 3));
  theories.emplace_back("mat_aff:bool2", mat_aff_theory(ctx.rig("bool2"), 3));
  theories.emplace_back("clone{and}", clone_generate({and2}, 2, 3));
  theories.emplace_back("clone{or}", clone_generate({or2}, 2, 3));
  theories.emplace_back("clone{and,not}", clone_generate({and2, not1}, 2, 3));
  theories.emplace_back("projections", projections_theory(2, 3));

  for (std::size_t i = 0; i < theories.size(); ++i) {
    for (std::size_t j = i; j < theories.size(); ++j) {
      const bool via_theories = theories_commute(generating_ops(theories[i].second),
                                                 generating_ops(theories[j].second), 2,
                                                 ctx.copts());
      const bool via_monads = monads_commute(theories[i].second, theories[j].second, 2);
      if (via_theories != via_monads)
        return "theory and monad routes disagree for " + theories[i].first + " vs " +
               theories[j].first;
    }
    const bool tc = is_commutative(theories[i].second);
    const bool mc = monad_is_commutative(theories[i].second, 2);
    if (tc != mc)
      return "commutativity and monad commutativity disagree for " + theories[i].first;
  }
  return "";
}

// --- 10 -----------------------------------------------------------------

std::string check_free_element_representation(const Ctx&) {
  const Theory small = full_theory(2, 2);
  for (int size = 1; size <= 3; ++size)
    for (int n = 0; n <= 2; ++n)
      for (const OpTable& op : small.slice(n)) {
        std::vector<int> anchor(static_cast<std::size_t>(n), 0);
        while (true) {
          const FreeElement raw{op, anchor, size};
          const FreeElement canon = canonicalize(small, op, anchor, size);
          if (full_support(small, canon) != full_support(small, raw))
            return "canonical form changes the value of an element";
          if (!canon.anchor.empty() &&
              !std::is_sorted(canon.anchor.begin(), canon.anchor.end()))
            return "canonical anchor is not increasing";
          int d = 0;
          for (; d < n; ++d) {
            if (++anchor[static_cast<std::size_t>(d)] < size) break;
            anchor[static_cast<std::size_t>(d)] = 0;
          }
          if (d == n) break;
        }
      }

  // Monad laws over the full theory with bound 3.
  const Theory t = full_theory(2, 3);
  for (int n = 1; n <= 3; ++n) {
    const std::vector<FreeElement> tn = monad_apply(t, n);
    std::vector<FreeElement> units;
    for (int x = 0; x < n; ++x) units.push_back(unit(t, n, x));
    for (const FreeElement& e : tn) {
      if (kleisli_bind(t, e, units, n) != full_support(t, e))
        return "right identity law fails at set size " + std::to_string(n);
    }
    for (int m = 1; m <= 3; ++m) {
      const std::vector<FreeElement> tm = monad_apply(t, m);
      for (int offset = 0; offset < 3; ++offset) {
        std::vector<FreeElement> k;
        for (int x = 0; x < n; ++x)
          k.push_back(tm[(static_cast<std::size_t>(x) * 7 + offset * 5 + 3) % tm.size()]);
        for (int x = 0; x < n; ++x)
          if (kleisli_bind(t, unit(t, n, x), k, m) != full_support(t, k[static_cast<std::size_t>(x)]))
            return "left identity law fails at set sizes " + std::to_string(n) + "->" +
                   std::to_string(m);
        // Associativity on a deterministic sample of elements and seconds.
        std::vector<FreeElement> l;
        const std::vector<FreeElement> tp = monad_apply(t, 2);
        for (int y = 0; y < m; ++y)
          l.push_back(tp[(static_cast<std::size_t>(y) * 11 + offset * 3 + 1) % tp.size()]);
        for (std::size_t pick = 0; pick < tn.size(); pick += 17) {
          const FreeElement& e = tn[pick];
          const FreeElement lhs = kleisli_bind(t, kleisli_bind(t, e, k, m), l, 2);
          std::vector<FreeElement> composed;
          for (int x = 0; x < n; ++x)
            composed.push_back(kleisli_bind(t, k[static_cast<std::size_t>(x)], l, 2));
          const FreeElement rhs = kleisli_bind(t, e, composed, 2);
          if (lhs != rhs)
            return "associativity law fails at set sizes " + std::to_string(n) + "->" +
                   std::to_string(m) + "->2";
        }
      }
    }
  }
  return "";
}

// --- 11 -----------------------------------------------------------------

std::string check_ring_centralizers(const Ctx&) {
  const EndRing er = end_ring(builtin_group("Z2xZ2"));
  if (er.elements.size() != 16)
    return "End(Z2xZ2) has " + std::to_string(er.elements.size()) + " elements, expected 16";
  std::vector<int> everything(16);
  for (int i = 0; i < 16; ++i) everything[static_cast<std::size_t>(i)] = i;
  std::vector<int> scalars{std::min(er.ring.zero, er.ring.one),
                           std::max(er.ring.zero, er.ring.one)};

  if (centralizer(er.ring, everything) != scalars)
    return "center of End(Z2xZ2) is not {zero, identity}";
  if (centralizer(er.ring, scalars) != everything)
    return "centralizer of the scalars is not all of End(Z2xZ2)";

  ModuleAction natural{er.ring, er.group, er.elements};
  const ModuleCommutant mc = module_commutant(natural);
  if (mc.commutant != scalars) return "module commutant of the natural action is not the scalars";
  if (double_centralizer(mc) != everything || !has_double_centralizer_property(natural))
    return "double centralizer of the natural action is not the full endomorphism ring";

  const Rig z2 = builtin_rig("Z2");
  Endo zero_map(4, 0), id_map{0, 1, 2, 3};
  ModuleAction scalar_action{z2, er.group, {zero_map, id_map}};
  const ModuleCommutant smc = module_commutant(scalar_action);
  if (smc.commutant != everything)
    return "commutant of the scalar action is not the full endomorphism ring";
  if (double_centralizer(smc) != scalars || !has_double_centralizer_property(scalar_action))
    return "double centralizer of the scalar action is not the scalars";

  const OppositeWitness wz4 = regular_commutant_is_opposite(builtin_rig("Z4"));
  if (!wz4.holds() || wz4.centralizer_size != 4)
    return "regular commutant of Z4 is not its opposite ring";
  const OppositeWitness wut = regular_commutant_is_opposite(builtin_rig("UT2_F2"));
  if (!wut.holds()) return "regular commutant of UT2_F2 is not its opposite ring";
  if (wut.centralizer_size != 8)
    return "regular commutant of UT2_F2 has " + std::to_string(wut.centralizer_size) +
           " elements, expected 8";

  std::vector<int> diagonal;
  for (const Endo& e : {Endo{0, 0, 0, 0}, Endo{0, 1, 0, 1}, Endo{0, 0, 2, 2}, Endo{0, 1, 2, 3}})
    diagonal.push_back(er.index_of_endo(e));
  std::sort(diagonal.begin(), diagonal.end());
  if (!is_maximal_commutative(er.ring, diagonal))
    return "diagonal subring is not self-centralizing";
  if (!is_maximal_commutative_direct(er.ring, diagonal))
    return "diagonal subring is not maximal commutative by direct search";
  return "";
}

// --- 12 -----------------------------------------------------------------

std::string check_slice_strategy_agreement(const Ctx& ctx) {
  const OpTable and2{2, 2, {0, 0, 0, 1}};
  const OpTable or2{2, 2, {0, 1, 1, 1}};
  const OpTable xor2{2, 2, {0, 1, 1, 0}};
  const OpTable not1{1, 2, {1, 0}};
  const OpTable maj3{3, 2, {0, 0, 0, 1, 0, 1, 1, 1}};
  const OpTable min2{2, 3, {0, 0, 0, 0, 1, 1, 0, 1, 2}};
  const OpTable succ1{1, 3, {1, 2, 0}};
  const OpTable add3{2, 3, {0, 1, 2, 1, 2, 0, 2, 0, 1}};

  struct Family {
    int carrier;
    int max_arity;
    std::vector<OpTable> gens;
  };
  const std::vector<Family> families{
      {2, 3, {}},
      {2, 3, {or2, constant_op(0, 0, 2)}},
      {2, 3, {and2}},
      {2, 3, {xor2, not1}},
      {2, 3, {maj3}},
      {3, 2, {}},
      {3, 2, {min2}},
      {3, 2, {succ1}},
      {3, 2, {add3}},
  };

  for (std::size_t f = 0; f < families.size(); ++f) {
    const Family& fam = families[f];
    for (int n = 0; n <= fam.max_arity; ++n) {
      CommutantOptions ex = ctx.copts();
      ex.strategy = SliceStrategy::exhaustive;
      CommutantOptions bt = ctx.copts();
      bt.strategy = SliceStrategy::backtracking;
      const auto a = commutant_slice(fam.gens, fam.carrier, n, ex);
      const auto b = commutant_slice(fam.gens, fam.carrier, n, bt);
      if (a != b)
        return "strategies disagree for family #" + std::to_string(f) + " at arity " +
               std::to_string(n) + " (" + std::to_string(a.size()) + " vs " +
               std::to_string(b.size()) + " ops)";
    }
  }
  return "";
}

struct NamedCheck {
  const char* name;
  CheckFn fn;
};

const std::vector<NamedCheck>& checks() {
  static const std::vector<NamedCheck> table{
      {"matrix_kronecker_bridge", check_matrix_kronecker_bridge},
      {"mat_commutative_iff_rig", check_mat_commutative_iff_rig},
      {"join_clone_commutant_balanced", check_join_clone_commutant_balanced},
      {"mat_opposite_commutants", check_mat_opposite_commutants},
      {"affine_pointed_commutants", check_affine_pointed_commutants},
      {"empty_generators_full_commutant", check_empty_generators_full_commutant},
      {"galois_connection_binary_clones", check_galois_connection_binary_clones},
      {"symmetry_transposition", check_symmetry_transposition},
      {"theory_monad_bridge", check_theory_monad_bridge},
      {"free_element_representation", check_free_element_representation},
      {"ring_centralizers", check_ring_centralizers},
      {"slice_strategy_agreement", check_slice_strategy_agreement},
  };
  return table;
}

}  // namespace

std::vector<std::string> example_check_names() {
  std::vector<std::string> names;
  for (const NamedCheck& c : checks()) names.emplace_back(c.name);
  return names;
}

std::vector<CheckResult> run_example_checks(const VerifyOptions& options) {
  Ctx ctx{options.threads, options.corrupt_builtin};
  std::vector<CheckResult> results;
  for (const NamedCheck& c : checks()) {
    if (!options.filter.empty() &&
        std::string(c.name).find(options.filter) == std::string::npos)
      continue;
    CheckResult r;
    r.name = c.name;
    try {
      std::string problem = c.fn(ctx);
      r.passed = problem.empty();
      r.details = r.passed ? "ok" : problem;
    } catch (const std::exception& e) {
      r.passed = false;
      r.details = std::string("exception: ") + e.what();
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace clones
