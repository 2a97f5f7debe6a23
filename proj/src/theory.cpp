#include "clones/theory.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "clones/errors.hpp"

namespace clones {

const std::vector<OpTable>& Theory::slice(int arity) const {
  if (arity < 0 || arity > max_arity)
    throw std::invalid_argument("theory slice arity out of range");
  return ops_by_arity[static_cast<std::size_t>(arity)];
}

std::vector<std::size_t> Theory::arity_counts() const {
  std::vector<std::size_t> counts;
  counts.reserve(ops_by_arity.size());
  for (const auto& s : ops_by_arity) counts.push_back(s.size());
  return counts;
}

bool Theory::contains(const OpTable& op) const {
  if (op.arity > max_arity)
    throw std::invalid_argument("membership query above the theory arity bound");
  const auto& s = slice(op.arity);
  return std::binary_search(s.begin(), s.end(), op);
}

bool slice_is_full(int carrier, int arity, std::size_t count) {
  unsigned long long inner = 0, total = 0;
  if (!checked_pow(static_cast<unsigned long long>(carrier),
                   static_cast<unsigned long long>(arity), inner))
    return false;
  if (!checked_pow(static_cast<unsigned long long>(carrier), inner, total)) return false;
  return total == count;
}

Theory full_theory(int carrier, int max_arity, std::size_t cap) {
  Carrier{carrier, {}}.validate();
  if (max_arity < 0) throw std::invalid_argument("arity bound must be nonnegative");
  Theory t{carrier, max_arity, {}, {}};
  t.ops_by_arity.resize(static_cast<std::size_t>(max_arity) + 1);
  for (int n = 0; n <= max_arity; ++n) {
    const std::size_t len = table_size(carrier, n);
    unsigned long long count = 0;
    if (!checked_pow(static_cast<unsigned long long>(carrier), len, count) || count > cap)
      throw EnumerationTooLarge(n, cap);
    auto& slice = t.ops_by_arity[static_cast<std::size_t>(n)];
    slice.reserve(static_cast<std::size_t>(count));
    for (unsigned long long c = 0; c < count; ++c) {
      OpTable op{n, carrier, std::vector<int>(len)};
      unsigned long long rem = c;
      for (std::size_t p = 0; p < len; ++p) {
        op.table[p] = static_cast<int>(rem % static_cast<unsigned long long>(carrier));
        rem /= static_cast<unsigned long long>(carrier);
      }
      slice.push_back(std::move(op));
    }
    std::sort(slice.begin(), slice.end());
  }
  return t;
}

Theory projections_theory(int carrier, int max_arity) {
  return clone_generate({}, carrier, max_arity);
}

namespace {

// Values of all nullary terms: the nullary generator values closed under
// applying every generator diagonally-free (any argument combination).
std::set<int> nullary_values(const std::vector<OpTable>& generators, int carrier) {
  std::set<int> values;
  for (const OpTable& g : generators)
    if (g.arity == 0) values.insert(g.table[0]);
  bool grew = true;
  while (grew) {
    grew = false;
    for (const OpTable& g : generators) {
      if (g.arity == 0) continue;
      // odometer over value tuples from the current set
      std::vector<int> pool(values.begin(), values.end());
      if (pool.empty()) break;
      std::vector<std::size_t> pick(static_cast<std::size_t>(g.arity), 0);
      std::vector<int> args(static_cast<std::size_t>(g.arity));
      while (true) {
        for (std::size_t i = 0; i < pick.size(); ++i) args[i] = pool[pick[i]];
        int v = g.table[index_of(args, carrier)];
        if (values.insert(v).second) grew = true;
        std::size_t d = 0;
        for (; d < pick.size(); ++d) {
          if (++pick[d] < pool.size()) break;
          pick[d] = 0;
        }
        if (d == pick.size()) break;
      }
    }
  }
  return values;
}

}  // namespace

Theory clone_generate(const std::vector<OpTable>& generators, int carrier, int max_arity,
                      std::size_t cap) {
  Carrier{carrier, {}}.validate();
  if (max_arity < 0) throw std::invalid_argument("arity bound must be nonnegative");
  for (const OpTable& g : generators) {
    g.validate();
    if (g.carrier != carrier) throw std::invalid_argument("generator carrier mismatch");
    if (g.arity > max_arity)
      throw std::invalid_argument("generator arity exceeds the theory arity bound");
  }

  Theory t{carrier, max_arity, {}, generators};
  t.ops_by_arity.resize(static_cast<std::size_t>(max_arity) + 1);

  const std::set<int> constants = nullary_values(generators, carrier);
  for (int c : constants)
    t.ops_by_arity[0].push_back(constant_op(0, c, carrier));
  std::sort(t.ops_by_arity[0].begin(), t.ops_by_arity[0].end());

  for (int m = 1; m <= max_arity; ++m) {
    std::set<OpTable> slice;
    for (int i = 0; i < m; ++i) slice.insert(projection(m, i, carrier));
    for (int c : constants) slice.insert(constant_op(m, c, carrier));

    // Worklist closure: every m-ary member arises by applying a generator to
    // m-ary members, so each round applies generators to tuples touching the
    // previous round's frontier.
    std::vector<OpTable> all(slice.begin(), slice.end());
    std::size_t old_size = 0;  // members below this index existed before the frontier
    while (old_size < all.size()) {
      const std::size_t frontier_begin = old_size;
      old_size = all.size();
      std::vector<OpTable> found;
      for (const OpTable& g : generators) {
        if (g.arity == 0) continue;
        const std::size_t k = static_cast<std::size_t>(g.arity);
        std::vector<std::size_t> pick(k, 0);
        std::vector<OpTable> inners(k);
        while (true) {
          bool touches_frontier = false;
          for (std::size_t i = 0; i < k; ++i)
            if (pick[i] >= frontier_begin) touches_frontier = true;
          if (touches_frontier || frontier_begin == 0) {
            for (std::size_t i = 0; i < k; ++i) inners[i] = all[pick[i]];
            OpTable composed = superpose(g, inners);
            if (slice.insert(composed).second) found.push_back(std::move(composed));
          }
          std::size_t d = 0;
          for (; d < k; ++d) {
            if (++pick[d] < old_size) break;
            pick[d] = 0;
          }
          if (d == k) break;
        }
      }
      if (slice.size() > cap) throw EnumerationTooLarge(m, cap);
      for (auto& op : found) all.push_back(std::move(op));
    }
    t.ops_by_arity[static_cast<std::size_t>(m)].assign(slice.begin(), slice.end());
  }
  return t;
}

bool equal_upto(const Theory& a, const Theory& b, int max_arity) {
  if (a.carrier != b.carrier) return false;
  if (a.max_arity < max_arity || b.max_arity < max_arity)
    throw std::invalid_argument("equal_upto bound exceeds a theory arity bound");
  for (int n = 0; n <= max_arity; ++n)
    if (a.slice(n) != b.slice(n)) return false;
  return true;
}

bool subset_upto(const Theory& a, const Theory& b, int max_arity) {
  if (a.carrier != b.carrier) return false;
  if (a.max_arity < max_arity || b.max_arity < max_arity)
    throw std::invalid_argument("subset_upto bound exceeds a theory arity bound");
  for (int n = 0; n <= max_arity; ++n) {
    const auto& sb = b.slice(n);
    for (const OpTable& op : a.slice(n))
      if (!std::binary_search(sb.begin(), sb.end(), op)) return false;
  }
  return true;
}

std::vector<OpTable> generating_ops(const Theory& t) {
  if (!t.generators.empty()) return t.generators;
  std::vector<OpTable> all;
  for (const auto& slice : t.ops_by_arity) all.insert(all.end(), slice.begin(), slice.end());
  return all;
}

bool is_commutative(const Theory& t) {
  const std::vector<OpTable> gens = generating_ops(t);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i; j < gens.size(); ++j)
      if (!commutes(gens[i], gens[j])) return false;
  return true;
}

bool is_commutative_all_pairs(const Theory& t) {
  std::vector<OpTable> all;
  for (const auto& slice : t.ops_by_arity) all.insert(all.end(), slice.begin(), slice.end());
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i; j < all.size(); ++j)
      if (!commutes(all[i], all[j])) return false;
  return true;
}

Theory center(const Theory& t) {
  const std::vector<OpTable> gens = generating_ops(t);
  Theory c{t.carrier, t.max_arity, {}, {}};
  c.ops_by_arity.resize(static_cast<std::size_t>(t.max_arity) + 1);
  for (int n = 0; n <= t.max_arity; ++n)
    for (const OpTable& op : t.slice(n)) {
      bool central = true;
      for (const OpTable& g : gens)
        if (!commutes(op, g)) {
          central = false;
          break;
        }
      if (central) c.ops_by_arity[static_cast<std::size_t>(n)].push_back(op);
    }
  return c;
}

namespace {

[[noreturn]] void closure_violation(const std::string& what) {
  throw std::logic_error("theory invariant violated: " + what);
}

}  // namespace

void assert_clone(const Theory& t) {
  Carrier{t.carrier, {}}.validate();
  if (t.max_arity < 0) closure_violation("negative arity bound");
  if (t.ops_by_arity.size() != static_cast<std::size_t>(t.max_arity) + 1)
    closure_violation("slice vector length disagrees with the arity bound");

  for (int n = 0; n <= t.max_arity; ++n) {
    const auto& slice = t.slice(n);
    for (const OpTable& op : slice) {
      op.validate();
      if (op.arity != n || op.carrier != t.carrier)
        closure_violation("slice member with wrong arity or carrier");
    }
    if (!std::is_sorted(slice.begin(), slice.end())) closure_violation("slice not sorted");
    if (std::adjacent_find(slice.begin(), slice.end()) != slice.end())
      closure_violation("slice has duplicates");
  }

  for (int n = 1; n <= t.max_arity; ++n)
    for (int i = 0; i < n; ++i)
      if (!t.contains(projection(n, i, t.carrier)))
        closure_violation("projection missing at arity " + std::to_string(n));

  for (const OpTable& c : t.slice(0))
    for (int m = 1; m <= t.max_arity; ++m)
      if (!t.contains(constant_op(m, c.table[0], t.carrier)))
        closure_violation("nullary member does not lift to arity " + std::to_string(m));

  for (const OpTable& g : t.generators)
    if (!t.contains(g)) closure_violation("generator outside the slices");

  // Superposition closure. A full inner slice absorbs every composite, so
  // only non-full result slices need the scan.
  for (int m = 0; m <= t.max_arity; ++m) {
    const auto& inner = t.slice(m);
    if (slice_is_full(t.carrier, m, inner.size())) continue;
    if (inner.empty()) continue;
    for (int n = 1; n <= t.max_arity; ++n) {
      const auto& outer_slice = t.slice(n);
      for (const OpTable& outer : outer_slice) {
        std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
        std::vector<OpTable> inners(static_cast<std::size_t>(n));
        while (true) {
          for (std::size_t i = 0; i < pick.size(); ++i) inners[i] = inner[pick[i]];
          if (!t.contains(superpose(outer, inners)))
            closure_violation("slice not closed under superposition (outer arity " +
                              std::to_string(n) + ", inner arity " + std::to_string(m) + ")");
          std::size_t d = 0;
          for (; d < pick.size(); ++d) {
            if (++pick[d] < inner.size()) break;
            pick[d] = 0;
          }
          if (d == pick.size()) break;
        }
      }
    }
  }
}

}  // namespace clones
