#include "clones/rings.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "clones/errors.hpp"

namespace clones {

namespace {

std::string group_label(const FinAbGroup& g, int x) {
  if (x >= 0 && x < static_cast<int>(g.labels.size())) return g.labels[x];
  return std::to_string(x);
}

int neg_of(const FinAbGroup& g, int x) {
  for (int y = 0; y < g.size; ++y)
    if (g.add[x][y] == g.zero) return y;
  throw std::invalid_argument("group element " + group_label(g, x) + " has no inverse");
}

int order_of(const FinAbGroup& g, int x) {
  int acc = x, ord = 1;
  while (acc != g.zero) {
    acc = g.add[acc][x];
    ++ord;
    if (ord > g.size) throw std::invalid_argument("group addition does not cycle");
  }
  return ord;
}

// n * x in additive notation.
int scale(const FinAbGroup& g, int n, int x) {
  int acc = g.zero;
  for (int i = 0; i < n; ++i) acc = g.add[acc][x];
  return acc;
}

FinAbGroup cyclic_group(int n, const std::string& prefix) {
  FinAbGroup g;
  g.size = n;
  g.zero = 0;
  g.add.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.add[a][b] = (a + b) % n;
  g.labels.resize(n);
  for (int a = 0; a < n; ++a) g.labels[a] = prefix + std::to_string(a);
  return g;
}

// Direct product with little-endian encoding: (a, b) -> a + size(A) * b.
FinAbGroup product_group(const FinAbGroup& a, const FinAbGroup& b) {
  FinAbGroup g;
  g.size = a.size * b.size;
  g.zero = a.zero + a.size * b.zero;
  g.add.assign(g.size, std::vector<int>(g.size));
  for (int x = 0; x < g.size; ++x)
    for (int y = 0; y < g.size; ++y) {
      int ax = x % a.size, bx = x / a.size;
      int ay = y % a.size, by = y / a.size;
      g.add[x][y] = a.add[ax][ay] + a.size * b.add[bx][by];
    }
  g.labels.resize(g.size);
  for (int x = 0; x < g.size; ++x)
    g.labels[x] = "(" + group_label(a, x % a.size) + "," + group_label(b, x / a.size) + ")";
  return g;
}

// All additive maps determined by images of `gens`, where every group element
// is reached as a sum of generator multiples recorded in `decomp` (a list of
// (gen index, multiplicity) pairs per element).
struct GenDecomposition {
  std::vector<int> gens;
  // decomp[x] lists multiplicities per generator: x = sum_i mult[i] * gens[i].
  std::vector<std::vector<int>> decomp;
};

GenDecomposition greedy_generators(const FinAbGroup& g) {
  GenDecomposition out;
  // reached[x] holds the multiplicity vector expressing x, or empty if unseen.
  std::vector<std::vector<int>> reached(g.size);
  std::vector<bool> seen(g.size, false);
  seen[g.zero] = true;
  reached[g.zero] = {};
  int covered = 1;
  while (covered < g.size) {
    int pick = -1;
    for (int x = 0; x < g.size; ++x)
      if (!seen[x]) { pick = x; break; }
    out.gens.push_back(pick);
    const int gi = static_cast<int>(out.gens.size()) - 1;
    // Close the reached set under adding multiples of the new generator.
    std::vector<int> frontier;
    for (int x = 0; x < g.size; ++x)
      if (seen[x]) frontier.push_back(x);
    for (int base : frontier) {
      int cur = base;
      int mult = 0;
      while (true) {
        cur = g.add[cur][pick];
        ++mult;
        if (seen[cur]) break;
        seen[cur] = true;
        ++covered;
        reached[cur] = reached[base];
        reached[cur].resize(gi + 1, 0);
        reached[cur][gi] = mult;
      }
    }
  }
  out.decomp.resize(g.size);
  for (int x = 0; x < g.size; ++x) {
    out.decomp[x] = reached[x];
    out.decomp[x].resize(out.gens.size(), 0);
  }
  return out;
}

// Build the full endomorphism table from generator images, or fail if the
// assignment is inconsistent with additivity.
bool endo_from_images(const FinAbGroup& g, const GenDecomposition& gd,
                      const std::vector<int>& images, Endo* out) {
  Endo f(g.size);
  for (int x = 0; x < g.size; ++x) {
    int acc = g.zero;
    for (std::size_t i = 0; i < gd.gens.size(); ++i)
      acc = g.add[acc][scale(g, gd.decomp[x][i], images[i])];
    f[x] = acc;
  }
  // Decompositions fix one expression per element; full additivity must be
  // rechecked because the group may relate generators in ways the greedy
  // decomposition does not see.
  if (!is_additive(g, f)) return false;
  *out = std::move(f);
  return true;
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// If every non-zero element has prime order p, returns p, else 0.
int elementary_exponent(const FinAbGroup& g) {
  if (g.size < 2) return 0;
  int p = order_of(g, [&] {
    for (int x = 0; x < g.size; ++x)
      if (x != g.zero) return x;
    return g.zero;
  }());
  if (!is_prime(p)) return 0;
  for (int x = 0; x < g.size; ++x)
    if (x != g.zero && order_of(g, x) != p) return 0;
  return p;
}

// Basis of an elementary abelian p-group via greedy span extension.
std::vector<int> elementary_basis(const FinAbGroup& g, int p) {
  std::vector<int> basis;
  std::vector<bool> in_span(g.size, false);
  in_span[g.zero] = true;
  int span_size = 1;
  while (span_size < g.size) {
    int pick = -1;
    for (int x = 0; x < g.size; ++x)
      if (!in_span[x]) { pick = x; break; }
    basis.push_back(pick);
    std::vector<int> old;
    for (int x = 0; x < g.size; ++x)
      if (in_span[x]) old.push_back(x);
    for (int s : old)
      for (int m = 1; m < p; ++m) {
        int v = g.add[s][scale(g, m, pick)];
        if (!in_span[v]) { in_span[v] = true; ++span_size; }
      }
  }
  return basis;
}

// Coordinates of every element in the elementary basis (digits mod p).
std::vector<std::vector<int>> elementary_coords(const FinAbGroup& g, int p,
                                                const std::vector<int>& basis) {
  const int k = static_cast<int>(basis.size());
  std::vector<std::vector<int>> coords(g.size);
  std::vector<bool> seen(g.size, false);
  // Enumerate all p^k coordinate vectors; each hits a distinct element.
  std::vector<int> digits(k, 0);
  while (true) {
    int v = g.zero;
    for (int i = 0; i < k; ++i) v = g.add[v][scale(g, digits[i], basis[i])];
    if (seen[v]) throw std::logic_error("elementary basis coordinates collide");
    seen[v] = true;
    coords[v] = digits;
    int i = 0;
    while (i < k && digits[i] == p - 1) digits[i++] = 0;
    if (i == k) break;
    ++digits[i];
  }
  return coords;
}

std::vector<Endo> enumerate_endos(const FinAbGroup& g, int enumeration_bound) {
  std::vector<Endo> out;
  if (int p = elementary_exponent(g); p != 0 || g.size == 1) {
    if (g.size == 1) return {Endo{g.zero}};
    auto basis = elementary_basis(g, p);
    auto coords = elementary_coords(g, p, basis);
    const int k = static_cast<int>(basis.size());
    // Endomorphisms are exactly the k x k matrices over F_p: choose an image
    // for each basis vector and extend linearly. All p^(k*k) choices work.
    std::vector<int> images(k, g.zero);
    std::vector<int> image_coords(k, 0);  // flattened k*k digit odometer
    std::vector<int> digits(k * k, 0);
    while (true) {
      Endo f(g.size);
      for (int i = 0; i < k; ++i) {
        int img = g.zero;
        for (int j = 0; j < k; ++j)
          img = g.add[img][scale(g, digits[i * k + j], basis[j])];
        images[i] = img;
      }
      for (int x = 0; x < g.size; ++x) {
        int acc = g.zero;
        for (int i = 0; i < k; ++i) acc = g.add[acc][scale(g, coords[x][i], images[i])];
        f[x] = acc;
      }
      out.push_back(std::move(f));
      int i = 0;
      while (i < k * k && digits[i] == p - 1) digits[i++] = 0;
      if (i == k * k) break;
      ++digits[i];
    }
  } else {
    if (g.size > enumeration_bound)
      throw EnumerationTooLarge("endomorphism enumeration too large for group of size " +
                                    std::to_string(g.size) + " (bound " +
                                    std::to_string(enumeration_bound) + ")",
                                g.size);
    auto gd = greedy_generators(g);
    // Image orders must divide generator orders, which prunes candidates, but
    // a plain odometer over all images stays cheap at this scale and is
    // simpler to trust.
    const int k = static_cast<int>(gd.gens.size());
    std::vector<int> images(k, 0);
    while (true) {
      Endo f;
      if (endo_from_images(g, gd, images, &f)) out.push_back(std::move(f));
      int i = 0;
      while (i < k && images[i] == g.size - 1) images[i++] = 0;
      if (i == k) break;
      ++images[i];
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

void validate_group(const FinAbGroup& g) {
  if (g.size <= 0) throw std::invalid_argument("group must be non-empty");
  if (static_cast<int>(g.add.size()) != g.size)
    throw std::invalid_argument("group addition table has wrong row count");
  for (const auto& row : g.add) {
    if (static_cast<int>(row.size()) != g.size)
      throw std::invalid_argument("group addition table has wrong row length");
    for (int v : row)
      if (v < 0 || v >= g.size) throw std::invalid_argument("group addition entry out of range");
  }
  if (g.zero < 0 || g.zero >= g.size) throw std::invalid_argument("group zero out of range");
  for (int a = 0; a < g.size; ++a) {
    if (g.add[g.zero][a] != a || g.add[a][g.zero] != a)
      throw std::invalid_argument("group zero is not an identity");
    for (int b = 0; b < g.size; ++b) {
      if (g.add[a][b] != g.add[b][a]) throw std::invalid_argument("group addition not commutative");
      for (int c = 0; c < g.size; ++c)
        if (g.add[g.add[a][b]][c] != g.add[a][g.add[b][c]])
          throw std::invalid_argument("group addition not associative");
    }
  }
  for (int a = 0; a < g.size; ++a) neg_of(g, a);  // throws when no inverse
  if (!g.labels.empty() && static_cast<int>(g.labels.size()) != g.size)
    throw std::invalid_argument("group labels length mismatch");
}

FinAbGroup builtin_group(const std::string& name) {
  if (name == "Z2") return cyclic_group(2, "");
  if (name == "Z4") return cyclic_group(4, "");
  if (name == "Z6") return cyclic_group(6, "");
  if (name == "Z2xZ2") return product_group(cyclic_group(2, ""), cyclic_group(2, ""));
  if (name == "Z2^3")
    return product_group(product_group(cyclic_group(2, ""), cyclic_group(2, "")),
                         cyclic_group(2, ""));
  throw std::invalid_argument("unknown builtin group: " + name);
}

std::vector<std::string> builtin_group_names() { return {"Z2", "Z2^3", "Z2xZ2", "Z4", "Z6"}; }

bool is_additive(const FinAbGroup& g, const Endo& f) {
  if (static_cast<int>(f.size()) != g.size) return false;
  for (int v : f)
    if (v < 0 || v >= g.size) return false;
  if (f[g.zero] != g.zero) return false;
  for (int a = 0; a < g.size; ++a)
    for (int b = 0; b < g.size; ++b)
      if (f[g.add[a][b]] != g.add[f[a]][f[b]]) return false;
  return true;
}

Endo compose(const Endo& f, const Endo& g) {
  Endo h(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) h[x] = f[g[x]];
  return h;
}

int EndRing::index_of_endo(const Endo& f) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), f);
  if (it == elements.end() || *it != f) return -1;
  return static_cast<int>(it - elements.begin());
}

EndRing end_ring(const FinAbGroup& m, int enumeration_bound) {
  validate_group(m);
  EndRing er;
  er.group = m;
  er.elements = enumerate_endos(m, enumeration_bound);

  const int n = static_cast<int>(er.elements.size());
  Rig r;
  r.size = n;
  r.add.assign(n, std::vector<int>(n));
  r.mul.assign(n, std::vector<int>(n));
  Endo zero_map(m.size, m.zero);
  Endo id_map(m.size);
  std::iota(id_map.begin(), id_map.end(), 0);
  r.zero = er.index_of_endo(zero_map);
  r.one = er.index_of_endo(id_map);
  if (r.zero < 0 || r.one < 0) throw std::logic_error("endomorphism ring misses zero or identity");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Endo sum(m.size);
      for (int x = 0; x < m.size; ++x) sum[x] = m.add[er.elements[i][x]][er.elements[j][x]];
      int si = er.index_of_endo(sum);
      int pi = er.index_of_endo(compose(er.elements[i], er.elements[j]));
      if (si < 0 || pi < 0) throw std::logic_error("endomorphism ring not closed");
      r.add[i][j] = si;
      r.mul[i][j] = pi;
    }
  r.labels.resize(n);
  for (int i = 0; i < n; ++i) {
    std::string s = "[";
    for (int x = 0; x < m.size; ++x) {
      if (x) s += " ";
      s += std::to_string(er.elements[i][x]);
    }
    r.labels[i] = s + "]";
  }
  auto violations = check_rig_axioms(r);
  if (!violations.empty())
    throw std::logic_error("endomorphism ring fails axioms: " + violations.front().render(r));
  er.ring = std::move(r);
  return er;
}

namespace {

void check_subring(const Rig& ring, const std::vector<int>& s, const char* what) {
  auto member = [&](int x) { return std::binary_search(s.begin(), s.end(), x); };
  if (!member(ring.zero) || !member(ring.one))
    throw std::logic_error(std::string(what) + " misses zero or one");
  for (int a : s)
    for (int b : s) {
      if (!member(rig_add(ring, a, b)) || !member(rig_mul(ring, a, b)))
        throw std::logic_error(std::string(what) + " not closed under ring operations");
    }
  // Closure under negation (when the ambient is a ring) follows from additive
  // closure: in a finite additive group -a is a repeated sum of a.
}

}  // namespace

std::vector<int> centralizer(const Rig& ring, const std::vector<int>& subset) {
  for (int x : subset)
    if (x < 0 || x >= ring.size) throw std::invalid_argument("centralizer subset out of range");
  std::vector<int> out;
  for (int c = 0; c < ring.size; ++c) {
    bool ok = true;
    for (int x : subset)
      if (rig_mul(ring, c, x) != rig_mul(ring, x, c)) { ok = false; break; }
    if (ok) out.push_back(c);
  }
  check_subring(ring, out, "centralizer");
  return out;
}

std::vector<int> subring_closure(const Rig& ring, const std::vector<int>& seed) {
  std::set<int> s(seed.begin(), seed.end());
  s.insert(ring.zero);
  s.insert(ring.one);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(s.begin(), s.end());
    for (int a : cur)
      for (int b : cur) {
        if (s.insert(rig_add(ring, a, b)).second) grew = true;
        if (s.insert(rig_mul(ring, a, b)).second) grew = true;
      }
  }
  return {s.begin(), s.end()};
}

Rig subring_rig(const Rig& ambient, const std::vector<int>& elements) {
  std::vector<int> sorted = elements;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  check_subring(ambient, sorted, "subring");
  const int n = static_cast<int>(sorted.size());
  auto rank = [&](int x) {
    return static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin());
  };
  Rig r;
  r.size = n;
  r.add.assign(n, std::vector<int>(n));
  r.mul.assign(n, std::vector<int>(n));
  r.zero = rank(ambient.zero);
  r.one = rank(ambient.one);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      r.add[i][j] = rank(rig_add(ambient, sorted[i], sorted[j]));
      r.mul[i][j] = rank(rig_mul(ambient, sorted[i], sorted[j]));
    }
  if (!ambient.labels.empty()) {
    r.labels.resize(n);
    for (int i = 0; i < n; ++i) r.labels[i] = ambient.labels[sorted[i]];
  }
  return r;
}

void validate_action(const ModuleAction& a) {
  validate_rig(a.ring);
  validate_group(a.group);
  if (static_cast<int>(a.action.size()) != a.ring.size)
    throw std::invalid_argument("action must assign one map per ring element");
  for (int r = 0; r < a.ring.size; ++r)
    if (!is_additive(a.group, a.action[r]))
      throw std::invalid_argument("action of ring element " + std::to_string(r) +
                                  " is not additive");
  // Unital ring homomorphism into End(M).
  for (int x = 0; x < a.group.size; ++x)
    if (a.action[a.ring.one][x] != x)
      throw std::invalid_argument("ring unit must act as the identity");
  for (int r = 0; r < a.ring.size; ++r)
    for (int s = 0; s < a.ring.size; ++s) {
      const Endo& fr = a.action[r];
      const Endo& fs = a.action[s];
      for (int x = 0; x < a.group.size; ++x) {
        if (a.action[rig_add(a.ring, r, s)][x] != a.group.add[fr[x]][fs[x]])
          throw std::invalid_argument("action does not preserve addition");
        if (a.action[rig_mul(a.ring, r, s)][x] != fr[fs[x]])
          throw std::invalid_argument("action does not preserve multiplication");
      }
    }
}

bool action_is_faithful(const ModuleAction& a) {
  for (int r = 0; r < a.ring.size; ++r)
    for (int s = r + 1; s < a.ring.size; ++s)
      if (a.action[r] == a.action[s]) return false;
  return true;
}

ModuleCommutant module_commutant(const ModuleAction& a, int enumeration_bound) {
  validate_action(a);
  ModuleCommutant mc;
  mc.ambient = end_ring(a.group, enumeration_bound);
  std::set<int> image;
  for (const Endo& f : a.action) {
    int idx = mc.ambient.index_of_endo(f);
    if (idx < 0) throw std::logic_error("action image missing from endomorphism ring");
    image.insert(idx);
  }
  mc.image.assign(image.begin(), image.end());
  mc.commutant = centralizer(mc.ambient.ring, mc.image);
  return mc;
}

std::vector<int> double_centralizer(const ModuleCommutant& mc) {
  return centralizer(mc.ambient.ring, mc.commutant);
}

bool has_double_centralizer_property(const ModuleAction& a, int enumeration_bound) {
  ModuleCommutant mc = module_commutant(a, enumeration_bound);
  return double_centralizer(mc) == mc.image && action_is_faithful(a);
}

namespace {

// Additive group of a ring, for building End(R, +).
FinAbGroup additive_group(const Rig& ring) {
  FinAbGroup g;
  g.size = ring.size;
  g.add = ring.add;
  g.zero = ring.zero;
  g.labels = ring.labels;
  validate_group(g);  // rings have additive inverses; rigs may not
  return g;
}

}  // namespace

OppositeWitness regular_commutant_is_opposite(const Rig& ring, int enumeration_bound) {
  if (!is_ring(ring))
    throw std::invalid_argument("regular commutant analysis requires additive inverses");
  FinAbGroup g = additive_group(ring);
  EndRing er = end_ring(g, enumeration_bound);

  // Left and right multiplication maps, indexed in the endomorphism ring.
  std::vector<int> lefts, rights;
  std::vector<int> right_index_of(ring.size);  // ring element -> endo index
  for (int r = 0; r < ring.size; ++r) {
    Endo lm(ring.size), rm(ring.size);
    for (int x = 0; x < ring.size; ++x) {
      lm[x] = rig_mul(ring, r, x);
      rm[x] = rig_mul(ring, x, r);
    }
    int li = er.index_of_endo(lm);
    int ri = er.index_of_endo(rm);
    if (li < 0 || ri < 0) throw std::logic_error("multiplication maps must be additive");
    lefts.push_back(li);
    rights.push_back(ri);
    right_index_of[r] = ri;
  }
  std::sort(lefts.begin(), lefts.end());
  lefts.erase(std::unique(lefts.begin(), lefts.end()), lefts.end());
  std::vector<int> rights_sorted = rights;
  std::sort(rights_sorted.begin(), rights_sorted.end());
  rights_sorted.erase(std::unique(rights_sorted.begin(), rights_sorted.end()),
                      rights_sorted.end());

  OppositeWitness w;
  std::vector<int> cen = centralizer(er.ring, lefts);
  w.centralizer_size = cen.size();
  w.centralizer_is_right_multiplications = (cen == rights_sorted);

  // r -> (. r) reverses products: R_{r*s} = R_s . R_r, is additive, unital,
  // and injective. That exhibits the commutant as the opposite ring.
  bool anti = rights_sorted.size() == static_cast<std::size_t>(ring.size);
  for (int r = 0; anti && r < ring.size; ++r)
    for (int s = 0; anti && s < ring.size; ++s) {
      int prod = right_index_of[rig_mul(ring, r, s)];
      if (prod != rig_mul(er.ring, right_index_of[s], right_index_of[r])) anti = false;
      int sum = right_index_of[rig_add(ring, r, s)];
      if (sum != rig_add(er.ring, right_index_of[r], right_index_of[s])) anti = false;
    }
  if (right_index_of[ring.one] != er.ring.one) anti = false;
  w.anti_isomorphism_valid = anti;
  return w;
}

bool is_maximal_commutative(const Rig& ring, const std::vector<int>& s) {
  std::vector<int> sorted = s;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  check_subring(ring, sorted, "maximal-commutative candidate");
  for (int a : sorted)
    for (int b : sorted)
      if (rig_mul(ring, a, b) != rig_mul(ring, b, a)) return false;
  return centralizer(ring, sorted) == sorted;
}

bool is_maximal_commutative_direct(const Rig& ring, const std::vector<int>& s) {
  std::vector<int> sorted = s;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  check_subring(ring, sorted, "maximal-commutative candidate");
  for (int a : sorted)
    for (int b : sorted)
      if (rig_mul(ring, a, b) != rig_mul(ring, b, a)) return false;
  for (int u = 0; u < ring.size; ++u) {
    if (std::binary_search(sorted.begin(), sorted.end(), u)) continue;
    std::vector<int> seed = sorted;
    seed.push_back(u);
    std::vector<int> bigger = subring_closure(ring, seed);
    bool comm = true;
    for (int a : bigger) {
      for (int b : bigger)
        if (rig_mul(ring, a, b) != rig_mul(ring, b, a)) { comm = false; break; }
      if (!comm) break;
    }
    if (comm) return false;  // a strictly larger commutative subring exists
  }
  return true;
}

}  // namespace clones
