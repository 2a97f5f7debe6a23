#include "clones/commutant.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "clones/errors.hpp"

namespace clones {

bool commutes_with_all(const OpTable& op, const std::vector<OpTable>& gens) {
  for (const OpTable& g : gens)
    if (!commutes(op, g)) return false;
  return true;
}

namespace {

OpTable table_from_code(unsigned long long code, int arity, int carrier, std::size_t len) {
  OpTable op{arity, carrier, std::vector<int>(len)};
  for (std::size_t p = 0; p < len; ++p) {
    op.table[p] = static_cast<int>(code % static_cast<unsigned long long>(carrier));
    code /= static_cast<unsigned long long>(carrier);
  }
  return op;
}

std::vector<OpTable> exhaustive_slice(const std::vector<OpTable>& gens, int carrier, int arity,
                                      unsigned long long candidates, const CommutantOptions& options) {
  const std::size_t len = table_size(carrier, arity);
  const int threads = std::max(1, options.threads);
  std::vector<std::vector<OpTable>> found(static_cast<std::size_t>(threads));
  auto scan = [&](int worker) {
    const unsigned long long chunk = (candidates + threads - 1) / threads;
    const unsigned long long begin = chunk * static_cast<unsigned long long>(worker);
    const unsigned long long end = std::min(candidates, begin + chunk);
    for (unsigned long long code = begin; code < end; ++code) {
      OpTable op = table_from_code(code, arity, carrier, len);
      if (commutes_with_all(op, gens)) found[static_cast<std::size_t>(worker)].push_back(std::move(op));
    }
  };
  if (threads == 1) {
    scan(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) pool.emplace_back(scan, w);
    for (auto& th : pool) th.join();
  }
  std::vector<OpTable> slice;
  for (auto& part : found)
    for (auto& op : part) slice.push_back(std::move(op));
  std::sort(slice.begin(), slice.end());
  return slice;
}

// Backtracking over partial tables. Cells are decided in increasing index
// order; commutation with each generator is compiled into instances
//   g(f[t_0], ..., f[t_{m-1}]) == f[target],
// one per tuple (t_0, ..., t_{m-1}) of cell indices, where target combines
// the decoded argument tuples through g. Once every participant cell of an
// instance is assigned, the instance fires: it checks the target if assigned,
// otherwise propagates the forced value.
class SliceSearch {
 public:
  SliceSearch(const std::vector<OpTable>& gens, int carrier, int arity,
              const CommutantOptions& options)
      : carrier_(carrier), len_(table_size(carrier, arity)), arity_(arity), options_(options) {
    cells_.assign(len_, -1);
    watchers_.assign(len_, {});
    for (const OpTable& g : gens) compile(g);
  }

  std::vector<OpTable> run() {
    // Nullary generators pin one cell each before the search starts.
    for (const auto& [cell, value] : pinned_)
      if (!assign(cell, value)) return {};  // contradictory constants: empty slice
    if (!propagate()) return {};
    search();
    std::sort(results_.begin(), results_.end());
    return std::move(results_);
  }

 private:
  struct Instance {
    const OpTable* gen = nullptr;
    std::vector<std::size_t> cells;  // distinct participant cells
    std::vector<std::size_t> args;   // argument cells in generator order (with repeats)
    std::size_t target = 0;
    int unassigned = 0;
  };

  void compile(const OpTable& g) {
    const int m = g.arity;
    if (m == 0) {
      const int c = g.table[0];
      std::vector<int> diag(static_cast<std::size_t>(arity_), c);
      pinned_.emplace_back(index_of(diag, carrier_), c);
      return;
    }
    std::vector<std::size_t> tuple(static_cast<std::size_t>(m), 0);
    std::vector<std::vector<int>> cols(static_cast<std::size_t>(m));
    std::vector<int> combined(static_cast<std::size_t>(arity_));
    std::vector<int> row(static_cast<std::size_t>(m));
    while (true) {
      for (int l = 0; l < m; ++l)
        cols[static_cast<std::size_t>(l)] = decode_index(tuple[static_cast<std::size_t>(l)], arity_, carrier_);
      for (int i = 0; i < arity_; ++i) {
        for (int l = 0; l < m; ++l) row[static_cast<std::size_t>(l)] = cols[static_cast<std::size_t>(l)][static_cast<std::size_t>(i)];
        combined[static_cast<std::size_t>(i)] = g.table[index_of(row, carrier_)];
      }
      Instance inst;
      inst.gen = &g;
      inst.args = tuple;
      inst.target = index_of(combined, carrier_);
      inst.cells = tuple;
      std::sort(inst.cells.begin(), inst.cells.end());
      inst.cells.erase(std::unique(inst.cells.begin(), inst.cells.end()), inst.cells.end());
      inst.unassigned = static_cast<int>(inst.cells.size());
      const std::size_t id = instances_.size();
      instances_.push_back(std::move(inst));
      for (std::size_t cell : instances_.back().cells) watchers_[cell].push_back(id);

      std::size_t d = 0;
      for (; d < tuple.size(); ++d) {
        if (++tuple[d] < len_) break;
        tuple[d] = 0;
      }
      if (d == tuple.size()) break;
    }
  }

  bool assign(std::size_t cell, int value) {
    if (cells_[cell] >= 0) return cells_[cell] == value;
    if (++nodes_ > options_.node_budget) throw IntractableSlice(arity_);
    cells_[cell] = value;
    trail_.push_back(cell);
    for (std::size_t id : watchers_[cell]) {
      Instance& inst = instances_[id];
      if (--inst.unassigned == 0) fire_queue_.push_back(id);
    }
    return true;
  }

  // Processes the pending fired instances; false on contradiction. The queue
  // approach keeps propagation iterative so deep chains cannot overflow.
  bool propagate() {
    while (!fire_queue_.empty()) {
      const std::size_t id = fire_queue_.back();
      fire_queue_.pop_back();
      const Instance& inst = instances_[id];
      if (inst.unassigned != 0) continue;  // stale entry from an undone branch
      std::vector<int> gargs(inst.args.size());
      for (std::size_t l = 0; l < inst.args.size(); ++l) gargs[l] = cells_[inst.args[l]];
      const int value = inst.gen->table[index_of(gargs, carrier_)];
      const int current = cells_[inst.target];
      if (current >= 0) {
        if (current != value) return false;
      } else if (!assign(inst.target, value)) {
        return false;
      }
    }
    return true;
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      const std::size_t cell = trail_.back();
      trail_.pop_back();
      cells_[cell] = -1;
      for (std::size_t id : watchers_[cell]) ++instances_[id].unassigned;
    }
    fire_queue_.clear();
  }

  void search() {
    std::size_t cell = 0;
    while (cell < len_ && cells_[cell] >= 0) ++cell;
    if (cell == len_) {
      OpTable op{arity_, carrier_, std::vector<int>(cells_.begin(), cells_.end())};
      results_.push_back(std::move(op));
      return;
    }
    for (int v = 0; v < carrier_; ++v) {
      const std::size_t mark = trail_.size();
      if (assign(cell, v) && propagate()) search();
      undo_to(mark);
    }
  }

  int carrier_;
  std::size_t len_;
  int arity_;
  CommutantOptions options_;
  std::vector<int> cells_;
  std::vector<Instance> instances_;
  std::vector<std::vector<std::size_t>> watchers_;
  std::vector<std::pair<std::size_t, int>> pinned_;
  std::vector<std::size_t> trail_;
  std::vector<std::size_t> fire_queue_;
  std::vector<OpTable> results_;
  std::size_t nodes_ = 0;
};

}  // namespace

std::vector<OpTable> commutant_slice(const std::vector<OpTable>& gens, int carrier, int arity,
                                     const CommutantOptions& options) {
  for (const OpTable& g : gens) {
    g.validate();
    if (g.carrier != carrier) throw std::invalid_argument("commutant generator carrier mismatch");
  }
  const std::size_t len = table_size(carrier, arity);
  unsigned long long candidates = 0;
  const bool countable =
      checked_pow(static_cast<unsigned long long>(carrier), len, candidates);
  switch (options.strategy) {
    case SliceStrategy::exhaustive:
      if (!countable || candidates > options.cap) throw EnumerationTooLarge(arity, options.cap);
      return exhaustive_slice(gens, carrier, arity, candidates, options);
    case SliceStrategy::backtracking:
      return SliceSearch(gens, carrier, arity, options).run();
    case SliceStrategy::automatic:
      break;
  }
  if (countable && candidates <= options.cap)
    return exhaustive_slice(gens, carrier, arity, candidates, options);
  return SliceSearch(gens, carrier, arity, options).run();
}

Theory commutant(const std::vector<OpTable>& gens, int carrier, int max_arity,
                 const Theory* ambient, const CommutantOptions& options) {
  if (ambient && ambient->carrier != carrier)
    throw std::invalid_argument("ambient theory carrier mismatch");
  if (ambient && ambient->max_arity < max_arity)
    throw std::invalid_argument("ambient theory arity bound too small");
  Theory t{carrier, max_arity, {}, {}};
  t.ops_by_arity.resize(static_cast<std::size_t>(max_arity) + 1);
  for (int n = 0; n <= max_arity; ++n) {
    auto& slice = t.ops_by_arity[static_cast<std::size_t>(n)];
    if (ambient) {
      for (const OpTable& op : ambient->slice(n))
        if (commutes_with_all(op, gens)) slice.push_back(op);
    } else {
      slice = commutant_slice(gens, carrier, n, options);
    }
  }
  if (options.assert_invariants) assert_clone(t);
  return t;
}

namespace {

std::vector<OpTable> member_ops(const Theory& t) {
  std::vector<OpTable> all;
  for (const auto& slice : t.ops_by_arity) all.insert(all.end(), slice.begin(), slice.end());
  return all;
}

}  // namespace

Theory double_commutant(const std::vector<OpTable>& gens, int carrier, int max_arity,
                        const Theory* ambient, const CommutantOptions& options) {
  const Theory first = commutant(gens, carrier, max_arity, ambient, options);
  return commutant(member_ops(first), carrier, max_arity, ambient, options);
}

bool is_saturated(const Theory& t, const Theory* ambient, const CommutantOptions& options) {
  const Theory dc = double_commutant(member_ops(t), t.carrier, t.max_arity, ambient, options);
  return equal_upto(t, dc, t.max_arity);
}

bool is_balanced(const Theory& t, const Theory* ambient, const CommutantOptions& options) {
  const Theory c = commutant(member_ops(t), t.carrier, t.max_arity, ambient, options);
  return equal_upto(t, c, t.max_arity);
}

bool theories_commute(const std::vector<OpTable>& gens_a, const std::vector<OpTable>& gens_b,
                      int carrier, const CommutantOptions& options) {
  bool cross = true;
  for (const OpTable& a : gens_a) {
    if (a.carrier != carrier) throw std::invalid_argument("theories_commute carrier mismatch");
    for (const OpTable& b : gens_b)
      if (!commutes(a, b)) {
        cross = false;
        break;
      }
    if (!cross) break;
  }

  // Membership route: every generator of B sits in the commutant of A. Only
  // feasible when each required slice fits the exhaustive cap; the cross
  // route alone decides otherwise.
  bool membership_feasible = true;
  int needed = 0;
  for (const OpTable& b : gens_b) needed = std::max(needed, b.arity);
  for (int n = 0; n <= needed && membership_feasible; ++n) {
    unsigned long long candidates = 0;
    if (!checked_pow(static_cast<unsigned long long>(carrier), table_size(carrier, n), candidates) ||
        candidates > options.cap)
      membership_feasible = false;
  }
  if (membership_feasible) {
    CommutantOptions opts = options;
    opts.assert_invariants = false;
    bool member = true;
    for (int n = 0; n <= needed && member; ++n) {
      std::vector<OpTable> slice = commutant_slice(gens_a, carrier, n, opts);
      for (const OpTable& b : gens_b)
        if (b.arity == n && !std::binary_search(slice.begin(), slice.end(), b)) member = false;
    }
    if (member != cross)
      throw std::logic_error("theory commutation routes disagree (generator pairs vs membership)");
  }
  return cross;
}

}  // namespace clones
