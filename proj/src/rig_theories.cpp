#include "clones/rig_theories.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace clones {

OpTable op_of_row(const Rig& r, const std::vector<int>& row) {
  for (int c : row)
    if (c < 0 || c >= r.size) throw std::invalid_argument("row entry out of rig range");
  const int n = static_cast<int>(row.size());
  OpTable op{n, r.size, std::vector<int>(table_size(r.size, n))};
  std::vector<int> args(row.size());
  for (std::size_t t = 0; t < op.table.size(); ++t) {
    std::size_t rem = t;
    for (auto& a : args) {
      a = static_cast<int>(rem % static_cast<std::size_t>(r.size));
      rem /= static_cast<std::size_t>(r.size);
    }
    int acc = r.zero;
    for (std::size_t i = 0; i < row.size(); ++i) acc = rig_add(r, acc, rig_mul(r, row[i], args[i]));
    op.table[t] = acc;
  }
  return op;
}

namespace {

// Calls fn with every row in R^n, reusing one buffer.
template <typename Fn>
void for_each_row(int rig_size, int n, Fn&& fn) {
  std::vector<int> row(static_cast<std::size_t>(n), 0);
  while (true) {
    fn(row);
    int d = 0;
    for (; d < n; ++d) {
      if (++row[static_cast<std::size_t>(d)] < rig_size) break;
      row[static_cast<std::size_t>(d)] = 0;
    }
    if (d == n) break;
  }
}

std::vector<OpTable> all_member_ops(const Theory& t) {
  std::vector<OpTable> all;
  for (const auto& slice : t.ops_by_arity) all.insert(all.end(), slice.begin(), slice.end());
  return all;
}

}  // namespace

Theory mat_theory(const Rig& r, int max_arity) {
  validate_rig(r);
  Theory t{r.size, max_arity, {}, {}};
  t.ops_by_arity.resize(static_cast<std::size_t>(max_arity) + 1);
  for (int n = 0; n <= max_arity; ++n) {
    std::set<OpTable> slice;
    for_each_row(r.size, n, [&](const std::vector<int>& row) { slice.insert(op_of_row(r, row)); });
    t.ops_by_arity[static_cast<std::size_t>(n)].assign(slice.begin(), slice.end());
  }
  t.generators.push_back(op_of_row(r, {}));
  for (int c = 0; c < r.size; ++c) t.generators.push_back(op_of_row(r, {c}));
  if (max_arity >= 2) t.generators.push_back(op_of_row(r, {r.one, r.one}));
  return t;
}

Theory mat_aff_theory(const Rig& r, int max_arity) {
  validate_rig(r);
  Theory t{r.size, max_arity, {}, {}};
  t.ops_by_arity.resize(static_cast<std::size_t>(max_arity) + 1);
  for (int n = 0; n <= max_arity; ++n) {
    std::set<OpTable> slice;
    for_each_row(r.size, n, [&](const std::vector<int>& row) {
      if (rig_sum(r, row) == r.one) slice.insert(op_of_row(r, row));
    });
    t.ops_by_arity[static_cast<std::size_t>(n)].assign(slice.begin(), slice.end());
  }
  t.generators = all_member_ops(t);
  return t;
}

Theory pointed_mod_theory(const Rig& r, int max_arity) {
  validate_rig(r);
  Theory t{r.size, max_arity, {}, {}};
  t.ops_by_arity.resize(static_cast<std::size_t>(max_arity) + 1);
  for (int n = 0; n <= max_arity; ++n) {
    std::set<OpTable> slice;
    for (int c = 0; c < r.size; ++c) {
      for_each_row(r.size, n, [&](const std::vector<int>& row) {
        OpTable op{n, r.size, std::vector<int>(table_size(r.size, n))};
        std::vector<int> args(row.size());
        for (std::size_t t2 = 0; t2 < op.table.size(); ++t2) {
          std::size_t rem = t2;
          for (auto& a : args) {
            a = static_cast<int>(rem % static_cast<std::size_t>(r.size));
            rem /= static_cast<std::size_t>(r.size);
          }
          int acc = c;
          for (std::size_t i = 0; i < row.size(); ++i)
            acc = rig_add(r, acc, rig_mul(r, args[i], row[i]));
          op.table[t2] = acc;
        }
        slice.insert(std::move(op));
      });
    }
    t.ops_by_arity[static_cast<std::size_t>(n)].assign(slice.begin(), slice.end());
  }
  t.generators = all_member_ops(t);
  return t;
}

bool mat_rows_collide(const Rig& r, int max_arity) {
  for (int n = 0; n <= max_arity; ++n) {
    std::set<OpTable> tables;
    std::size_t rows = 0;
    for_each_row(r.size, n, [&](const std::vector<int>& row) {
      ++rows;
      tables.insert(op_of_row(r, row));
    });
    if (tables.size() != rows) return true;
  }
  return false;
}

}  // namespace clones
