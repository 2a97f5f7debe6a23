#include "clones/ops.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

namespace clones {

void Carrier::validate() const {
  if (size < 1) throw std::invalid_argument("carrier size must be at least 1");
  if (!labels.empty()) {
    if (static_cast<int>(labels.size()) != size)
      throw std::invalid_argument("carrier labels must match the carrier size");
    std::set<std::string> seen(labels.begin(), labels.end());
    if (static_cast<int>(seen.size()) != size)
      throw std::invalid_argument("carrier labels must be distinct");
  }
}

void OpTable::validate() const {
  if (arity < 0) throw std::invalid_argument("operation arity must be nonnegative");
  if (carrier < 1) throw std::invalid_argument("operation carrier must be at least 1");
  if (table.size() != table_size(carrier, arity))
    throw std::invalid_argument("operation table length must equal carrier^arity");
  for (int v : table)
    if (v < 0 || v >= carrier)
      throw std::invalid_argument("operation table entry out of range");
}

void OpTuple::validate() const {
  if (in_arity < 0) throw std::invalid_argument("tuple input arity must be nonnegative");
  for (const OpTable& c : components) {
    c.validate();
    if (c.arity != in_arity || c.carrier != carrier)
      throw std::invalid_argument("tuple components must share input arity and carrier");
  }
}

bool checked_pow(unsigned long long base, unsigned long long exp, unsigned long long& out) {
  out = 1;
  for (unsigned long long i = 0; i < exp; ++i) {
    if (base != 0 && out > std::numeric_limits<unsigned long long>::max() / base) return false;
    out *= base;
  }
  return true;
}

std::size_t table_size(int carrier, int arity) {
  unsigned long long n = 0;
  if (!checked_pow(static_cast<unsigned long long>(carrier), static_cast<unsigned long long>(arity), n) ||
      n > std::numeric_limits<std::size_t>::max())
    throw std::overflow_error("operation table size does not fit in size_t");
  return static_cast<std::size_t>(n);
}

std::size_t index_of(const std::vector<int>& args, int carrier) {
  std::size_t index = 0, stride = 1;
  for (int a : args) {
    index += static_cast<std::size_t>(a) * stride;
    stride *= static_cast<std::size_t>(carrier);
  }
  return index;
}

std::vector<int> decode_index(std::size_t index, int arity, int carrier) {
  std::vector<int> args(static_cast<std::size_t>(arity));
  for (int i = 0; i < arity; ++i) {
    args[static_cast<std::size_t>(i)] = static_cast<int>(index % static_cast<std::size_t>(carrier));
    index /= static_cast<std::size_t>(carrier);
  }
  return args;
}

namespace {

// Unchecked little-endian decode into a preallocated buffer.
void decode_into(std::size_t index, int carrier, std::vector<int>& args) {
  for (int& a : args) {
    a = static_cast<int>(index % static_cast<std::size_t>(carrier));
    index /= static_cast<std::size_t>(carrier);
  }
}

}  // namespace

int eval(const OpTable& op, const std::vector<int>& args) {
  if (static_cast<int>(args.size()) != op.arity)
    throw std::invalid_argument("eval: argument count does not match the operation arity");
  for (int a : args)
    if (a < 0 || a >= op.carrier) throw std::invalid_argument("eval: argument out of carrier range");
  return op.table[index_of(args, op.carrier)];
}

OpTable projection(int arity, int index, int carrier) {
  if (arity < 1) throw std::invalid_argument("projection arity must be at least 1");
  if (index < 0 || index >= arity) throw std::invalid_argument("projection index must be below the arity");
  if (carrier < 1) throw std::invalid_argument("projection carrier must be at least 1");
  OpTable op{arity, carrier, std::vector<int>(table_size(carrier, arity))};
  std::vector<int> args(static_cast<std::size_t>(arity));
  for (std::size_t t = 0; t < op.table.size(); ++t) {
    decode_into(t, carrier, args);
    op.table[t] = args[static_cast<std::size_t>(index)];
  }
  return op;
}

OpTable constant_op(int arity, int value, int carrier) {
  if (value < 0 || value >= carrier) throw std::invalid_argument("constant value out of carrier range");
  return OpTable{arity, carrier, std::vector<int>(table_size(carrier, arity), value)};
}

OpTable superpose(const OpTable& outer, const std::vector<OpTable>& inners) {
  if (outer.arity < 1)
    throw std::invalid_argument(
        "superpose with a nullary outer has no determined result arity; use constant_op");
  if (static_cast<int>(inners.size()) != outer.arity)
    throw std::invalid_argument("superpose: inner count must equal the outer arity");
  const int m = inners.front().arity;
  for (const OpTable& g : inners)
    if (g.arity != m || g.carrier != outer.carrier)
      throw std::invalid_argument("superpose: inners must share arity and carrier with the outer");
  const int s = outer.carrier;
  OpTable out{m, s, std::vector<int>(table_size(s, m))};
  std::vector<int> oargs(static_cast<std::size_t>(outer.arity));
  for (std::size_t t = 0; t < out.table.size(); ++t) {
    for (std::size_t i = 0; i < inners.size(); ++i) oargs[i] = inners[i].table[t];
    out.table[t] = outer.table[index_of(oargs, s)];
  }
  return out;
}

OpTable substitute_vars(const OpTable& op, const std::vector<int>& var_map, int new_arity) {
  if (static_cast<int>(var_map.size()) != op.arity)
    throw std::invalid_argument("substitute_vars: map length must equal the operation arity");
  for (int v : var_map)
    if (v < 0 || v >= new_arity) throw std::invalid_argument("substitute_vars: variable index out of range");
  const int s = op.carrier;
  OpTable out{new_arity, s, std::vector<int>(table_size(s, new_arity))};
  std::vector<int> args(static_cast<std::size_t>(new_arity));
  std::vector<int> oargs(static_cast<std::size_t>(op.arity));
  for (std::size_t t = 0; t < out.table.size(); ++t) {
    decode_into(t, s, args);
    for (std::size_t i = 0; i < var_map.size(); ++i)
      oargs[i] = args[static_cast<std::size_t>(var_map[i])];
    out.table[t] = op.table[index_of(oargs, s)];
  }
  return out;
}

OpTable kron1(const OpTable& mu, const OpTable& nu) {
  if (mu.carrier != nu.carrier) throw std::invalid_argument("kron1: carrier mismatch");
  const int s = mu.carrier, j = mu.arity, k = nu.arity;
  OpTable out{j * k, s, std::vector<int>(table_size(s, j * k))};
  std::vector<int> x(static_cast<std::size_t>(j) * static_cast<std::size_t>(k));
  std::vector<int> margs(static_cast<std::size_t>(j)), nargs(static_cast<std::size_t>(k));
  for (std::size_t t = 0; t < out.table.size(); ++t) {
    decode_into(t, s, x);
    for (int l = 0; l < k; ++l) {
      for (int i = 0; i < j; ++i)
        margs[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i) * k + static_cast<std::size_t>(l)];
      nargs[static_cast<std::size_t>(l)] = mu.table[index_of(margs, s)];
    }
    out.table[t] = nu.table[index_of(nargs, s)];
  }
  return out;
}

OpTable kron2(const OpTable& mu, const OpTable& nu) {
  if (mu.carrier != nu.carrier) throw std::invalid_argument("kron2: carrier mismatch");
  const int s = mu.carrier, j = mu.arity, k = nu.arity;
  OpTable out{j * k, s, std::vector<int>(table_size(s, j * k))};
  std::vector<int> x(static_cast<std::size_t>(j) * static_cast<std::size_t>(k));
  std::vector<int> margs(static_cast<std::size_t>(j)), nargs(static_cast<std::size_t>(k));
  for (std::size_t t = 0; t < out.table.size(); ++t) {
    decode_into(t, s, x);
    for (int i = 0; i < j; ++i) {
      for (int l = 0; l < k; ++l)
        nargs[static_cast<std::size_t>(l)] = x[static_cast<std::size_t>(i) * k + static_cast<std::size_t>(l)];
      margs[static_cast<std::size_t>(i)] = nu.table[index_of(nargs, s)];
    }
    out.table[t] = mu.table[index_of(margs, s)];
  }
  return out;
}

OpTuple kron1_multi(const OpTuple& mu, const OpTuple& nu) {
  if (mu.carrier != nu.carrier) throw std::invalid_argument("kron1_multi: carrier mismatch");
  OpTuple out{mu.in_arity * nu.in_arity, mu.carrier, {}};
  out.components.reserve(mu.components.size() * nu.components.size());
  for (const OpTable& a : mu.components)
    for (const OpTable& b : nu.components) out.components.push_back(kron1(a, b));
  return out;
}

OpTuple kron2_multi(const OpTuple& mu, const OpTuple& nu) {
  if (mu.carrier != nu.carrier) throw std::invalid_argument("kron2_multi: carrier mismatch");
  OpTuple out{mu.in_arity * nu.in_arity, mu.carrier, {}};
  out.components.reserve(mu.components.size() * nu.components.size());
  for (const OpTable& a : mu.components)
    for (const OpTable& b : nu.components) out.components.push_back(kron2(a, b));
  return out;
}

bool commutes(const OpTable& mu, const OpTable& nu) {
  if (mu.carrier != nu.carrier) throw std::invalid_argument("commutes: carrier mismatch");
  return kron1(mu, nu) == kron2(mu, nu);
}

OpTable transpose_vars(const OpTable& op, int j, int k) {
  if (j < 0 || k < 0 || op.arity != j * k)
    throw std::invalid_argument("transpose_vars: operation arity must equal j*k");
  const int s = op.carrier;
  OpTable out{op.arity, s, std::vector<int>(op.table.size())};
  std::vector<int> y(static_cast<std::size_t>(op.arity)), x(static_cast<std::size_t>(op.arity));
  for (std::size_t t = 0; t < out.table.size(); ++t) {
    decode_into(t, s, y);
    for (int i = 0; i < j; ++i)
      for (int l = 0; l < k; ++l)
        x[static_cast<std::size_t>(i) * k + static_cast<std::size_t>(l)] =
            y[static_cast<std::size_t>(l) * j + static_cast<std::size_t>(i)];
    out.table[t] = op.table[index_of(x, s)];
  }
  return out;
}

}  // namespace clones
