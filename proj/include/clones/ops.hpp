#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace clones {

/// Finite carrier {0, ..., size-1} with optional element labels.
struct Carrier {
  int size = 1;
  std::vector<std::string> labels;  // empty, or exactly `size` distinct names

  /// Throws std::invalid_argument on a non-positive size or bad labels.
  void validate() const;
};

/// Single-output finitary operation on {0, ..., carrier-1}, stored as a dense
/// value table.
///
/// Indexing convention (used everywhere in this library): the argument tuple
/// (a_0, ..., a_{n-1}) lives at index sum_i a_i * carrier^i (little-endian
/// mixed radix). For an operation of arity j*k viewed as acting on a j-by-k
/// variable grid, the variable pair (i, l) with i < j, l < k sits at position
/// i*k + l (row-major).
struct OpTable {
  int arity = 0;
  int carrier = 1;
  std::vector<int> table;  // length carrier^arity, entries in [0, carrier)

  auto operator<=>(const OpTable&) const = default;

  /// Throws std::invalid_argument if the table shape or entries are wrong.
  void validate() const;
};

/// Tuple of operations of a common input arity over one carrier, i.e. a map
/// S^in_arity -> S^{components.size()}.
struct OpTuple {
  int in_arity = 0;
  int carrier = 1;
  std::vector<OpTable> components;

  auto operator<=>(const OpTuple&) const = default;

  int out_arity() const { return static_cast<int>(components.size()); }
  void validate() const;
};

/// base^exp if it fits in unsigned long long, otherwise 0 with ok = false.
bool checked_pow(unsigned long long base, unsigned long long exp, unsigned long long& out);

/// carrier^arity as a table length; throws std::overflow_error if it does not
/// fit in size_t.
std::size_t table_size(int carrier, int arity);

/// Little-endian mixed-radix index of an argument tuple.
std::size_t index_of(const std::vector<int>& args, int carrier);

/// Inverse of index_of: the argument tuple at a table index.
std::vector<int> decode_index(std::size_t index, int arity, int carrier);

/// Applies an operation to an argument tuple. Validates shape and ranges.
int eval(const OpTable& op, const std::vector<int>& args);

/// The i-th projection of the given arity: eval(result, a) = a_i.
OpTable projection(int arity, int index, int carrier);

/// The constant operation of the given arity with the given value.
OpTable constant_op(int arity, int value, int carrier);

/// result(a) = outer(inners_0(a), ..., inners_{n-1}(a)) for every tuple a of
/// the inners' common arity. The outer arity must be at least 1: with a
/// nullary outer the result arity is not determined by the inputs; lift
/// nullary operations with constant_op instead.
OpTable superpose(const OpTable& outer, const std::vector<OpTable>& inners);

/// result(a) = op(a[var_map[0]], ..., a[var_map[n-1]]) at the new arity.
/// Generalizes substitution of projections; handles nullary ops directly.
OpTable substitute_vars(const OpTable& op, const std::vector<int>& var_map, int new_arity);

/// First Kronecker product: arity j*k, with mu applied along the j-direction
/// in each of the k columns, then nu across the column values:
/// result(x) = nu( l -> mu( i -> x[i*k + l] ) ).
OpTable kron1(const OpTable& mu, const OpTable& nu);

/// Second Kronecker product: nu along the rows first, then mu:
/// result(x) = mu( i -> nu( l -> x[i*k + l] ) ).
OpTable kron2(const OpTable& mu, const OpTable& nu);

/// Componentwise Kronecker products of operation tuples; the output component
/// at pair (i', l') is kron1 (resp. kron2) of mu[i'] and nu[l'], placed at
/// position i'*k' + l'.
OpTuple kron1_multi(const OpTuple& mu, const OpTuple& nu);
OpTuple kron2_multi(const OpTuple& mu, const OpTuple& nu);

/// True iff kron1(mu, nu) and kron2(mu, nu) are equal as tables; equivalently,
/// for every j-by-k argument matrix, applying mu columnwise then nu agrees
/// with applying nu rowwise then mu.
bool commutes(const OpTable& mu, const OpTable& nu);

/// Variable transposition: for op of arity j*k, result(y) = op(x) where
/// x[i*k + l] = y[l*j + i]. Satisfies kron2(mu, nu) =
/// transpose_vars(kron1(nu, mu), k, j).
OpTable transpose_vars(const OpTable& op, int j, int k);

}  // namespace clones
