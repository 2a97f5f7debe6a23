#pragma once

#include <cstddef>
#include <vector>

#include "clones/ops.hpp"

namespace clones {

/// Default cap on full-slice enumerations: a slice is materialized only when
/// carrier^(carrier^arity) is at most this many tables.
inline constexpr std::size_t kDefaultEnumerationCap = std::size_t{1} << 20;

/// A concrete clone on a finite carrier, truncated at an arity bound: for each
/// arity n <= max_arity, a sorted duplicate-free slice of operation tables.
///
/// Invariants (see assert_clone): every slice is sorted and duplicate-free,
/// projections of each positive arity are present, nullary members lift to
/// constants at every arity within the bound, and the slices are closed under
/// superposition within the bound. `generators` is optional provenance; when
/// nonempty it generates the slices.
struct Theory {
  int carrier = 1;
  int max_arity = 3;
  std::vector<std::vector<OpTable>> ops_by_arity;  // index n in [0, max_arity]
  std::vector<OpTable> generators;

  const std::vector<OpTable>& slice(int arity) const;
  std::vector<std::size_t> arity_counts() const;

  /// Membership by binary search in the sorted slice. Throws
  /// std::invalid_argument when op.arity exceeds max_arity.
  bool contains(const OpTable& op) const;
};

/// All operations of each arity up to the bound. Refuses to materialize a
/// slice whose table count carrier^(carrier^n) exceeds the cap.
Theory full_theory(int carrier, int max_arity, std::size_t cap = kDefaultEnumerationCap);

/// The projections-only clone (empty generator set).
Theory projections_theory(int carrier, int max_arity);

/// True iff the arity-n slice of the full theory on this carrier has exactly
/// `count` tables, i.e. the slice is full.
bool slice_is_full(int carrier, int arity, std::size_t count);

/// Least clone containing the generators: per-arity fixpoint closure under
/// superposition, seeded with projections and with the constants produced by
/// nullary members. No implicit constants: the nullary slice is nonempty only
/// if a nullary generator (or a nullary value reachable from one) exists.
Theory clone_generate(const std::vector<OpTable>& generators, int carrier, int max_arity,
                      std::size_t cap = kDefaultEnumerationCap);

/// Per-arity slice equality for all arities up to the bound.
bool equal_upto(const Theory& a, const Theory& b, int max_arity);

/// Per-arity subset test for all arities up to the bound.
bool subset_upto(const Theory& a, const Theory& b, int max_arity);

/// The generators when provenance is present, otherwise every operation of
/// every arity within the bound.
std::vector<OpTable> generating_ops(const Theory& t);

/// Commutativity via generating_ops: every pair (including an op with itself)
/// commutes. With generator provenance this is the cheap mode; without it the
/// check degrades to all pairs of operations.
bool is_commutative(const Theory& t);

/// Exhaustive mode: every pair of operations within the bound commutes.
bool is_commutative_all_pairs(const Theory& t);

/// Per arity, the members of t that commute with every generating operation.
Theory center(const Theory& t);

/// Verifies the Theory invariants, throwing std::logic_error on violation:
/// slice structure, projections, constant lifting, superposition closure
/// (slices that are full skip the closure scan), and generator membership.
void assert_clone(const Theory& t);

}  // namespace clones
