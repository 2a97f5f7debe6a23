#pragma once

#include <vector>

#include "clones/theory.hpp"

namespace clones {

/// A value of the free-algebra functor of a theory on the finite set
/// {0, ..., set_size-1}: an operation together with an anchor assigning each
/// of its variables an element of the set.
///
/// Canonical display form (produced by canonicalize): the anchor is injective
/// and order-preserving onto its image. Equality of values is decided in
/// full-support normal form (full_support), which pushes the operation to the
/// identity anchor of arity set_size; dummy variables are deliberately not
/// eliminated by canonicalize.
struct FreeElement {
  OpTable op;
  std::vector<int> anchor;  // op.arity entries in [0, set_size)
  int set_size = 0;

  auto operator<=>(const FreeElement&) const = default;
};

/// Factors the anchor as a surjection followed by an order-preserving
/// injection, merging variables of the operation along the surjection.
/// The operation must belong to the theory when its arity is within the
/// bound; arities above the bound are accepted unchecked (they arise from
/// Kronecker products of bounded operations).
FreeElement canonicalize(const Theory& t, const OpTable& op, const std::vector<int>& anchor,
                         int set_size);

/// The identity-anchor normal form at arity set_size: the unique
/// representative used for all equality tests.
FreeElement full_support(const Theory& t, const FreeElement& e);

/// All distinct values on a set of the given size: one full-support element
/// per operation in the theory's slice of that arity.
std::vector<FreeElement> monad_apply(const Theory& t, int set_size);

/// The value of a single point: the unary identity anchored at x.
FreeElement unit(const Theory& t, int set_size, int x);

/// Functorial action: relabel the anchor along f (given as a table over the
/// source set) and canonicalize.
FreeElement map_element(const Theory& t, const std::vector<int>& f, int target_size,
                        const FreeElement& e);

/// Substitution: an outer operation of the theory applied to values over a
/// common set. Implements the multiplication of the induced monad.
FreeElement mult(const Theory& t, const OpTable& outer, const std::vector<FreeElement>& args);

/// Kleisli extension: e lives over X, and k assigns each point of X a value
/// over Y; the result lives over Y. unit and bind satisfy the monad laws.
FreeElement kleisli_bind(const Theory& t, const FreeElement& e, const std::vector<FreeElement>& k,
                         int target_size);

/// Kronecker products of values: for a over V and b over W, a value over
/// V x W (row-major pairing), formed with kron1 resp. kron2 of the
/// full-support operations.
FreeElement kock_kron1(const Theory& t, const FreeElement& a, const FreeElement& b);
FreeElement kock_kron2(const Theory& t, const FreeElement& a, const FreeElement& b);

/// True iff the two product routes agree elementwise between the two
/// theories' values on all sets of size at most the bound.
bool monads_commute(const Theory& a, const Theory& b, int bound);

/// monads_commute of a theory with itself.
bool monad_is_commutative(const Theory& t, int bound);

}  // namespace clones
