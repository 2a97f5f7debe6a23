#pragma once

#include <cstddef>
#include <vector>

#include "clones/theory.hpp"

namespace clones {

enum class SliceStrategy {
  automatic,     // exhaustive when the candidate space fits the cap, else backtracking
  exhaustive,    // force full enumeration (errors above the cap)
  backtracking,  // force constraint-propagating search
};

struct CommutantOptions {
  std::size_t cap = kDefaultEnumerationCap;  // exhaustive candidate-space bound
  std::size_t node_budget = 50'000'000;      // backtracking assignment bound
  SliceStrategy strategy = SliceStrategy::automatic;
  int threads = 1;             // parallel chunks of the exhaustive scan
  bool assert_invariants = true;  // verify the result is a clone
};

/// Conjunction of commutes(op, g) over the generators.
bool commutes_with_all(const OpTable& op, const std::vector<OpTable>& gens);

/// One commutant slice: every table of the given arity commuting with all
/// generators. Sorted. Throws IntractableSlice when the budgets run out.
std::vector<OpTable> commutant_slice(const std::vector<OpTable>& gens, int carrier, int arity,
                                     const CommutantOptions& options = {});

/// The commutant clone of the generators up to the arity bound; when an
/// ambient theory is given, each slice is intersected with the ambient slice
/// (computed by filtering the ambient directly). The result is verified to
/// satisfy the Theory invariants unless options turn that off.
Theory commutant(const std::vector<OpTable>& gens, int carrier, int max_arity,
                 const Theory* ambient = nullptr, const CommutantOptions& options = {});

/// commutant of the commutant's member operations.
Theory double_commutant(const std::vector<OpTable>& gens, int carrier, int max_arity,
                        const Theory* ambient = nullptr, const CommutantOptions& options = {});

/// Per-arity equality of t with its double commutant (taken over t's member
/// operations), up to t.max_arity.
bool is_saturated(const Theory& t, const Theory* ambient = nullptr,
                  const CommutantOptions& options = {});

/// Per-arity equality of t with its commutant.
bool is_balanced(const Theory& t, const Theory* ambient = nullptr,
                 const CommutantOptions& options = {});

/// True iff every generator of A commutes with every generator of B. Also
/// computes the membership route (B's generators inside commutant(A)) when
/// that is feasible under the options, and throws std::logic_error if the two
/// routes ever disagree.
bool theories_commute(const std::vector<OpTable>& gens_a, const std::vector<OpTable>& gens_b,
                      int carrier, const CommutantOptions& options = {});

}  // namespace clones
