#pragma once

#include <vector>

#include "clones/rig.hpp"
#include "clones/theory.hpp"

namespace clones {

/// The n-ary operation x -> sum_i row[i] * x_i on carrier R (left
/// coefficients). The empty row gives the nullary zero.
OpTable op_of_row(const Rig& r, const std::vector<int>& row);

/// The right-module matrix theory of R: at each arity n <= max_arity, the
/// operations of all coefficient rows in R^n, deduplicated as tables.
/// Generator provenance is the small set {nullary zero, the unary scalars,
/// binary addition}, which generates every row by superposition.
Theory mat_theory(const Rig& r, int max_arity);

/// The affine subtheory: only rows whose rig sum is 1. The nullary slice is
/// empty (an empty sum is 0). Generators are all member operations.
Theory mat_aff_theory(const Rig& r, int max_arity);

/// The pointed-module theory on carrier R with point 1: at arity n, the
/// operations x -> c + sum_i x_i * row[i] (right coefficients) over all
/// (c, row) in R^{n+1}. Generators are all member operations.
Theory pointed_mod_theory(const Rig& r, int max_arity);

/// True iff two distinct rows of some arity <= max_arity collapse to one
/// table (never the case for the built-in rigs).
bool mat_rows_collide(const Rig& r, int max_arity);

}  // namespace clones
