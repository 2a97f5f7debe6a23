#pragma once

#include <string>
#include <vector>

namespace clones {

/// Finite rig (semiring) by explicit tables: (add, zero) a commutative
/// monoid, (mul, one) a monoid, multiplication distributing over addition on
/// both sides, zero absorbing on both sides.
struct Rig {
  int size = 0;
  std::vector<std::vector<int>> add;  // size x size
  std::vector<std::vector<int>> mul;  // size x size
  int zero = 0;
  int one = 0;
  std::vector<std::string> labels;  // empty, or exactly `size` distinct names

  auto operator<=>(const Rig&) const = default;
};

/// One failed axiom instance: which law broke and at which elements.
struct RigViolation {
  std::string axiom;
  std::vector<int> witness;

  std::string render(const Rig& r) const;
};

/// Exhaustive check of the rig axioms; empty result means valid.
std::vector<RigViolation> check_rig_axioms(const Rig& r);

/// Throws std::invalid_argument describing the first violation, if any.
void validate_rig(const Rig& r);

/// True iff every element has an additive inverse (the rig is a ring).
bool is_ring(const Rig& r);

/// True iff multiplication is commutative.
bool mul_commutative(const Rig& r);

/// Same additive structure, multiplication transposed.
Rig opposite(const Rig& r);

/// Built-in rigs: "Z2", "Z3", "Z4", "bool2", "F4", "UT2_F2".
/// bool2 is ({0,1}, or, 0, and, 1). F4 is the 4-element field with elements
/// 0, 1, w, w+1 encoded as 0..3 (addition is xor, w*w = w+1). UT2_F2 is the
/// 8-element ring of upper-triangular 2x2 matrices over the 2-element field,
/// [[a, b], [0, d]] encoded as a + 2b + 4d; it is the smallest handy witness
/// of a noncommutative multiplication.
Rig builtin_rig(const std::string& name);
std::vector<std::string> builtin_rig_names();

/// Rig element helpers (unchecked index arithmetic).
inline int rig_add(const Rig& r, int a, int b) { return r.add[a][b]; }
inline int rig_mul(const Rig& r, int a, int b) { return r.mul[a][b]; }

/// Sum of a sequence of rig elements, folded left from zero.
int rig_sum(const Rig& r, const std::vector<int>& xs);

/// Dense matrix over a rig, row-major entries.
struct RMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<int> entries;  // rows*cols, entry (r, c) at r*cols + c

  auto operator<=>(const RMatrix&) const = default;

  int at(int row, int col) const { return entries[static_cast<std::size_t>(row) * cols + col]; }
};

/// Classical matrix Kronecker product with this library's pairing: for
/// X (j' x j) and Y (k' x k), the result is (j'k') x (jk) with the entry at
/// output row (i', l') = i'*k' + l' and column (i, l) = i*k + l equal to
/// Y[l', l] * X[i', i]. For single-row matrices this matches kron1 of the
/// corresponding row operations.
RMatrix matrix_kronecker(const Rig& r, const RMatrix& x, const RMatrix& y);

}  // namespace clones
