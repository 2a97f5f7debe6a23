#pragma once

#include <string>
#include <vector>

#include "clones/rig.hpp"

namespace clones {

/// Finite abelian group by its addition table.
struct FinAbGroup {
  int size = 0;
  std::vector<std::vector<int>> add;  // size x size
  int zero = 0;
  std::vector<std::string> labels;

  auto operator<=>(const FinAbGroup&) const = default;
};

/// Throws std::invalid_argument unless (add, zero) is a commutative group.
void validate_group(const FinAbGroup& g);

/// Built-in groups: "Z2", "Z4", "Z2xZ2", "Z2^3", "Z6". Direct products are
/// encoded little-endian: (a, b) in Z2 x Z2 is a + 2b.
FinAbGroup builtin_group(const std::string& name);
std::vector<std::string> builtin_group_names();

/// An endomorphism of a finite abelian group, as a value table.
using Endo = std::vector<int>;

/// True iff f fixes zero and is additive.
bool is_additive(const FinAbGroup& g, const Endo& f);

/// (f * g)(x) = f(g(x)).
Endo compose(const Endo& f, const Endo& g);

/// The endomorphism ring of a finite abelian group: all additive self-maps,
/// with pointwise addition and composition as multiplication, in the order
/// (f * g)(x) = f(g(x)).
///
/// Elementary abelian groups are handled structurally (a basis is extracted
/// and endomorphisms are matrices over the prime field); other groups up to
/// `enumeration_bound` elements use pruned enumeration: images of a greedy
/// generating set are enumerated and each candidate extension is checked for
/// additivity.
struct EndRing {
  FinAbGroup group;
  std::vector<Endo> elements;  // sorted by table
  Rig ring;                    // carrier indexes into `elements`

  int index_of_endo(const Endo& f) const;  // -1 when absent
};

EndRing end_ring(const FinAbGroup& m, int enumeration_bound = 16);

/// Elements of `ring` commuting with every member of `subset` (indices).
/// The result is verified to be a unital subring closed under the ambient
/// operations (and additive inverses when the ambient is a ring).
std::vector<int> centralizer(const Rig& ring, const std::vector<int>& subset);

/// The subring generated by a seed (always includes zero and one).
std::vector<int> subring_closure(const Rig& ring, const std::vector<int>& seed);

/// A rig on a subring's elements, reindexed by their position in `elements`.
Rig subring_rig(const Rig& ambient, const std::vector<int>& elements);

/// A ring acting on a finite abelian group by additive endomorphisms.
struct ModuleAction {
  Rig ring;
  FinAbGroup group;
  std::vector<Endo> action;  // one endomorphism per ring element
};

/// Throws unless each action table is additive and the action is a unital
/// ring homomorphism into the endomorphism ring.
void validate_action(const ModuleAction& a);

/// True iff distinct ring elements act by distinct endomorphisms.
bool action_is_faithful(const ModuleAction& a);

/// The module commutant: the centralizer of the action's image inside the
/// endomorphism ring of the group. Returns the ambient ring, the image, and
/// the commutant, all indexed in the ambient.
struct ModuleCommutant {
  EndRing ambient;
  std::vector<int> image;       // indices of the action's image
  std::vector<int> commutant;   // indices of the centralizer of the image
};

ModuleCommutant module_commutant(const ModuleAction& a, int enumeration_bound = 16);

/// The centralizer of the module commutant inside the endomorphism ring.
std::vector<int> double_centralizer(const ModuleCommutant& mc);

/// True iff the double centralizer equals the action's image and the action
/// is faithful.
bool has_double_centralizer_property(const ModuleAction& a, int enumeration_bound = 16);

/// Report for the regular-representation commutant of a finite ring.
struct OppositeWitness {
  std::size_t centralizer_size = 0;
  bool centralizer_is_right_multiplications = false;
  bool anti_isomorphism_valid = false;  // r -> (. r) is injective, additive,
                                        // unital, and reverses products

  bool holds() const { return centralizer_is_right_multiplications && anti_isomorphism_valid; }
};

/// Computes the centralizer of the left multiplications inside the
/// endomorphism ring of the additive group, checks it equals the right
/// multiplications, and validates r -> (. r) as an anti-isomorphism.
OppositeWitness regular_commutant_is_opposite(const Rig& ring, int enumeration_bound = 16);

/// Self-centralizing test: centralizer(ring, s) == s. `s` must be a subring.
bool is_maximal_commutative(const Rig& ring, const std::vector<int>& s);

/// Direct route for cross-checks: no element outside s generates, together
/// with s, a commutative subring.
bool is_maximal_commutative_direct(const Rig& ring, const std::vector<int>& s);

}  // namespace clones
