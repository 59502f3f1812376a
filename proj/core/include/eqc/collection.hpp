#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eqc/character.hpp"
#include "eqc/group.hpp"
#include "eqc/pic_lattice.hpp"

namespace eqc {

/// One object of an exceptional collection. The block index groups pairwise
/// orthogonal objects; blocks must be listed in nondecreasing order. The
/// optional weight is the central weight of the chosen twisted linearization
/// (0 when no twist is in play). The numerical class is present exactly when
/// the collection carries a surface lattice.
struct ExcObject {
    std::string label;
    int block = 0;
    std::optional<KClass> kclass;
    std::optional<int> weight;
};

/// Graded hom data between two objects: cohomological degree -> character of
/// the group the collection's hom extension describes. Degrees absent from
/// the map are zero; an empty map means all hom spaces vanish.
using HomGrading = std::map<int, Character>;

/// A numerically exceptional collection with optional surface classes and
/// optional equivariant hom data.
///
/// homchars records what is *known*: a (p, q) key present means the full
/// graded hom space Hom*(objects[p], objects[q]) is the recorded grading; a
/// key absent means the hom space is undetermined. All recorded characters
/// live on conjugacy classes of hom_ext->bar.
struct ExcCollection {
    std::string name;
    std::optional<PicLattice> lat;
    std::vector<ExcObject> objects;
    CentralExtPtr hom_ext;
    std::map<std::pair<int, int>, HomGrading> homchars;

    int size() const { return static_cast<int>(objects.size()); }

    /// Index of the object with the given label. Throws InvalidInput.
    int index_of(const std::string& label) const;
};

/// Structural validation: nonempty, unique labels, nondecreasing nonnegative
/// blocks, classes all present or all absent (present requires a lattice of
/// matching rank), hom data on the hom extension with weight tags consistent
/// with the objects' weight tags. Throws InvalidInput or InconsistentWeights.
void validate_collection(const ExcCollection& C);

/// Euler-pairing checks against the collection's numerical classes. When the
/// collection has no classes the pairing checks are vacuous and `applicable`
/// is false; hom gradings recorded for backward or same-block pairs are
/// still required to vanish.
struct NumericCheck {
    bool applicable = false;
    bool objects_exceptional = true;   // chi(A, A) = 1
    bool blocks_orthogonal = true;     // chi = 0 both ways inside a block
    bool backward_zero = true;         // chi(later block, earlier block) = 0
    bool hom_data_consistent = true;   // known gradings match the pairing

    bool ok() const {
        return objects_exceptional && blocks_orthogonal && backward_zero &&
               hom_data_consistent;
    }
};

NumericCheck check_numeric(const ExcCollection& C);

/// Group action on the objects of a collection: one permutation of the
/// object indices per group element, plus (optionally) one lattice isometry
/// per group element describing the induced action on numerical classes.
/// An empty lattice_maps means every element acts trivially on the lattice.
struct GroupAction {
    GroupPtr G;
    std::vector<std::vector<int>> obj_perm;
    std::vector<PicMap> lattice_maps;
};

GroupAction trivial_action(const ExcCollection& C, GroupPtr G);

/// Extends per-generator data to the whole generated group along the BFS
/// provenance (every element is a recorded parent times a generator, so the
/// extension is forced; whether it is a genuine action is then settled by
/// check_action). gen_lattice_mats may be empty when no lattice is in play.
GroupAction action_from_generator_images(
    const ExcCollection& C, const GeneratedGroup& gg,
    const std::vector<std::vector<int>>& gen_obj_images,
    const std::vector<std::vector<std::vector<long>>>& gen_lattice_mats = {});

/// Verification report for a group action on a collection, plus the orbit
/// decomposition. Orbits are sorted member lists ordered by first member;
/// stabilizers[o] is the ascending stabilizer of orbits[o][0].
struct ActionCheck {
    bool homomorphism = true;        // permutations (and maps) respect the law
    bool blocks_preserved = true;
    bool kclasses_compatible = true; // class of g.A equals map_g(class of A)
    bool weights_constant = true;    // weight tags constant along each orbit
    std::vector<std::vector<int>> orbits;
    std::vector<int> orbit_of;
    std::vector<std::vector<int>> stabilizers;

    bool ok() const {
        return homomorphism && blocks_preserved && kclasses_compatible &&
               weights_constant;
    }
};

ActionCheck check_action(const ExcCollection& C, const GroupAction& A);

}  // namespace eqc
