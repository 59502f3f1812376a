#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eqc/character.hpp"
#include "eqc/cocycle.hpp"
#include "eqc/collection.hpp"

namespace eqc {

/// Which twisting cocycle to use on each orbit's stabilizer. per_rep entries
/// (keyed by the representative object index, with the cocycle given on the
/// stabilizer re-indexed as its own group) win over the restriction of
/// `global`; orbits covered by neither get the zero cocycle, with modulus
/// taken from the collection's hom extension when there is one.
struct CocycleAssignment {
    std::optional<Cocycle2> global;
    std::map<int, Cocycle2> per_rep;
};

struct BuildOptions {
    /// orbit index -> member object index to use as that orbit's
    /// representative (default: smallest member).
    std::map<int, int> preferred_reps;
};

/// Everything decided for one orbit: representative, stabilizer, twisting
/// cocycle, the central extension carrying the stabilizer's projective
/// characters, and the attached irreducibles.
struct OrbitPlan {
    int rep = 0;
    std::vector<int> members;
    std::vector<int> stab_elements;
    bool full_stabilizer = false;
    SubgroupGroup stab;
    Cocycle2 cocycle;  // on stab.group
    CentralExtPtr ext;
    /// ext is the collection's hom extension itself, so characters recorded
    /// in the collection combine with the attached irreducibles directly.
    bool ext_is_homext = false;
    /// The cocycle agrees with the restriction of the hom extension's, so
    /// recorded characters restrict to stab meaningfully.
    bool alpha_matches_homext = false;
    int weight = 0;  // effective weight tag of the orbit's objects
    std::string path;
    std::vector<WeightedIrrep> irreps;
    int first_output = 0;  // index of the orbit's first object in the output
};

/// One object of the produced collection: representative tensored with an
/// attached stabilizer irreducible, coinduced when the stabilizer is proper.
struct EqObject {
    int orbit = 0;
    int rep_object = 0;
    int block = 0;
    std::string label;
    std::string path;  // "equivariant" | "invariant-twisted" | "orbit-induced"
    WeightedIrrep irrep;
    /// Numerical class of the underlying (non-equivariant) object:
    /// dim(irrep) times the sum of the orbit members' classes.
    std::optional<KClass> underlying;
};

struct EqCollection {
    ExcCollection base;
    GroupAction action;
    ActionCheck action_check;
    std::vector<OrbitPlan> plans;
    std::vector<EqObject> objects;

    int size() const { return static_cast<int>(objects.size()); }
};

/// Builds the equivariant collection: splits the objects into orbits,
/// attaches to each orbit the weight-(-w) irreducible projective characters
/// of its stabilizer (w the orbit's weight tag), and coinduces across proper
/// stabilizers. Objects are emitted orbit by orbit, irreducibles in table
/// order. Throws InvalidInput when the action fails verification, when a
/// twisted orbit lacks a weight tag, or when assignment data is malformed.
EqCollection build_equivariant(const ExcCollection& C, const GroupAction& A,
                               const CocycleAssignment& assign = {},
                               const BuildOptions& opts = {});

/// Graded dimension of Hom between two output objects, when the collection's
/// data determines it:
///   - same orbit: adjunction reduces to the stabilizer, using the
///     representative's recorded self-hom grading (default: one-dimensional
///     in degree 0);
///   - distinct orbits in one block: zero;
///   - source block after target block: zero;
///   - source block before target block: known when both stabilizers are the
///     whole group, both orbits reuse the hom extension, and the pair's
///     grading is recorded.
/// Returns nullopt when undetermined. Throws InconsistentWeights when a
/// recorded weight tag contradicts the orbit tags.
std::optional<std::map<int, long>> hom_dims(const EqCollection& E, int p, int q);

/// Total dimension across degrees, when determined.
std::optional<long> hom_dim(const EqCollection& E, int p, int q);

struct RankReport {
    std::vector<int> per_orbit;
    std::vector<int> per_block;
    int total = 0;
};

RankReport rank_report(const EqCollection& E);

/// Exceptionality checks on the produced collection, over the pairs whose
/// hom dimensions are determined.
struct EqCheck {
    bool diagonal_ones = true;
    bool backward_zero = true;
    long known_pairs = 0;
    long unknown_pairs = 0;

    bool ok() const { return diagonal_ones && backward_zero; }
};

EqCheck check_equivariant(const EqCollection& E);

}  // namespace eqc
