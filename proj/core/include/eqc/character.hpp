#pragma once

#include <optional>
#include <vector>

#include "eqc/cocycle.hpp"
#include "eqc/cyc.hpp"
#include "eqc/group.hpp"

namespace eqc {

/// Class function with exact cyclotomic values, one per conjugacy class.
/// weight, when set, tags the central weight for extension contexts.
struct Character {
    ClassesPtr cls;
    std::vector<Cyc> values;
    std::optional<int> weight;

    /// Value on the class of g.
    const Cyc& at_element(int g) const { return values[cls->class_of[g]]; }

    /// Dimension = value at the identity class; throws when not integral.
    long dim() const;
};

bool operator==(const Character& a, const Character& b);

Character trivial_character(ClassesPtr cls);

/// Pointwise (tensor) product. Weight tags add when both are present.
Character char_mul(const Character& a, const Character& b);

/// Dual: conjugate values (equivalently, values at inverse classes).
/// Weight tag negates.
Character char_dual(const Character& a);

/// hom(a, b) = dual(a) * b. Weight tag subtracts.
Character char_hom(const Character& a, const Character& b);

Character char_add(const Character& a, const Character& b);
Character char_scale(const Character& a, long k);

/// Multiplicity of the trivial character: (1/|G|) sum |C_i| chi(C_i).
/// Throws unless the result is a nonnegative integer.
long invariant_dim(const Character& chi);

/// Inner product <a, b> = (1/|G|) sum |C_i| a(C_i) b(C_i^{-1}).
Cyc char_inner(const Character& a, const Character& b);

/// Character of Sym^k, via the Newton recurrence over power sums
/// p_i(g) = chi(g^i). Weight tag multiplies by k.
Character sym_power(const Character& chi, int k);

/// Exact character table computed by the Burnside-Dixon method: class
/// algebra structure constants, simultaneous eigenvectors over F_p for the
/// smallest prime p = 1 (mod exponent) with p > 2 sqrt(|G|), then lifting to
/// Q(zeta_exponent) through a fixed discrete-log correspondence of roots of
/// unity. Rows are sorted by dimension, then lexicographically on canonical
/// coefficient vectors, so the table is deterministic and independent of the
/// working prime. Row orthogonality and sum of squares are verified exactly.
///
/// prime = 0 selects the smallest valid prime; an explicit valid prime may
/// be passed instead (used by cross-checks at a second prime).
struct CharacterTable {
    ClassesPtr cls;
    std::vector<Character> rows;
    int prime = 0;
};

CharacterTable character_table(GroupPtr G, int prime = 0);

/// Smallest Dixon-valid prime strictly greater than `than` (pass 0 for the
/// default prime).
int dixon_prime(const FiniteGroup& G, int than = 0);

/// True when chi(z x) = zeta_d^i chi(x) for the central generator z and all
/// classes; chi may be reducible.
bool has_pure_weight(const CentralExt& ext, const Character& chi, int i);

/// The unique weight of an irreducible (or pure) character; throws
/// NoPureWeight when the character mixes weights.
int weight_of(const CentralExt& ext, const Character& chi);

/// Irreducible character of barG of known central weight.
struct WeightedIrrep {
    CentralExtPtr ext;
    Character chi;
    int weight = 0;
};

/// Weight-i rows of the character table of barG (i taken mod d). These are
/// the irreducible alpha^i-projective characters of the base group in
/// finite-avatar form; no matrices are materialized.
std::vector<WeightedIrrep> projective_irreps(const CentralExtPtr& ext, int i);
std::vector<WeightedIrrep> projective_irreps(const Cocycle2& alpha, int i);

/// Weight-1 part of the regular character of barG, with its verified
/// decomposition sum dim(V) * V over the weight-1 irreducibles.
struct RegularProjectiveChar {
    CentralExtPtr ext;
    Character chi;
    std::vector<WeightedIrrep> components;
    std::vector<long> multiplicities;
};

RegularProjectiveChar regular_projective_character(const Cocycle2& alpha);

}  // namespace eqc
