#pragma once

#include <string>
#include <vector>

#include "eqc/character.hpp"
#include "eqc/collection.hpp"

namespace eqc {

/// Partitions of `size` with at most `rows` parts, each part at most `cols`,
/// in descending lexicographic order, without trailing zero parts.
std::vector<std::vector<int>> young_diagrams(int rows, int cols, int size);

/// Projective space P(V) for an n-dimensional projective representation V,
/// given as the central extension carrying it and the (pure weight 1 mod d)
/// character of V on that extension. Objects are O, O(1), ..., O(n-1), one
/// block each, weight tag -k on O(k). All hom gradings are recorded:
/// Hom(O(i), O(j)) = Sym^{j-i} V* in degree 0. For n = 3 the collection also
/// carries the rank-0 surface lattice and line bundle classes.
ExcCollection catalog_projective(int n, const CentralExtPtr& ext, const Character& v_char);

/// Smooth quadric hypersurface of dimension n-2 inside P^{n-1} (n >= 3):
/// spinor block first (one bundle S in odd dimensions, a pair S+, S- in even
/// dimensions, no weight tags), then line bundles O(-(n-3)), ..., O with
/// weight tag -k on O(k). Hom gradings between line bundles are recorded as
/// multiples of the trivial character of a one-element group in degree 0;
/// every pair involving a spinor bundle is left undetermined.
ExcCollection catalog_quadric(int n);

/// Grassmannian of k-planes in n-space. Blocks are indexed by |lambda| from
/// k(n-k) down to 0; block members are Sigma^lambda S for the partitions
/// lambda of that size inside the k x (n-k) box, in descending lexicographic
/// order, with weight tag +|lambda|. Only the self-hom gradings are
/// recorded (trivial character of a one-element group in degree 0).
ExcCollection catalog_grassmannian(int k, int n);

/// Del Pezzo surfaces as blow-ups of the plane in r points, with exact
/// numerical classes and no hom data. Variants:
///   "eooo0".."eooo4": torsion block O_E1(-1), ..., O_Er(-1), then O, O(L),
///                      O(2L) as singleton blocks;
///   "kn3": three-block collection on r = 3 with blocks
///          (O | O(L-E1), O(L-E2), O(L-E3) | O(L), O(2L-E1-E2-E3));
///   "kn4": three-block collection on r = 4 with blocks
///          (O | F | O(L), O(E1-K-L), ..., O(E4-K-L)) where F is the rank-2
///          class (2, -K, 1/2).
ExcCollection catalog_delpezzo(const std::string& variant);

/// Elementary lattice involutions of a del Pezzo surface, for building
/// lattice maps of object actions.
struct PointSwap {
    int i = 1;
    int j = 2;
};

/// Quadratic transform based at three of the blown-up points:
/// L -> 2L - Ei - Ej - Ek, Ei -> L - Ej - Ek (cyclically), others fixed.
struct QuadraticTransform {
    int i = 1;
    int j = 2;
    int k = 3;
};

PicMap pic_automorphism_from_involution(const PicLattice& lat, const PointSwap& s);
PicMap pic_automorphism_from_involution(const PicLattice& lat, const QuadraticTransform& t);

}  // namespace eqc
