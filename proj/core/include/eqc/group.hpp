#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "eqc/error.hpp"

namespace eqc {

/// Permutation of {0..n-1}; p[i] is the image of i.
using Perm = std::vector<int>;

Perm perm_identity(int n);
Perm perm_compose(const Perm& p, const Perm& q);  // (p*q)(i) = p[q[i]]
Perm perm_inverse(const Perm& p);

/// Parses disjoint-cycle notation on {0..degree-1}, e.g. "(0 1)(2 4)".
/// "()" or an empty string is the identity. Throws InvalidInput.
Perm parse_cycles(const std::string& text, int degree);

/// Formats a permutation in disjoint-cycle notation; identity is "()".
std::string cycles_str(const Perm& p);

/// Finite group given by a dense multiplication table on indices 0..N-1.
/// Construction validates the table: rows and columns are permutations, a
/// two-sided identity exists, every element has an inverse, and the product
/// is associative (checked on all triples when N <= full_check_bound, on a
/// deterministic sample otherwise).
class FiniteGroup {
  public:
    explicit FiniteGroup(std::vector<std::vector<int>> table, int full_check_bound = 256);

    int order() const { return n_; }
    int mul(int g, int h) const { return table_[g][h]; }
    int identity() const { return e_; }
    int inverse(int g) const { return inv_[g]; }
    const std::vector<std::vector<int>>& table() const { return table_; }

    /// g^k for any integer k.
    int power(int g, long k) const;

    int element_order(int g) const;

    /// lcm of the element orders.
    int exponent() const;

    bool is_abelian() const;

  private:
    int n_;
    std::vector<std::vector<int>> table_;
    int e_;
    std::vector<int> inv_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Closure of permutation generators with BFS discovery order: the identity
/// gets index 0, and elements are numbered as first reached by composing an
/// already-discovered element with a generator (generators in input order).
/// provenance[i] = (parent index, generator position) for i > 0.
struct GeneratedGroup {
    GroupPtr group;
    std::vector<Perm> elements;
    std::vector<std::pair<int, int>> provenance;
    std::vector<int> generator_index;
};

GeneratedGroup group_from_generators(const std::vector<Perm>& gens, int degree,
                                     int order_cap = 10000);

/// Subgroup as a validated, ascending element-index list of a parent group.
struct Subgroup {
    GroupPtr parent;
    std::vector<int> elements;

    int order() const { return static_cast<int>(elements.size()); }
    bool contains(int g) const;
};

Subgroup make_subgroup(GroupPtr parent, std::vector<int> elements);

/// A subgroup re-indexed as a standalone group. to_parent maps local indices
/// to parent indices.
struct SubgroupGroup {
    GroupPtr group;
    std::vector<int> to_parent;
    std::vector<int> from_parent;  // parent index -> local index, -1 outside
};

SubgroupGroup subgroup_as_group(const Subgroup& H);

/// Conjugacy class data. Classes are listed with the class of the identity
/// first, then by smallest member index; reps[k] is the smallest member.
struct ConjClasses {
    GroupPtr G;
    std::vector<std::vector<int>> classes;
    std::vector<int> class_of;
    std::vector<int> reps;
    std::vector<int> inverse_class;

    int count() const { return static_cast<int>(classes.size()); }
};

using ClassesPtr = std::shared_ptr<const ConjClasses>;

ClassesPtr conjugacy_classes(GroupPtr G);

/// Right-coset representatives for H g, identity first, then by smallest
/// uncovered index. The result has |G| / |H| entries.
std::vector<int> right_transversal(const GroupPtr& G, const Subgroup& H);

/// Central extension 1 -> Z/d -> barG -> G -> 1 built from a 2-cocycle table
/// alpha with values in Z/d: elements are pairs (g, j) encoded as g*d + j,
/// with product (g,j)(h,k) = (gh, j+k+alpha(g,h)).
///
/// Cocycles are not assumed normalized. The identity of barG is the pair
/// (e, -alpha(e,e)) and center_gen is (e, 1 - alpha(e,e)); its powers
/// enumerate the central kernel, and with section(g) = (g, 0) the relation
/// section(g) section(h) = section(gh) center_gen^{alpha(g,h)} holds exactly
/// (verified at construction).
struct CentralExt {
    GroupPtr base;
    GroupPtr bar;
    int d = 1;
    std::vector<std::vector<int>> alpha;
    int center_gen = 0;

    int encode(int g, int j) const { return g * d + j; }
    int proj(int x) const { return x / d; }
    int fiber(int x) const { return x % d; }
    int section(int g) const { return encode(g, 0); }

    /// Element (e, j - alpha(e,e)) = center_gen^j.
    int kernel_element(int j) const;
};

using CentralExtPtr = std::shared_ptr<const CentralExt>;

/// Builds the extension after validating the cocycle condition on all
/// triples. Throws InvalidInput for malformed tables.
CentralExtPtr central_extension(GroupPtr G, int d, const std::vector<std::vector<int>>& alpha);

}  // namespace eqc
