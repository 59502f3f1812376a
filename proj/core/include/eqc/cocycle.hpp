#pragma once

#include <optional>
#include <vector>

#include "eqc/cyc.hpp"
#include "eqc/group.hpp"

namespace eqc {

/// 2-cocycle on a finite group with values in Z/d, written additively:
/// table[g][h] + table[gh][k] = table[h][k] + table[g][hk]  (mod d).
/// No normalization is imposed; table[e][e] need not vanish.
struct Cocycle2 {
    GroupPtr G;
    int d = 1;
    std::vector<std::vector<int>> table;

    bool is_zero() const;
    int operator()(int g, int h) const { return table[g][h]; }
};

/// True when the table satisfies the cocycle condition on all triples.
bool check_cocycle(const GroupPtr& G, int d, const std::vector<std::vector<int>>& table);

/// Validating constructor. Throws InvalidInput.
Cocycle2 make_cocycle(GroupPtr G, int d, std::vector<std::vector<int>> table);

Cocycle2 zero_cocycle(GroupPtr G, int d);

/// Coboundary of a 1-cochain: (d gamma)(g,h) = gamma(g) + gamma(h) - gamma(gh).
Cocycle2 coboundary(GroupPtr G, int d, const std::vector<int>& gamma);

/// Searches for gamma with a - b = d gamma, solving the linear system over
/// Z/d (d may be composite). Returns gamma or nullopt. Requires matching
/// group and modulus.
std::optional<std::vector<int>> cohomologous(const Cocycle2& a, const Cocycle2& b);

/// Pointwise ea * a + eb * b after rescaling both into Z/lcm(da, db):
/// a value v mod da embeds as v * (lcm / da). Requires matching groups.
Cocycle2 cocycle_combine(const Cocycle2& a, const Cocycle2& b, int ea, int eb);

/// Smallest e >= 1 with e * a cohomologous to zero (order of the class in
/// H^2(G, Z/d)). Always at most d; divides |G| by the transfer bound.
int class_order(const Cocycle2& a);

/// Restriction to a subgroup, re-indexed to the subgroup's own group.
Cocycle2 restrict_cocycle(const Cocycle2& a, const SubgroupGroup& H);

/// Central extension built from a validated cocycle.
CentralExtPtr central_extension(const Cocycle2& alpha);

/// Twisted group algebra k_alpha[G]: basis {u_g}, u_g u_h = zeta_d^{alpha(g,h)} u_{gh}.
/// Elements are Cyc coefficient vectors indexed by group elements. The unit
/// is zeta_d^{-alpha(e,e)} u_e, not u_e, when alpha is unnormalized.
struct TwistedGroupAlgebra {
    Cocycle2 alpha;

    int dim() const { return alpha.G->order(); }

    /// Product of basis elements: u_g u_h = zeta^{exp} u_{index}.
    struct BasisProduct {
        int index;
        int exp;
    };
    BasisProduct basis_product(int g, int h) const;

    std::vector<Cyc> zero() const { return std::vector<Cyc>(dim()); }
    std::vector<Cyc> basis(int g) const;
    std::vector<Cyc> unit() const;
    std::vector<Cyc> multiply(const std::vector<Cyc>& x, const std::vector<Cyc>& y) const;
};

/// Builds the algebra and verifies associativity on all basis triples and
/// that the unit is two-sided, with exact cyclotomic arithmetic.
TwistedGroupAlgebra twisted_group_algebra(Cocycle2 alpha);

}  // namespace eqc
