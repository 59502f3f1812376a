#include <numeric>
#include <vector>

#include <doctest.h>

#include "eqc/cocycle.hpp"
#include "eqc/error.hpp"
#include "eqc/group.hpp"
#include "eqc/zmod.hpp"

using namespace eqc;

namespace {

GroupPtr cyclic(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return std::make_shared<const FiniteGroup>(std::move(t));
}

/// Carry cocycle on Z/n with values in Z/d; its class has order gcd(n, d).
Cocycle2 carry(const GroupPtr& zn, int d) {
    int n = zn->order();
    std::vector<std::vector<int>> t(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = ((i + j) / n) % d;
    return make_cocycle(zn, d, std::move(t));
}

GroupPtr klein() {
    return group_from_generators({parse_cycles("(0 1)(2 3)", 4), parse_cycles("(0 2)(1 3)", 4)},
                                 4)
        .group;
}

/// Bilinear cocycle alpha((x1,x2),(y1,y2)) = x2 y1 on the Klein four group
/// with the BFS element order e, a, b, ab.
Cocycle2 klein_cocycle(const GroupPtr& v4) {
    return make_cocycle(v4, 2,
                        {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 0, 1}});
}

}  // namespace

TEST_CASE("linear systems over Z/d") {
    // 2x = 2 (mod 4) is solvable, 2x = 1 (mod 4) is not.
    auto s = solve_mod({{2}}, {2}, 4);
    REQUIRE(s.has_value());
    CHECK((((*s)[0] * 2 - 2) % 4) == 0);
    CHECK_FALSE(solve_mod({{2}}, {1}, 4).has_value());

    // A 3x2 system over the composite modulus 6; verify the solution.
    std::vector<std::vector<Integer>> A = {{2, 3}, {4, 1}, {3, 3}};
    std::vector<Integer> b = {5, 3, 0};
    auto t = solve_mod(A, b, 6);
    REQUIRE(t.has_value());
    for (size_t i = 0; i < A.size(); ++i) {
        Integer acc = 0;
        for (size_t j = 0; j < A[i].size(); ++j) acc += A[i][j] * (*t)[j];
        CHECK(((acc - b[i]) % 6) == 0);
    }

    // Inconsistent rows: x = 0 and x = 1 cannot both hold.
    CHECK_FALSE(solve_mod({{1}, {1}}, {0, 1}, 6).has_value());

    // Solutions are reported with entries in [0, d).
    for (const Integer& x : *t) {
        CHECK(x >= 0);
        CHECK(x < 6);
    }
}

TEST_CASE("cocycle validation") {
    GroupPtr z3 = cyclic(3);
    CHECK(check_cocycle(z3, 2, {{0, 0, 0}, {0, 0, 1}, {0, 1, 1}}));
    CHECK_FALSE(check_cocycle(z3, 2, {{0, 0, 0}, {0, 1, 0}, {0, 0, 0}}));
    CHECK_THROWS_AS(make_cocycle(z3, 2, {{0, 0}, {0, 0}}), InvalidInput);
    CHECK(zero_cocycle(z3, 5).is_zero());

    // Coboundaries satisfy the cocycle condition by construction.
    Cocycle2 db = coboundary(z3, 4, {1, 3, 2});
    CHECK(check_cocycle(z3, 4, db.table));
    CHECK(class_order(db) == 1);
}

TEST_CASE("carry cocycle classes") {
    for (int n : {2, 3, 4, 6})
        for (int d : {2, 3, 4, 6}) {
            Cocycle2 a = carry(cyclic(n), d);
            CHECK(class_order(a) == std::gcd(n, d));
        }

    // Cohomologous shifts are recognized and the witness checks out:
    // a - b = d(gamma) pointwise.
    GroupPtr z4 = cyclic(4);
    Cocycle2 a = carry(z4, 2);
    Cocycle2 shifted = cocycle_combine(a, coboundary(z4, 2, {0, 1, 1, 0}), 1, 1);
    auto gamma = cohomologous(shifted, a);
    REQUIRE(gamma.has_value());
    Cocycle2 reb = cocycle_combine(a, coboundary(z4, 2, *gamma), 1, 1);
    CHECK(reb.table == shifted.table);

    // The carry class on Z/4 in Z/2 is nontrivial, so it cannot be
    // cohomologous to zero.
    CHECK_FALSE(cohomologous(a, zero_cocycle(z4, 2)).has_value());
}

TEST_CASE("combining rescales to the lcm modulus") {
    GroupPtr z2 = cyclic(2);
    Cocycle2 a = carry(z2, 2);
    Cocycle2 b = zero_cocycle(z2, 3);
    Cocycle2 c = cocycle_combine(a, b, 1, 1);
    CHECK(c.d == 6);
    // The value 1 mod 2 embeds as 3 mod 6.
    CHECK(c(1, 1) == 3);
    CHECK(class_order(c) == 2);
}

TEST_CASE("restriction to subgroups") {
    GroupPtr v4 = klein();
    Cocycle2 alpha = klein_cocycle(v4);
    CHECK(class_order(alpha) == 2);

    // On <a> = {e, a} the table vanishes identically; on <ab> = {e, ab} the
    // diagonal entry survives and the class stays nontrivial.
    SubgroupGroup ha = subgroup_as_group(make_subgroup(v4, {0, 1}));
    Cocycle2 ra = restrict_cocycle(alpha, ha);
    CHECK(ra.is_zero());

    SubgroupGroup hab = subgroup_as_group(make_subgroup(v4, {0, 3}));
    Cocycle2 rab = restrict_cocycle(alpha, hab);
    CHECK_FALSE(rab.is_zero());
    CHECK(class_order(rab) == 2);
}

TEST_CASE("extension from a cocycle") {
    GroupPtr v4 = klein();
    CentralExtPtr ext = central_extension(klein_cocycle(v4));
    CHECK(ext->d == 2);
    CHECK(ext->bar->order() == 8);
    CHECK_FALSE(ext->bar->is_abelian());
    CHECK(ext->base.get() == v4.get());
}

TEST_CASE("twisted group algebra") {
    GroupPtr v4 = klein();
    TwistedGroupAlgebra alg = twisted_group_algebra(klein_cocycle(v4));
    CHECK(alg.dim() == 4);

    // u_a u_b = u_ab but u_b u_a = -u_ab: the twist anticommutes this pair.
    auto ab = alg.multiply(alg.basis(1), alg.basis(2));
    auto ba = alg.multiply(alg.basis(2), alg.basis(1));
    CHECK(ab == alg.basis(3));
    std::vector<Cyc> neg;
    for (const Cyc& x : alg.basis(3)) neg.push_back(-x);
    CHECK(ba == neg);

    // The unit really is two-sided for an arbitrary element.
    std::vector<Cyc> v = alg.zero();
    v[0] = Cyc(2L);
    v[3] = Cyc::zeta(8);
    CHECK(alg.multiply(alg.unit(), v) == v);
    CHECK(alg.multiply(v, alg.unit()) == v);

    // Associativity on a non-basis triple.
    auto left = alg.multiply(alg.multiply(v, alg.basis(2)), alg.basis(1));
    auto right = alg.multiply(v, alg.multiply(alg.basis(2), alg.basis(1)));
    CHECK(left == right);
}
