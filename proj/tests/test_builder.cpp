#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include <doctest.h>

#include "eqc/builder.hpp"
#include "eqc/catalogs.hpp"
#include "eqc/character.hpp"
#include "eqc/cocycle.hpp"
#include "eqc/collection.hpp"
#include "eqc/error.hpp"
#include "eqc/group.hpp"

using namespace eqc;

namespace {

GeneratedGroup sym3() {
    return group_from_generators({parse_cycles("(0 1)", 3), parse_cycles("(0 1 2)", 3)}, 3);
}

CentralExtPtr split_ext(GroupPtr g, int d) {
    std::vector<std::vector<int>> zero(g->order(), std::vector<int>(g->order(), 0));
    return central_extension(std::move(g), d, zero);
}

Character perm_char(const GeneratedGroup& gg, const CentralExtPtr& ext) {
    ClassesPtr cls = conjugacy_classes(ext->bar);
    std::vector<Cyc> vals;
    for (int rep : cls->reps) {
        const Perm& p = gg.elements[ext->proj(rep)];
        long fixed = 0;
        for (size_t i = 0; i < p.size(); ++i)
            if (p[i] == static_cast<int>(i)) ++fixed;
        vals.push_back(Cyc(fixed));
    }
    return Character{cls, vals, 0};
}

GroupPtr klein() {
    return group_from_generators({parse_cycles("(0 1)(2 3)", 4), parse_cycles("(0 2)(1 3)", 4)},
                                 4)
        .group;
}

Cocycle2 klein_cocycle(const GroupPtr& v4) {
    return make_cocycle(v4, 2,
                        {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 0, 1}});
}

/// The plane collection with the S_3 coordinate permutation action: every
/// object is fixed, so each of O, O(L), O(2L) picks up all three
/// irreducibles.
EqCollection plane_s3() {
    GeneratedGroup gg = sym3();
    CentralExtPtr ext = split_ext(gg.group, 1);
    ExcCollection c = catalog_projective(3, ext, perm_char(gg, ext));
    return build_equivariant(c, trivial_action(c, gg.group));
}

}  // namespace

TEST_CASE("equivariant plane under the full coordinate symmetry") {
    EqCollection e = plane_s3();
    REQUIRE(e.size() == 9);

    RankReport ranks = rank_report(e);
    CHECK(ranks.per_orbit == std::vector<int>{3, 3, 3});
    CHECK(ranks.per_block == std::vector<int>{3, 3, 3});
    CHECK(ranks.total == 9);

    // Three orbits, all with the full stabilizer, on the equivariant path.
    REQUIRE(e.plans.size() == 3);
    for (const auto& plan : e.plans) {
        CHECK(plan.full_stabilizer);
        CHECK(plan.ext_is_homext);
        CHECK(plan.path == "equivariant");
        CHECK(plan.irreps.size() == 3);
    }
    CHECK(e.objects[0].label == "O*V1");
    CHECK(e.objects[5].label == "O(1)*V3");
    CHECK(e.objects[0].path == "equivariant");

    // Underlying classes scale with the irreducible's dimension.
    CHECK(e.objects[2].irrep.chi.dim() == 2);
    CHECK(e.objects[2].underlying->rank == 2);
    CHECK(e.objects[0].underlying->rank == 1);
}

TEST_CASE("hom grid of the equivariant plane") {
    EqCollection e = plane_s3();

    // All 81 pairs are determined by the catalog's hom data.
    EqCheck chk = check_equivariant(e);
    CHECK(chk.ok());
    CHECK(chk.known_pairs == 81);
    CHECK(chk.unknown_pairs == 0);

    // Locate the trivial, sign and standard characters within each orbit's
    // three outputs (table order is the same for every orbit).
    auto find_in_orbit = [&](int orbit, long dim, long sign_value) {
        for (int i = 0; i < e.size(); ++i) {
            const EqObject& o = e.objects[i];
            if (o.orbit != orbit) continue;
            const Character& chi = o.irrep.chi;
            if (chi.dim() == dim && chi.values[1] == Cyc(sign_value)) return i;
        }
        FAIL("irreducible not found");
        return -1;
    };
    // Class order: identity, transpositions, 3-cycles.
    int t0 = find_in_orbit(0, 1, 1), s0 = find_in_orbit(0, 1, -1), g0 = find_in_orbit(0, 2, 0);
    int t1 = find_in_orbit(1, 1, 1), s1 = find_in_orbit(1, 1, -1), g1 = find_in_orbit(1, 2, 0);
    int t2 = find_in_orbit(2, 1, 1);

    // Degree-1 monomials carry the permutation representation: one orbit of
    // monomials, so exactly one copy of the trivial; the sign does not occur.
    CHECK(hom_dim(e, t0, t1) == 1);
    CHECK(hom_dim(e, t0, s1) == 0);
    CHECK(hom_dim(e, s0, t1) == 0);
    CHECK(hom_dim(e, s0, s1) == 1);
    CHECK(hom_dim(e, g0, g1) == 2);
    CHECK(hom_dim(e, t0, g1) == 1);
    CHECK(hom_dim(e, g0, t1) == 1);
    CHECK(hom_dim(e, g0, s1) == 1);
    CHECK(hom_dim(e, s0, g1) == 1);

    // Degree-2 monomials split into two orbit types.
    CHECK(hom_dim(e, t0, t2) == 2);

    // Counting both multiplicities recovers the full section space:
    // sum dim(Vi) dim(Vj) hom(i, j) = |G| dim Hom(O(a), O(b)).
    auto weighted_total = [&](int oa, int ob, long expect) {
        long acc = 0;
        for (int p = 0; p < e.size(); ++p)
            for (int q = 0; q < e.size(); ++q) {
                if (e.objects[p].orbit != oa || e.objects[q].orbit != ob) continue;
                auto h = hom_dim(e, p, q);
                REQUIRE(h.has_value());
                acc += e.objects[p].irrep.chi.dim() * e.objects[q].irrep.chi.dim() * *h;
            }
        CHECK(acc == expect);
    };
    weighted_total(0, 1, 6 * 3);
    weighted_total(1, 2, 6 * 3);
    weighted_total(0, 2, 6 * 6);

    // Diagonal and backward entries.
    CHECK(hom_dim(e, t1, t1) == 1);
    CHECK(hom_dim(e, t1, s1) == 0);
    CHECK(hom_dim(e, t1, t0) == 0);
    CHECK(hom_dim(e, g1, g0) == 0);

    // Graded form: everything known here sits in degree 0.
    auto grading = hom_dims(e, t0, t2);
    REQUIRE(grading.has_value());
    CHECK(*grading == std::map<int, long>{{0, 2}});
}

TEST_CASE("orbit induction across a free swap") {
    ExcCollection c = catalog_delpezzo("eooo2");
    GeneratedGroup z2 = group_from_generators({parse_cycles("(0 1)", 2)}, 2);
    std::vector<std::vector<long>> swap_mat = {{1, 0, 0},
                                               {0, 0, 1},
                                               {0, 1, 0}};
    int a1 = c.index_of("O_E1(-1)"), a2 = c.index_of("O_E2(-1)");
    std::vector<int> img(c.size());
    for (int i = 0; i < c.size(); ++i) img[i] = i;
    std::swap(img[a1], img[a2]);
    GroupAction act = action_from_generator_images(c, z2, {img}, {swap_mat});

    EqCollection e = build_equivariant(c, act);
    RankReport ranks = rank_report(e);
    CHECK(ranks.per_orbit == std::vector<int>{1, 2, 2, 2});
    CHECK(ranks.total == 7);

    // The swapped pair coinduces: one object, trivial stabilizer.
    CHECK(e.plans[0].path == "orbit-induced");
    CHECK_FALSE(e.plans[0].full_stabilizer);
    CHECK(e.objects[0].label == "Ind(O_E1(-1)*V1)");
    // Underlying class is the orbit sum.
    PicLattice lat = *c.lat;
    KClass expect = torsion_curve_class(lat, lat.E(1));
    KClass other = torsion_curve_class(lat, lat.E(2));
    expect.rank += other.rank;
    for (int i = 0; i < lat.rank(); ++i) expect.c1[i] += other.c1[i];
    expect.ch2 += other.ch2;
    CHECK(*e.objects[0].underlying == expect);

    // Fixed objects on the equivariant path pick up both Z/2 characters.
    CHECK(e.plans[1].path == "equivariant");
    CHECK(e.objects[1].label == "O*V1");
    CHECK(e.objects[2].label == "O*V2");

    // Same-orbit homs and the block structure are determined, forward homs
    // between line bundle blocks are not recorded for this catalog.
    EqCheck chk = check_equivariant(e);
    CHECK(chk.ok());
    CHECK(hom_dim(e, 0, 0) == 1);
    CHECK(hom_dim(e, 1, 2) == 0);
    CHECK(hom_dim(e, 3, 1) == 0);
    CHECK_FALSE(hom_dims(e, 1, 3).has_value());

    SUBCASE("the representative choice does not change the shape") {
        BuildOptions opts;
        opts.preferred_reps[0] = a2;
        EqCollection e2 = build_equivariant(c, act, {}, opts);
        CHECK(e2.plans[0].rep == a2);
        CHECK(e2.objects[0].label == "Ind(O_E2(-1)*V1)");
        RankReport r2 = rank_report(e2);
        CHECK(r2.per_orbit == ranks.per_orbit);
        CHECK(r2.per_block == ranks.per_block);
        // The induced class is the same orbit sum.
        CHECK(*e2.objects[0].underlying == *e.objects[0].underlying);
    }
    SUBCASE("preferred representative must lie in its orbit") {
        BuildOptions opts;
        opts.preferred_reps[0] = c.index_of("O");
        CHECK_THROWS_AS(build_equivariant(c, act, {}, opts), InvalidInput);
    }
}

TEST_CASE("twisted fixed point via a global cocycle") {
    GroupPtr v4 = klein();
    Cocycle2 alpha = klein_cocycle(v4);

    ExcCollection c;
    c.name = "twisted point";
    c.hom_ext = central_extension(alpha);
    c.objects = {{"O", 0, std::nullopt, 1}};
    ClassesPtr cls = conjugacy_classes(c.hom_ext->bar);
    c.homchars[{0, 0}] = HomGrading{{0, Character{cls, std::vector<Cyc>(cls->count(), Cyc(1L)), 0}}};
    validate_collection(c);

    CocycleAssignment assign;
    assign.global = alpha;
    EqCollection e = build_equivariant(c, trivial_action(c, v4), assign);

    // Weight 1 forces the unique two-dimensional projective character.
    REQUIRE(e.size() == 1);
    CHECK(e.objects[0].path == "invariant-twisted");
    CHECK(e.objects[0].irrep.chi.dim() == 2);
    CHECK(e.objects[0].irrep.weight == 1);
    CHECK(e.objects[0].label == "O*V1");
    CHECK(hom_dim(e, 0, 0) == 1);
    CHECK(check_equivariant(e).ok());

    SUBCASE("a twisted orbit must carry a weight tag") {
        c.objects[0].weight.reset();
        c.homchars.clear();
        CHECK_THROWS_AS(build_equivariant(c, trivial_action(c, v4), assign), InvalidInput);
    }
}

TEST_CASE("per representative cocycles take precedence") {
    GroupPtr v4 = klein();
    ExcCollection c;
    c.name = "point";
    c.hom_ext = split_ext(v4, 2);
    c.objects = {{"O", 0, std::nullopt, 1}};

    // Untwisted: four linear weight-1 characters of V4 x Z/2.
    EqCollection plain = build_equivariant(c, trivial_action(c, v4));
    CHECK(plain.size() == 4);

    // The per-representative table overrides, built on an equal but distinct
    // group instance to exercise re-validation on the builder's stabilizer.
    GroupPtr v4_copy = std::make_shared<const FiniteGroup>(v4->table());
    CocycleAssignment assign;
    assign.per_rep[0] = klein_cocycle(v4_copy);
    EqCollection twisted = build_equivariant(c, trivial_action(c, v4), assign);
    REQUIRE(twisted.size() == 1);
    CHECK(twisted.objects[0].irrep.chi.dim() == 2);
    CHECK(twisted.plans[0].path == "invariant-twisted");
    // The plan's extension is not the collection's split one.
    CHECK_FALSE(twisted.plans[0].ext_is_homext);
}

TEST_CASE("builders reject broken actions") {
    ExcCollection c = catalog_delpezzo("eooo2");
    GeneratedGroup z2 = group_from_generators({parse_cycles("(0 1)", 2)}, 2);
    // Swap without the lattice map: classes are incompatible.
    int a1 = c.index_of("O_E1(-1)"), a2 = c.index_of("O_E2(-1)");
    std::vector<int> img(c.size());
    for (int i = 0; i < c.size(); ++i) img[i] = i;
    std::swap(img[a1], img[a2]);
    GroupAction bad = action_from_generator_images(c, z2, {img});
    CHECK_THROWS_AS(build_equivariant(c, bad), InvalidInput);
}

TEST_CASE("recorded nonzero homs inside an orbit make it opaque") {
    GeneratedGroup z2 = group_from_generators({parse_cycles("(0 1)", 2)}, 2);
    ExcCollection c;
    c.name = "two points";
    c.hom_ext = split_ext(z2.group, 1);
    c.objects = {{"P1", 0, std::nullopt, 0}, {"P2", 0, std::nullopt, 0}};
    ClassesPtr cls = conjugacy_classes(c.hom_ext->bar);
    c.homchars[{0, 1}] =
        HomGrading{{0, Character{cls, std::vector<Cyc>(cls->count(), Cyc(1L)), 0}}};
    validate_collection(c);

    GroupAction act = action_from_generator_images(c, z2, {{1, 0}});
    EqCollection e = build_equivariant(c, act);
    REQUIRE(e.size() == 1);
    // The identity-coset reduction needs orthogonal orbit members; recorded
    // nonzero homs between them withdraw the answer.
    CHECK_FALSE(hom_dims(e, 0, 0).has_value());
    EqCheck chk = check_equivariant(e);
    CHECK(chk.unknown_pairs == 1);
    CHECK(chk.known_pairs == 0);
}
