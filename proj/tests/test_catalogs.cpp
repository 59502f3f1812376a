#include <set>
#include <vector>

#include <doctest.h>

#include "eqc/catalogs.hpp"
#include "eqc/character.hpp"
#include "eqc/collection.hpp"
#include "eqc/error.hpp"
#include "eqc/group.hpp"

using namespace eqc;

namespace {

GroupPtr trivial_group() {
    return std::make_shared<const FiniteGroup>(std::vector<std::vector<int>>{{0}});
}

CentralExtPtr trivial_ext() {
    return central_extension(trivial_group(), 1, {{0}});
}

Character n_trivial(const CentralExtPtr& ext, long n) {
    ClassesPtr cls = conjugacy_classes(ext->bar);
    return Character{cls, std::vector<Cyc>(cls->count(), Cyc(n)), 0};
}

std::vector<int> blocks_of(const ExcCollection& c) {
    std::vector<int> b;
    for (const auto& o : c.objects) b.push_back(o.block);
    return b;
}

long grading_total(const ExcCollection& c, int p, int q) {
    auto it = c.homchars.find({p, q});
    REQUIRE(it != c.homchars.end());
    long total = 0;
    for (const auto& [deg, chi] : it->second) total += chi.dim();
    return total;
}

}  // namespace

TEST_CASE("partition enumeration") {
    CHECK(young_diagrams(2, 2, 4) == std::vector<std::vector<int>>{{2, 2}});
    CHECK(young_diagrams(2, 2, 3) == std::vector<std::vector<int>>{{2, 1}});
    // Descending lexicographic order.
    CHECK(young_diagrams(2, 2, 2) == std::vector<std::vector<int>>{{2}, {1, 1}});
    CHECK(young_diagrams(2, 2, 1) == std::vector<std::vector<int>>{{1}});
    CHECK(young_diagrams(2, 2, 0) == std::vector<std::vector<int>>{{}});
    CHECK(young_diagrams(2, 3, 3) ==
          std::vector<std::vector<int>>{{3}, {2, 1}});
    CHECK(young_diagrams(3, 3, 9).size() == 1);
    CHECK(young_diagrams(2, 4, 7).empty() == false);
    CHECK(young_diagrams(1, 2, 3).empty());
}

TEST_CASE("projective space catalog") {
    CentralExtPtr ext = trivial_ext();
    ExcCollection c = catalog_projective(4, ext, n_trivial(ext, 4));
    REQUIRE(c.size() == 4);
    CHECK(blocks_of(c) == std::vector<int>{0, 1, 2, 3});
    CHECK(c.objects[0].label == "O");
    CHECK(c.objects[3].label == "O(3)");
    // Twist tags descend.
    for (int k = 0; k < 4; ++k) CHECK(c.objects[k].weight == -k);
    // No surface lattice away from n = 3.
    CHECK_FALSE(c.lat.has_value());
    CHECK_FALSE(c.objects[0].kclass.has_value());

    // Graded pieces are symmetric powers: dim = C(n - 1 + k, k).
    CHECK(grading_total(c, 0, 1) == 4);
    CHECK(grading_total(c, 0, 2) == 10);
    CHECK(grading_total(c, 0, 3) == 20);
    CHECK(grading_total(c, 2, 3) == 4);
    CHECK(grading_total(c, 1, 1) == 1);
    // Backward pairs are recorded as known-zero.
    REQUIRE(c.homchars.count({1, 0}) == 1);
    CHECK(c.homchars.at({1, 0}).empty());

    validate_collection(c);
    CHECK(check_numeric(c).ok());
    CHECK_FALSE(check_numeric(c).applicable);

    // The plane also carries its numerical classes.
    CentralExtPtr ext3 = trivial_ext();
    ExcCollection p2 = catalog_projective(3, ext3, n_trivial(ext3, 3));
    REQUIRE(p2.lat.has_value());
    CHECK(p2.lat->r == 0);
    REQUIRE(p2.objects[2].kclass.has_value());
    CHECK(p2.objects[2].kclass->rank == 1);
    CHECK(check_numeric(p2).applicable);
    CHECK(check_numeric(p2).ok());

    // The twisting character must have dimension n and weight 1 mod d.
    CHECK_THROWS_AS(catalog_projective(3, ext3, n_trivial(ext3, 4)), InvalidInput);
    CHECK_THROWS_AS(catalog_projective(1, ext3, n_trivial(ext3, 1)), InvalidInput);
}

TEST_CASE("quadric catalog") {
    // Odd dimension: one spinor bundle. dim 3 quadric in P^4.
    ExcCollection q5 = catalog_quadric(5);
    REQUIRE(q5.size() == 4);
    CHECK(q5.objects[0].label == "S");
    CHECK(q5.objects[1].label == "O(-2)");
    CHECK(q5.objects[2].label == "O(-1)");
    CHECK(q5.objects[3].label == "O");
    CHECK(blocks_of(q5) == std::vector<int>{0, 1, 2, 3});
    CHECK_FALSE(q5.objects[0].weight.has_value());
    CHECK(q5.objects[1].weight == 2);
    CHECK(q5.objects[3].weight == 0);

    // Even dimension: two spinor bundles sharing the first block.
    ExcCollection q6 = catalog_quadric(6);
    REQUIRE(q6.size() == 6);
    CHECK(q6.objects[0].label == "S+");
    CHECK(q6.objects[1].label == "S-");
    CHECK(blocks_of(q6) == std::vector<int>{0, 0, 1, 2, 3, 4});

    // Sections of O(k) on a quadric: C(n-1+k, k) - C(n-3+k, k-2).
    // The conic (n = 3) is P^1 re-embedded: O(1) has 3 sections.
    ExcCollection q3 = catalog_quadric(3);
    CHECK(grading_total(q3, 1, 1) == 1);
    CHECK(grading_total(q5, 1, 2) == 5);
    CHECK(grading_total(q5, 1, 3) == 14);
    CHECK(grading_total(q5, 2, 3) == 5);

    // Spinor pairs are deliberately not recorded.
    CHECK(q5.homchars.count({0, 1}) == 0);
    CHECK(q6.homchars.count({0, 2}) == 0);

    validate_collection(q5);
    validate_collection(q6);
    CHECK(check_numeric(q6).ok());
    CHECK_THROWS_AS(catalog_quadric(2), InvalidInput);
}

TEST_CASE("grassmannian catalog") {
    ExcCollection g24 = catalog_grassmannian(2, 4);
    REQUIRE(g24.size() == 6);
    CHECK(blocks_of(g24) == std::vector<int>{0, 1, 2, 2, 3, 4});
    CHECK(g24.objects[0].label == "Sigma^(2,2)S");
    CHECK(g24.objects[1].label == "Sigma^(2,1)S");
    CHECK(g24.objects[2].label == "Sigma^(2)S");
    CHECK(g24.objects[3].label == "Sigma^(1,1)S");
    CHECK(g24.objects[4].label == "Sigma^(1)S");
    CHECK(g24.objects[5].label == "O");
    CHECK(g24.objects[0].weight == 4);
    CHECK(g24.objects[5].weight == 0);
    validate_collection(g24);

    // Identity pairs only.
    CHECK(g24.homchars.size() == 6);
    CHECK(grading_total(g24, 0, 0) == 1);

    ExcCollection g25 = catalog_grassmannian(2, 5);
    CHECK(g25.size() == 10);
    CHECK_THROWS_AS(catalog_grassmannian(0, 4), InvalidInput);
    CHECK_THROWS_AS(catalog_grassmannian(4, 4), InvalidInput);
}

TEST_CASE("del pezzo catalogs") {
    for (int r = 0; r <= 4; ++r) {
        ExcCollection c = catalog_delpezzo("eooo" + std::to_string(r));
        CHECK(c.size() == r + 3);
        validate_collection(c);
        NumericCheck chk = check_numeric(c);
        CHECK(chk.applicable);
        CHECK(chk.ok());
    }

    ExcCollection kn3 = catalog_delpezzo("kn3");
    REQUIRE(kn3.size() == 6);
    CHECK(blocks_of(kn3) == std::vector<int>{0, 1, 1, 1, 2, 2});
    CHECK(kn3.objects[0].label == "O");
    CHECK(kn3.objects[1].label == "O(L-E1)");
    CHECK(kn3.objects[5].label == "O(2L-E1-E2-E3)");
    CHECK(check_numeric(kn3).ok());

    ExcCollection kn4 = catalog_delpezzo("kn4");
    REQUIRE(kn4.size() == 7);
    CHECK(blocks_of(kn4) == std::vector<int>{0, 1, 2, 2, 2, 2, 2});
    CHECK(kn4.objects[1].label == "F");
    CHECK(kn4.objects[1].kclass->rank == 2);
    CHECK(kn4.objects[3].label == "O(E1-K-L)");
    CHECK(check_numeric(kn4).ok());
    // chi(O, F) counts the twisted sections.
    PicLattice lat = *kn4.lat;
    CHECK(euler_pair(lat, *kn4.objects[0].kclass, *kn4.objects[1].kclass) == 5);
    CHECK(euler_pair(lat, *kn4.objects[1].kclass, *kn4.objects[0].kclass) == 0);
    CHECK(euler_pair(lat, *kn4.objects[1].kclass, *kn4.objects[2].kclass) == 1);
    CHECK(euler_pair(lat, *kn4.objects[1].kclass, *kn4.objects[1].kclass) == 1);

    CHECK_THROWS_AS(catalog_delpezzo("eooo5"), InvalidInput);
    CHECK_THROWS_AS(catalog_delpezzo("nonsense"), InvalidInput);
}

TEST_CASE("involution isometries") {
    PicLattice dp{4};
    PicMap swap12 = pic_automorphism_from_involution(dp, PointSwap{1, 2});
    CHECK(swap12.is_involution());
    CHECK(swap12.apply(dp.E(1)) == dp.E(2));
    CHECK(swap12.apply(dp.E(3)) == dp.E(3));
    CHECK(swap12.apply(dp.K()) == dp.K());

    PicMap quad = pic_automorphism_from_involution(dp, QuadraticTransform{1, 2, 3});
    CHECK(quad.is_involution());
    PicVec expect_l = {2, -1, -1, -1, 0};
    CHECK(quad.apply(dp.L()) == expect_l);
    PicVec expect_e1 = {1, 0, -1, -1, 0};
    CHECK(quad.apply(dp.E(1)) == expect_e1);
    CHECK(quad.apply(dp.E(4)) == dp.E(4));

    // Both involutions permute the (-1)-curves.
    auto curves = minus_one_curves(dp);
    std::set<PicVec> orig(curves.begin(), curves.end());
    for (const PicMap* m : {&swap12, &quad}) {
        std::set<PicVec> image;
        for (const PicVec& c : curves) image.insert(m->apply(c));
        CHECK(image == orig);
    }

    CHECK_THROWS_AS(pic_automorphism_from_involution(dp, PointSwap{1, 1}), InvalidInput);
    CHECK_THROWS_AS(pic_automorphism_from_involution(dp, QuadraticTransform{1, 2, 5}),
                    InvalidInput);
    CHECK_THROWS_AS(pic_automorphism_from_involution(PicLattice{2}, QuadraticTransform{1, 2, 3}),
                    InvalidInput);
}
