#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "acutecube/predicates.hpp"
#include "acutecube/symmetry.hpp"
#include "test_helpers.hpp"

using namespace acutecube;

TEST_CASE("orient3d on axis-aligned configurations") {
    const MilliPoint o{0, 0, 0}, ex{1000, 0, 0}, ey{0, 1000, 0}, ez{0, 0, 1000};
    CHECK(orient3d(o, ex, ey, ez) == 1);
    CHECK(orient3d(o, ex, ey, {500, 500, 0}) == 0);
    CHECK(orient3d(o, ex, ey, {0, 0, -1000}) == -1);
}

TEST_CASE("orient3d antisymmetry under transpositions") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 300; ++it) {
        const auto p = testutil::random_points(rng, 4, 2000);
        const int base = orient3d(p[0], p[1], p[2], p[3]);
        CHECK(orient3d(p[1], p[0], p[2], p[3]) == -base);
        CHECK(orient3d(p[0], p[2], p[1], p[3]) == -base);
        CHECK(orient3d(p[0], p[1], p[3], p[2]) == -base);
        CHECK(orient3d(p[2], p[3], p[0], p[1]) == base);  // double transposition
    }
}

TEST_CASE("insphere on the cube-corner regular tetrahedron") {
    const auto t = testutil::regular_corner_tet();
    REQUIRE(orient3d(t[0], t[1], t[2], t[3]) > 0);
    CHECK(insphere(t[0], t[1], t[2], t[3], {0, 0, 0}) == 1);
    // every cube corner lies on the circumsphere R^2 = 3e6
    CHECK(insphere(t[0], t[1], t[2], t[3], {-1000, -1000, 1000}) == 0);
    CHECK(insphere(t[0], t[1], t[2], t[3], {5000, 0, 0}) == -1);
}

TEST_CASE("insphere requires positive orientation") {
    const auto t = testutil::regular_corner_tet();
    CHECK_THROWS_AS(insphere(t[1], t[0], t[2], t[3], {0, 0, 0}), OrientationError);
}

TEST_CASE("insphere is invariant under even permutations") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 200; ++it) {
        const auto t = testutil::random_tet(rng, 2000);
        const auto e = testutil::random_points(rng, 1, 3000);
        const int base = insphere(t[0], t[1], t[2], t[3], e[0]);
        CHECK(insphere(t[1], t[0], t[3], t[2], e[0]) == base);
        CHECK(insphere(t[2], t[3], t[0], t[1], e[0]) == base);
        CHECK(insphere(t[3], t[2], t[1], t[0], e[0]) == base);
    }
}

TEST_CASE("insphere determinant flips sign under odd permutations") {
    std::mt19937_64 rng(13);
    for (int it = 0; it < 200; ++it) {
        const auto t = testutil::random_tet(rng, 2000);
        const auto e = testutil::random_points(rng, 1, 3000);
        using detail::insphere_det;
        const auto base = insphere_det<BigInt>(t[0], t[1], t[2], t[3], e[0]);
        CHECK(insphere_det<BigInt>(t[1], t[0], t[2], t[3], e[0]) == -base);
        CHECK(insphere_det<BigInt>(t[0], t[1], t[3], t[2], e[0]) == -base);
    }
}

TEST_CASE("fast integer path agrees with arbitrary precision") {
    std::mt19937_64 rng(17);
    for (int it = 0; it < 500; ++it) {
        const auto p = testutil::random_points(rng, 5, 2000);
        CHECK(detail::orient3d_impl<detail::Int128>(p[0], p[1], p[2], p[3]) ==
              detail::orient3d_impl<BigInt>(p[0], p[1], p[2], p[3]));
        CHECK(detail::sign_of(detail::insphere_det<detail::Int128>(p[0], p[1], p[2], p[3], p[4])) ==
              detail::sign_of(detail::insphere_det<BigInt>(p[0], p[1], p[2], p[3], p[4])));
    }
}

TEST_CASE("dihedral cosine sign classifies right, acute and obtuse edges") {
    // corner tet: edge along x has a right dihedral
    CHECK(dihedral_cos_sign({0, 0, 0}, {1000, 0, 0}, {0, 1000, 0}, {0, 0, 1000}) == 0);
    // regular tet: all dihedrals acute
    const auto r = testutil::regular_corner_tet();
    CHECK(dihedral_cos_sign(r[0], r[1], r[2], r[3]) == 1);
    // flat-ish tet with obtuse dihedral along the shared edge
    CHECK(dihedral_cos_sign({0, 0, 0}, {1000, 0, 0}, {500, 100, 50}, {500, 100, -50}) == -1);
}

TEST_CASE("angle cosine sign matches the triangle angle type") {
    CHECK(angle_cos_sign({0, 0, 0}, {1000, 0, 0}, {0, 1000, 0}) == 0);   // right angle
    CHECK(angle_cos_sign({0, 0, 0}, {1000, 0, 0}, {1000, 1000, 0}) == 1);
    CHECK(angle_cos_sign({0, 0, 0}, {1000, 0, 0}, {-1000, 1000, 0}) == -1);
}

TEST_CASE("predicates are invariant under the 24 cube-tetrahedron symmetries") {
    std::mt19937_64 rng(19);
    const auto& group = full_symmetry_group();
    REQUIRE(group.size() == 24);
    for (int it = 0; it < 50; ++it) {
        const auto p = testutil::random_points(rng, 5, 1500);
        const int o = orient3d(p[0], p[1], p[2], p[3]);
        for (const auto& g : group) {
            const MilliPoint a = g.apply(p[0]), b = g.apply(p[1]), c = g.apply(p[2]),
                             d = g.apply(p[3]), e = g.apply(p[4]);
            // rotations preserve orientation, reflections flip it
            CHECK(orient3d(a, b, c, d) == g.det() * o);
            if (o == 1) {
                // sphere membership is order-free; reorient reflected tets
                const int got = g.det() == 1 ? insphere(a, b, c, d, e) : insphere(a, b, d, c, e);
                CHECK(got == insphere(p[0], p[1], p[2], p[3], p[4]));
            }
        }
    }
}
