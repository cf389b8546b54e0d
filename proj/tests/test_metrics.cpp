#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <random>

#include "acutecube/metrics.hpp"
#include "acutecube/symmetry.hpp"
#include "test_helpers.hpp"

using namespace acutecube;
using Catch::Approx;

namespace {

constexpr double kRegularDihedral = 70.528779365509;  // acos(1/3)
constexpr double kCornerOblique = 54.735610317245;    // acos(1/sqrt(3))

std::array<double, 6> sorted6(std::array<double, 6> a) {
    std::sort(a.begin(), a.end());
    return a;
}

}  // namespace

TEST_CASE("circumsphere of the cube-corner regular tetrahedron") {
    const auto t = testutil::regular_corner_tet();
    const auto cs = circumsphere(t[0], t[1], t[2], t[3]);
    CHECK(cs.center.x == 0);
    CHECK(cs.center.y == 0);
    CHECK(cs.center.z == 0);
    CHECK(cs.r_squared == Rational(3000000));
}

TEST_CASE("circumsphere of the corner tetrahedron") {
    const auto t = testutil::corner_tet();
    const auto cs = circumsphere(t[0], t[1], t[2], t[3]);
    CHECK(cs.center.x == 500);
    CHECK(cs.center.y == 500);
    CHECK(cs.center.z == 500);
    CHECK(cs.r_squared == Rational(750000));
}

TEST_CASE("circumsphere rejects coplanar points") {
    CHECK_THROWS_AS(
        circumsphere({0, 0, 0}, {1000, 0, 0}, {0, 1000, 0}, {500, 500, 0}),
        DegenerateTetError);
}

TEST_CASE("dihedral angles of the regular tetrahedron") {
    const auto t = testutil::regular_corner_tet();
    for (double a : dihedral_angles(t[0], t[1], t[2], t[3])) {
        CHECK(a == Approx(kRegularDihedral).epsilon(1e-12));
    }
}

TEST_CASE("dihedral angles of the corner tetrahedron") {
    const auto t = testutil::corner_tet();
    const auto d = sorted6(dihedral_angles(t[0], t[1], t[2], t[3]));
    for (int i = 0; i < 3; ++i) CHECK(d[static_cast<std::size_t>(i)] == Approx(kCornerOblique));
    for (int i = 3; i < 6; ++i) CHECK(d[static_cast<std::size_t>(i)] == Approx(90.0));
}

TEST_CASE("face angles of the regular and corner tetrahedra") {
    const auto r = testutil::regular_corner_tet();
    for (double a : face_angles(r[0], r[1], r[2], r[3])) CHECK(a == Approx(60.0));

    const auto c = testutil::corner_tet();
    auto fa = face_angles(c[0], c[1], c[2], c[3]);
    std::sort(fa.begin(), fa.end());
    // three coordinate-plane facets (90,45,45 each) and one equilateral facet
    int n45 = 0, n60 = 0, n90 = 0;
    for (double a : fa) {
        if (std::abs(a - 45.0) < 1e-9) ++n45;
        else if (std::abs(a - 60.0) < 1e-9) ++n60;
        else if (std::abs(a - 90.0) < 1e-9) ++n90;
    }
    CHECK(n45 == 6);
    CHECK(n60 == 3);
    CHECK(n90 == 3);
}

TEST_CASE("face angles of any facet sum to 180 degrees") {
    std::mt19937_64 rng(23);
    for (int it = 0; it < 100; ++it) {
        const auto t = testutil::random_tet(rng, 2000);
        const auto fa = face_angles(t[0], t[1], t[2], t[3]);
        for (int f = 0; f < 4; ++f) {
            const double sum = fa[static_cast<std::size_t>(3 * f)] +
                               fa[static_cast<std::size_t>(3 * f + 1)] +
                               fa[static_cast<std::size_t>(3 * f + 2)];
            CHECK(sum == Approx(180.0).epsilon(1e-9));
        }
    }
}

TEST_CASE("h/R of the regular tetrahedron is 1/3 on every facet") {
    const auto t = testutil::regular_corner_tet();
    for (double v : h_over_r(t[0], t[1], t[2], t[3])) {
        CHECK(v == Approx(1.0 / 3.0).epsilon(1e-12));
    }
}

TEST_CASE("h/R of the corner tetrahedron against an independent computation") {
    // Independent oracle: the circumcenter is (500,500,500) (checked above
    // exactly), so the distances to the planes x=0, y=0, z=0 are 500 with the
    // center on the same side as the opposite vertex, and the distance to
    // x+y+z=1000 is 500/sqrt(3) with the center opposite the origin vertex.
    const double R = std::sqrt(750000.0);
    const double expect_coord = 500.0 / R;              // = 1/sqrt(3)
    const double expect_oblique = -(500.0 / std::sqrt(3.0)) / R;  // = -1/3
    const auto t = testutil::corner_tet();
    auto hr = h_over_r(t[0], t[1], t[2], t[3]);
    std::sort(hr.begin(), hr.end());
    CHECK(hr[0] == Approx(expect_oblique).epsilon(1e-12));
    CHECK(hr[0] == Approx(-1.0 / 3.0).epsilon(1e-12));
    for (int i = 1; i < 4; ++i) {
        CHECK(hr[static_cast<std::size_t>(i)] == Approx(expect_coord).epsilon(1e-12));
    }
    // and the tet is not 3-well-centered
    const auto signs = h_over_r_signs(t[0], t[1], t[2], t[3]);
    CHECK(std::count(signs.begin(), signs.end(), -1) == 1);
    CHECK(std::count(signs.begin(), signs.end(), 1) == 3);
}

TEST_CASE("h/R sign matches an orientation test with the rational circumcenter") {
    std::mt19937_64 rng(29);
    for (int it = 0; it < 100; ++it) {
        const auto t = testutil::random_tet(rng, 1500);
        const auto cs = circumsphere(t[0], t[1], t[2], t[3]);
        const auto signs = h_over_r_signs(t[0], t[1], t[2], t[3]);
        const auto values = h_over_r(t[0], t[1], t[2], t[3]);
        for (int i = 0; i < 4; ++i) {
            const auto& f = kTetFacets[i];
            // plane normal and rational side evaluations, computed afresh
            const MilliPoint f0 = t[static_cast<std::size_t>(f[0])];
            const MilliPoint f1 = t[static_cast<std::size_t>(f[1])];
            const MilliPoint f2 = t[static_cast<std::size_t>(f[2])];
            const MilliPoint u = f1 - f0, v = f2 - f0;
            const Rational nx = Rational(u.y) * v.z - Rational(u.z) * v.y;
            const Rational ny = Rational(u.z) * v.x - Rational(u.x) * v.z;
            const Rational nz = Rational(u.x) * v.y - Rational(u.y) * v.x;
            const Rational side_center = nx * (cs.center.x - f0.x) + ny * (cs.center.y - f0.y) +
                                         nz * (cs.center.z - f0.z);
            const MilliPoint opp = t[static_cast<std::size_t>(i)];
            const Rational side_opp = nx * (Rational(opp.x) - f0.x) +
                                      ny * (Rational(opp.y) - f0.y) +
                                      nz * (Rational(opp.z) - f0.z);
            int expect = 0;
            if (side_center != 0) {
                expect = (side_center > 0) == (side_opp > 0) ? 1 : -1;
            }
            CHECK(signs[static_cast<std::size_t>(i)] == expect);
            if (expect != 0) {
                CHECK(values[static_cast<std::size_t>(i)] * expect > 0.0);
            }
        }
    }
}

TEST_CASE("all tet metrics are invariant under the 24 symmetries") {
    std::mt19937_64 rng(31);
    const auto& group = full_symmetry_group();
    for (int it = 0; it < 20; ++it) {
        const auto t = testutil::random_tet(rng, 1200);
        auto dih = dihedral_angles(t[0], t[1], t[2], t[3]);
        auto fa = face_angles(t[0], t[1], t[2], t[3]);
        auto hr = h_over_r(t[0], t[1], t[2], t[3]);
        std::sort(dih.begin(), dih.end());
        std::sort(fa.begin(), fa.end());
        std::sort(hr.begin(), hr.end());
        for (const auto& g : group) {
            const MilliPoint a = g.apply(t[0]), b = g.apply(t[1]), c = g.apply(t[2]),
                             d = g.apply(t[3]);
            auto dih2 = dihedral_angles(a, b, c, d);
            auto fa2 = face_angles(a, b, c, d);
            auto hr2 = h_over_r(a, b, c, d);
            std::sort(dih2.begin(), dih2.end());
            std::sort(fa2.begin(), fa2.end());
            std::sort(hr2.begin(), hr2.end());
            for (int k = 0; k < 6; ++k) {
                CHECK(dih2[static_cast<std::size_t>(k)] ==
                      Approx(dih[static_cast<std::size_t>(k)]).epsilon(1e-12));
            }
            for (int k = 0; k < 12; ++k) {
                CHECK(fa2[static_cast<std::size_t>(k)] ==
                      Approx(fa[static_cast<std::size_t>(k)]).epsilon(1e-12));
            }
            for (int k = 0; k < 4; ++k) {
                CHECK(hr2[static_cast<std::size_t>(k)] ==
                      Approx(hr[static_cast<std::size_t>(k)]).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("metric functions reject degenerate tetrahedra") {
    const MilliPoint a{0, 0, 0}, b{1000, 0, 0}, c{0, 1000, 0}, d{700, 300, 0};
    CHECK_THROWS_AS(dihedral_angles(a, b, c, d), DegenerateTetError);
    CHECK_THROWS_AS(face_angles(a, b, c, d), DegenerateTetError);
    CHECK_THROWS_AS(h_over_r(a, b, c, d), DegenerateTetError);
}
