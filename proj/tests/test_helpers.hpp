#pragma once

#include <random>
#include <vector>

#include "acutecube/audit.hpp"
#include "acutecube/constructions.hpp"
#include "acutecube/mesh.hpp"
#include "acutecube/point.hpp"

namespace testutil {

// The canonical mesh is expensive enough to build once per test binary.
inline const acutecube::TetMesh& canonical_mesh() {
    static const acutecube::TetMesh mesh = acutecube::canonical_cube();
    return mesh;
}

inline const acutecube::AuditReport& canonical_report() {
    static const acutecube::AuditReport report = acutecube::audit(canonical_mesh());
    return report;
}

// The regular tetrahedron on four pairwise nonadjacent cube corners.
inline std::vector<acutecube::MilliPoint> regular_corner_tet() {
    return {{-1000, -1000, -1000}, {-1000, 1000, 1000}, {1000, -1000, 1000}, {1000, 1000, -1000}};
}

// The right-angle tetrahedron at the origin corner.
inline std::vector<acutecube::MilliPoint> corner_tet() {
    return {{0, 0, 0}, {1000, 0, 0}, {0, 1000, 0}, {0, 0, 1000}};
}

inline acutecube::TetMesh one_tet_mesh(const std::vector<acutecube::MilliPoint>& pts) {
    return acutecube::make_mesh(pts, {acutecube::Tet{{0, 1, 2, 3}}});
}

// The five-tet nonobtuse decomposition of the cube: the regular corner
// tetrahedron plus four right-angle corner tets.
inline acutecube::TetMesh five_tet_cube() {
    const std::vector<acutecube::MilliPoint> pts = {
        {-1000, -1000, -1000}, {-1000, 1000, 1000}, {1000, -1000, 1000}, {1000, 1000, -1000},
        {1000, 1000, 1000},    {-1000, -1000, 1000}, {-1000, 1000, -1000}, {1000, -1000, -1000}};
    std::vector<acutecube::Tet> tets = {
        acutecube::Tet{{0, 1, 2, 3}},  // central regular tet
        acutecube::Tet{{4, 1, 2, 3}},  // corner (1,1,1)
        acutecube::Tet{{5, 0, 1, 2}},  // corner (-1,-1,1)
        acutecube::Tet{{6, 0, 1, 3}},  // corner (-1,1,-1)
        acutecube::Tet{{7, 0, 2, 3}},  // corner (1,-1,-1)
    };
    return acutecube::make_mesh(pts, tets);
}

inline std::vector<acutecube::MilliPoint> random_points(std::mt19937_64& rng, int n,
                                                        std::int64_t lim) {
    std::vector<acutecube::MilliPoint> pts;
    const std::uint64_t span = static_cast<std::uint64_t>(2 * lim + 1);
    while (static_cast<int>(pts.size()) < n) {
        acutecube::MilliPoint p{static_cast<std::int64_t>(rng() % span) - lim,
                                static_cast<std::int64_t>(rng() % span) - lim,
                                static_cast<std::int64_t>(rng() % span) - lim};
        bool dup = false;
        for (const auto& q : pts) {
            if (q == p) dup = true;
        }
        if (!dup) pts.push_back(p);
    }
    return pts;
}

// A random non-degenerate tetrahedron.
inline std::vector<acutecube::MilliPoint> random_tet(std::mt19937_64& rng, std::int64_t lim) {
    for (;;) {
        auto pts = random_points(rng, 4, lim);
        if (acutecube::orient3d(pts[0], pts[1], pts[2], pts[3]) > 0) return pts;
        std::swap(pts[2], pts[3]);
        if (acutecube::orient3d(pts[0], pts[1], pts[2], pts[3]) > 0) return pts;
    }
}

}  // namespace testutil
