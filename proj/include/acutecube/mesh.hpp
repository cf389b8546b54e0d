#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "acutecube/metrics.hpp"
#include "acutecube/point.hpp"
#include "acutecube/predicates.hpp"

namespace acutecube {

// Vertex indices of one positively oriented tetrahedron.
struct Tet {
    std::array<int, 4> v{};

    friend bool operator==(const Tet&, const Tet&) = default;
};

struct TetMesh {
    std::vector<MilliPoint> vertices;
    std::vector<Tet> tets;
};

struct MeshError : Error {
    using Error::Error;
};

inline std::array<int, 4> sorted_verts(const Tet& t) {
    std::array<int, 4> s = t.v;
    std::sort(s.begin(), s.end());
    return s;
}

// Sorts vertex indices ascending and restores positive orientation by
// swapping the last two when needed.
inline Tet normalized_tet(const Tet& t, const std::vector<MilliPoint>& pts) {
    Tet out{sorted_verts(t)};
    const int o = orient3d(pts[out.v[0]], pts[out.v[1]], pts[out.v[2]], pts[out.v[3]]);
    if (o == 0) throw DegenerateTetError("normalized_tet: coplanar vertices");
    if (o < 0) std::swap(out.v[2], out.v[3]);
    return out;
}

inline void normalize_mesh(TetMesh& mesh) {
    for (auto& t : mesh.tets) t = normalized_tet(t, mesh.vertices);
    std::sort(mesh.tets.begin(), mesh.tets.end(),
              [](const Tet& a, const Tet& b) { return sorted_verts(a) < sorted_verts(b); });
}

// Builds a mesh from raw tetrahedra, flipping any negatively oriented ones.
inline TetMesh make_mesh(std::vector<MilliPoint> vertices, std::vector<Tet> tets) {
    TetMesh mesh{std::move(vertices), std::move(tets)};
    const int n = static_cast<int>(mesh.vertices.size());
    for (auto& t : mesh.tets) {
        for (int i : t.v) {
            if (i < 0 || i >= n) throw MeshError("tet vertex index out of range");
        }
        t = normalized_tet(t, mesh.vertices);
    }
    std::sort(mesh.tets.begin(), mesh.tets.end(),
              [](const Tet& a, const Tet& b) { return sorted_verts(a) < sorted_verts(b); });
    return mesh;
}

struct EdgeInfo {
    int a, b;           // a < b
    int incident_tets;
    bool boundary;      // lies in some boundary triangle
};

struct TriangleInfo {
    std::array<int, 3> v{};  // ascending
    int tet0 = -1;
    int tet1 = -1;

    bool boundary() const { return tet1 < 0; }
};

struct Connectivity {
    std::vector<EdgeInfo> edges;          // lexicographic order
    std::vector<TriangleInfo> triangles;  // lexicographic order
    std::vector<char> vertex_boundary;
    std::vector<int> vertex_degree;       // number of incident edges
    int boundary_vertex_count = 0;
    int boundary_edge_count = 0;
    int boundary_triangle_count = 0;
};

namespace detail {

struct TriKeyHash {
    std::size_t operator()(const std::array<int, 3>& k) const {
        std::uint64_t h = 1469598103934665603ULL;
        for (int v : k) {
            h ^= static_cast<std::uint64_t>(v) + 0x9e3779b9;
            h *= 1099511628211ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

}  // namespace detail

inline Connectivity connectivity(const TetMesh& mesh) {
    Connectivity conn;
    const int n = static_cast<int>(mesh.vertices.size());
    conn.vertex_boundary.assign(static_cast<std::size_t>(n), 0);
    conn.vertex_degree.assign(static_cast<std::size_t>(n), 0);

    std::unordered_map<std::array<int, 3>, std::pair<int, int>, detail::TriKeyHash> tris;
    tris.reserve(mesh.tets.size() * 4);
    std::map<std::pair<int, int>, int> edge_count;
    for (int ti = 0; ti < static_cast<int>(mesh.tets.size()); ++ti) {
        const auto s = sorted_verts(mesh.tets[static_cast<std::size_t>(ti)]);
        for (int k = 0; k < 6; ++k) {
            ++edge_count[{s[kTetEdges[k][0]], s[kTetEdges[k][1]]}];
        }
        for (int f = 0; f < 4; ++f) {
            std::array<int, 3> key{};
            int m = 0;
            for (int i = 0; i < 4; ++i) {
                if (i != f) key[m++] = s[i];
            }
            auto [it, fresh] = tris.try_emplace(key, std::make_pair(ti, -1));
            if (!fresh) {
                if (it->second.second >= 0) {
                    throw MeshError("triangle shared by more than two tetrahedra");
                }
                it->second.second = ti;
            }
        }
    }

    conn.triangles.reserve(tris.size());
    for (const auto& [key, inc] : tris) {
        conn.triangles.push_back({key, inc.first, inc.second});
    }
    std::sort(conn.triangles.begin(), conn.triangles.end(),
              [](const TriangleInfo& a, const TriangleInfo& b) { return a.v < b.v; });

    std::map<std::pair<int, int>, char> boundary_edges;
    for (const auto& t : conn.triangles) {
        if (!t.boundary()) continue;
        ++conn.boundary_triangle_count;
        for (int i = 0; i < 3; ++i) {
            conn.vertex_boundary[static_cast<std::size_t>(t.v[static_cast<std::size_t>(i)])] = 1;
            const int a = t.v[static_cast<std::size_t>(i)];
            const int b = t.v[static_cast<std::size_t>((i + 1) % 3)];
            boundary_edges[{std::min(a, b), std::max(a, b)}] = 1;
        }
    }

    conn.edges.reserve(edge_count.size());
    for (const auto& [key, cnt] : edge_count) {
        const bool bnd = boundary_edges.count(key) > 0;
        conn.edges.push_back({key.first, key.second, cnt, bnd});
        ++conn.vertex_degree[static_cast<std::size_t>(key.first)];
        ++conn.vertex_degree[static_cast<std::size_t>(key.second)];
        if (bnd) ++conn.boundary_edge_count;
    }
    for (char b : conn.vertex_boundary) {
        if (b) ++conn.boundary_vertex_count;
    }
    return conn;
}

// Structural sanity: valid indices, positive orientations, no duplicate
// tetrahedra, and no facet shared by more than two tetrahedra.
inline void validate_mesh(const TetMesh& mesh) {
    const int n = static_cast<int>(mesh.vertices.size());
    std::unordered_map<std::array<int, 3>, int, detail::TriKeyHash> seen_tets;
    for (const auto& t : mesh.tets) {
        for (int i : t.v) {
            if (i < 0 || i >= n) throw MeshError("tet vertex index out of range");
        }
        if (orient3d(mesh.vertices[static_cast<std::size_t>(t.v[0])],
                     mesh.vertices[static_cast<std::size_t>(t.v[1])],
                     mesh.vertices[static_cast<std::size_t>(t.v[2])],
                     mesh.vertices[static_cast<std::size_t>(t.v[3])]) <= 0) {
            throw MeshError("tet is not positively oriented");
        }
    }
    std::vector<std::array<int, 4>> keys;
    keys.reserve(mesh.tets.size());
    for (const auto& t : mesh.tets) keys.push_back(sorted_verts(t));
    std::sort(keys.begin(), keys.end());
    if (std::adjacent_find(keys.begin(), keys.end()) != keys.end()) {
        throw MeshError("duplicate tetrahedron");
    }
    connectivity(mesh);  // throws on facet over-sharing
}

inline std::vector<EdgeInfo> extract_edges(const TetMesh& mesh) {
    return connectivity(mesh).edges;
}

struct BoundarySurface {
    std::vector<TriangleInfo> triangles;  // every boundary triangle
    bool cube_grouping = false;           // mesh fits [-1000,1000]^3, grouped by face
    // Face order: x-, x+, y-, y+, z-, z+; values index into `triangles`.
    std::array<std::vector<int>, 6> face_triangles{};
    std::vector<int> ungrouped;
};

inline const char* cube_face_name(int face) {
    static const char* names[6] = {"x-", "x+", "y-", "y+", "z-", "z+"};
    return names[face];
}

inline BoundarySurface boundary_surface(const TetMesh& mesh, const Connectivity& conn) {
    BoundarySurface out;
    for (const auto& t : conn.triangles) {
        if (t.boundary()) out.triangles.push_back(t);
    }
    bool in_cube = true;
    for (const auto& p : mesh.vertices) {
        if (max_abs_coord(p) > 1000) {
            in_cube = false;
            break;
        }
    }
    if (!in_cube) return out;
    out.cube_grouping = true;
    for (int i = 0; i < static_cast<int>(out.triangles.size()); ++i) {
        const auto& t = out.triangles[static_cast<std::size_t>(i)];
        const MilliPoint p[3] = {mesh.vertices[static_cast<std::size_t>(t.v[0])],
                                 mesh.vertices[static_cast<std::size_t>(t.v[1])],
                                 mesh.vertices[static_cast<std::size_t>(t.v[2])]};
        int face = -1;
        auto coord = [](const MilliPoint& q, int axis) {
            return axis == 0 ? q.x : (axis == 1 ? q.y : q.z);
        };
        for (int axis = 0; axis < 3 && face < 0; ++axis) {
            for (int side = 0; side < 2 && face < 0; ++side) {
                const std::int64_t plane = side == 0 ? -1000 : 1000;
                if (coord(p[0], axis) == plane && coord(p[1], axis) == plane &&
                    coord(p[2], axis) == plane) {
                    face = axis * 2 + side;
                }
            }
        }
        if (face >= 0) {
            out.face_triangles[static_cast<std::size_t>(face)].push_back(i);
        } else {
            out.ungrouped.push_back(i);
        }
    }
    return out;
}

inline BoundarySurface boundary_surface(const TetMesh& mesh) {
    return boundary_surface(mesh, connectivity(mesh));
}

struct DegreeTable {
    std::vector<int> degree;
    std::vector<char> boundary;
    std::map<int, int> interior_histogram;
    std::map<int, int> boundary_histogram;
};

inline DegreeTable vertex_degrees(const TetMesh& mesh) {
    const auto conn = connectivity(mesh);
    DegreeTable out{conn.vertex_degree, conn.vertex_boundary, {}, {}};
    for (std::size_t i = 0; i < out.degree.size(); ++i) {
        auto& hist = out.boundary[i] ? out.boundary_histogram : out.interior_histogram;
        ++hist[out.degree[i]];
    }
    return out;
}

}  // namespace acutecube
