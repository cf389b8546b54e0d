#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "acutecube/dataset.hpp"
#include "acutecube/delaunay.hpp"
#include "acutecube/mesh.hpp"
#include "acutecube/point.hpp"
#include "acutecube/symmetry.hpp"

namespace acutecube {

struct ConstructionError : Error {
    using Error::Error;
};

struct DatasetIntegrityError : ConstructionError {
    using ConstructionError::ConstructionError;
};

struct FaceMismatchError : ConstructionError {
    using ConstructionError::ConstructionError;
};

struct EndFaceMismatchError : ConstructionError {
    using ConstructionError::ConstructionError;
};

struct CanonicalDataset {
    std::vector<MilliPoint> seed26;   // vertices of the generating region
    std::vector<MilliPoint> full277;  // complete vertex set, generation order
};

inline CanonicalDataset canonical_dataset() {
    return {dataset_seed(), canonical_vertices()};
}

// Builds a dataset from an externally supplied full vertex table: the seed
// is recovered as the subset lying in the generating region.
inline CanonicalDataset dataset_from_vertices(std::vector<MilliPoint> full) {
    CanonicalDataset ds;
    for (const auto& p : full) {
        if (region_contains(p)) ds.seed26.push_back(p);
    }
    ds.full277 = std::move(full);
    return ds;
}

// The shipped table and the symmetry orbit of its seed must agree exactly:
// same per-stage growth (26 -> 41 -> 69 -> 137 -> 277) and the same final
// point set. This guards against transcription errors in either copy.
inline VertexGeneration verify_dataset(const CanonicalDataset& ds) {
    auto gen = generate_vertices(ds.seed26);
    const auto& counts = gen.block_counts;
    for (std::size_t i = 0; i < kDatasetBlockSizes.size(); ++i) {
        if (counts[i] != kDatasetBlockSizes[i]) {
            throw DatasetIntegrityError(
                "dataset stage " + std::to_string(i) + " produced " + std::to_string(counts[i]) +
                " new vertices, expected " + std::to_string(kDatasetBlockSizes[i]));
        }
    }
    const std::set<MilliPoint> generated(gen.full().begin(), gen.full().end());
    const std::set<MilliPoint> table(ds.full277.begin(), ds.full277.end());
    if (generated != table) {
        throw DatasetIntegrityError("generated orbit differs from the shipped vertex table");
    }
    if (table.size() != ds.full277.size()) {
        throw DatasetIntegrityError("vertex table contains duplicates");
    }
    return gen;
}

// The 1370-tetrahedron dihedral acute triangulation of the cube: the exact
// Delaunay triangulation of the 277 canonical vertices.
inline TetMesh canonical_cube(const CanonicalDataset& ds) {
    verify_dataset(ds);
    return triangulate(ds.full277, DegeneracyPolicy::kReject);
}

inline TetMesh canonical_cube() { return canonical_cube(canonical_dataset()); }

// Combinatorial variant: the degree-22 central vertex is replaced by a tiny
// regular tetrahedron (corners at +-0.05), giving 1387 tetrahedra that
// conform to the same surface triangulation.
inline TetMesh variant_1387(const CanonicalDataset& ds) {
    verify_dataset(ds);
    std::vector<MilliPoint> pts;
    pts.reserve(ds.full277.size() + 3);
    bool removed = false;
    for (const auto& p : ds.full277) {
        if (p == MilliPoint{0, 0, 0}) {
            removed = true;
            continue;
        }
        pts.push_back(p);
    }
    if (!removed) throw ConstructionError("variant: vertex table lacks the origin");
    pts.push_back({-50, -50, 50});
    pts.push_back({-50, 50, -50});
    pts.push_back({50, -50, -50});
    pts.push_back({50, 50, 50});
    return triangulate(pts, DegeneracyPolicy::kReject);
}

inline TetMesh variant_1387() { return variant_1387(canonical_dataset()); }

namespace detail {

// Exact-coordinate merge of transformed mesh copies into one complex.
class MeshMerger {
  public:
    int add_vertex(const MilliPoint& p) {
        auto [it, fresh] = index_.try_emplace(p, static_cast<int>(vertices_.size()));
        if (fresh) vertices_.push_back(p);
        return it->second;
    }

    void add_mesh(const TetMesh& mesh, auto&& transform, bool flip_orientation) {
        std::vector<int> remap(mesh.vertices.size());
        for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
            remap[i] = add_vertex(transform(mesh.vertices[i]));
        }
        for (const auto& t : mesh.tets) {
            Tet nt{{remap[static_cast<std::size_t>(t.v[0])],
                    remap[static_cast<std::size_t>(t.v[1])],
                    remap[static_cast<std::size_t>(t.v[2])],
                    remap[static_cast<std::size_t>(t.v[3])]}};
            if (flip_orientation) std::swap(nt.v[2], nt.v[3]);
            tets_.push_back(nt);
        }
    }

    TetMesh finish() && {
        TetMesh mesh{std::move(vertices_), std::move(tets_)};
        normalize_mesh(mesh);
        validate_mesh(mesh);
        return mesh;
    }

  private:
    std::unordered_map<MilliPoint, int, MilliPointHash> index_;
    std::vector<MilliPoint> vertices_;
    std::vector<Tet> tets_;
};

// Boundary triangles of `mesh` lying in the plane axis=plane, as sorted
// point triples.
inline std::set<std::array<MilliPoint, 3>> plane_triangles(const TetMesh& mesh, int axis,
                                                           std::int64_t plane) {
    const auto conn = connectivity(mesh);
    std::set<std::array<MilliPoint, 3>> out;
    for (const auto& tri : conn.triangles) {
        if (!tri.boundary()) continue;
        std::array<MilliPoint, 3> pts{mesh.vertices[static_cast<std::size_t>(tri.v[0])],
                                      mesh.vertices[static_cast<std::size_t>(tri.v[1])],
                                      mesh.vertices[static_cast<std::size_t>(tri.v[2])]};
        bool on_plane = true;
        for (const auto& p : pts) {
            if (coord(p, axis) != plane) on_plane = false;
        }
        if (!on_plane) continue;
        std::sort(pts.begin(), pts.end());
        out.insert(pts);
    }
    return out;
}

}  // namespace detail

// Reflects a cube-style mesh through its face at z = +1000 and glues the
// copies along the shared face, producing a 2x1x1 prism triangulation.
inline TetMesh reflect_prism(const TetMesh& mesh) {
    const auto face = detail::plane_triangles(mesh, 2, 1000);
    if (face.empty()) {
        throw FaceMismatchError("reflect_prism: mesh has no boundary face at z = +1000");
    }
    auto mirror = [](const MilliPoint& p) { return MilliPoint{p.x, p.y, 2000 - p.z}; };
    // A reflection fixes the glue face pointwise, so the two copies must
    // present identical triangulations there.
    std::set<std::array<MilliPoint, 3>> mirrored_face;
    for (auto tri : face) {
        for (auto& p : tri) p = mirror(p);
        std::sort(tri.begin(), tri.end());
        mirrored_face.insert(tri);
    }
    if (mirrored_face != face) {
        throw FaceMismatchError("reflect_prism: reflected face triangulation does not match");
    }
    detail::MeshMerger merger;
    merger.add_mesh(mesh, [](const MilliPoint& p) { return p; }, false);
    merger.add_mesh(mesh, mirror, true);
    return std::move(merger).finish();
}

// A periodic quotient: vertices on the two end faces along `axis` are
// identified pairwise under the translation that maps one face to the
// other. Geometry is untouched; only the combinatorics are quotiented.
struct PeriodicComplex {
    TetMesh mesh;                                    // the underlying finite mesh
    std::vector<int> vertex_class;                   // vertex -> class id, dense from 0
    int class_count = 0;
    std::vector<std::pair<int, int>> identified_pairs;  // (low-face vertex, image)

    std::array<int, 4> tet_classes(const Tet& t) const {
        std::array<int, 4> c{};
        for (int i = 0; i < 4; ++i) {
            c[static_cast<std::size_t>(i)] = vertex_class[static_cast<std::size_t>(t.v[i])];
        }
        std::sort(c.begin(), c.end());
        return c;
    }
};

inline PeriodicComplex periodic_identify(const TetMesh& mesh, int axis = 2) {
    std::int64_t lo = mesh.vertices.front().x, hi = lo;
    for (const auto& p : mesh.vertices) {
        lo = std::min(lo, coord(p, axis));
        hi = std::max(hi, coord(p, axis));
    }
    const std::int64_t shift = hi - lo;
    const auto lo_face = detail::plane_triangles(mesh, axis, lo);
    auto translate = [&](MilliPoint p) {
        if (axis == 0) p.x += shift;
        else if (axis == 1) p.y += shift;
        else p.z += shift;
        return p;
    };
    std::set<std::array<MilliPoint, 3>> lo_shifted;
    for (auto tri : lo_face) {
        for (auto& p : tri) p = translate(p);
        std::sort(tri.begin(), tri.end());
        lo_shifted.insert(tri);
    }
    if (lo_face.empty() || lo_shifted != detail::plane_triangles(mesh, axis, hi)) {
        throw EndFaceMismatchError("periodic_identify: end-face triangulations do not match");
    }

    std::unordered_map<MilliPoint, int, MilliPointHash> index;
    for (int i = 0; i < static_cast<int>(mesh.vertices.size()); ++i) {
        index.emplace(mesh.vertices[static_cast<std::size_t>(i)], i);
    }
    PeriodicComplex out;
    out.mesh = mesh;
    std::vector<int> parent(mesh.vertices.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    auto find = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v) {
            parent[static_cast<std::size_t>(v)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
            v = parent[static_cast<std::size_t>(v)];
        }
        return v;
    };
    for (int i = 0; i < static_cast<int>(mesh.vertices.size()); ++i) {
        const auto& p = mesh.vertices[static_cast<std::size_t>(i)];
        if (coord(p, axis) != lo) continue;
        const auto it = index.find(translate(p));
        if (it == index.end()) {
            throw EndFaceMismatchError("periodic_identify: unmatched end-face vertex");
        }
        out.identified_pairs.emplace_back(i, it->second);
        parent[static_cast<std::size_t>(find(i))] = find(it->second);
    }
    out.vertex_class.resize(mesh.vertices.size());
    std::unordered_map<int, int> dense;
    for (int i = 0; i < static_cast<int>(mesh.vertices.size()); ++i) {
        const int root = find(i);
        auto [it, fresh] = dense.try_emplace(root, static_cast<int>(dense.size()));
        out.vertex_class[static_cast<std::size_t>(i)] = it->second;
    }
    out.class_count = static_cast<int>(dense.size());
    return out;
}

// Combinatorics of the quotient complex: triangle and edge incidence counted
// on vertex classes rather than vertices.
struct QuotientConnectivity {
    int vertex_classes = 0;
    int edge_count = 0;
    int triangle_count = 0;
    int boundary_triangle_count = 0;
    std::map<int, int> edge_incidence_histogram;
};

inline QuotientConnectivity quotient_connectivity(const PeriodicComplex& pc) {
    QuotientConnectivity q;
    q.vertex_classes = pc.class_count;
    std::map<std::array<int, 3>, int> tri_count;
    std::map<std::pair<int, int>, int> edge_count;
    for (const auto& t : pc.mesh.tets) {
        const auto c = pc.tet_classes(t);
        for (int f = 0; f < 4; ++f) {
            std::array<int, 3> key{};
            int m = 0;
            for (int i = 0; i < 4; ++i) {
                if (i != f) key[m++] = c[static_cast<std::size_t>(i)];
            }
            ++tri_count[key];
        }
        for (const auto& e : kTetEdges) {
            ++edge_count[{c[static_cast<std::size_t>(e[0])], c[static_cast<std::size_t>(e[1])]}];
        }
    }
    q.triangle_count = static_cast<int>(tri_count.size());
    for (const auto& [k, n] : tri_count) {
        if (n == 1) ++q.boundary_triangle_count;
    }
    q.edge_count = static_cast<int>(edge_count.size());
    for (const auto& [k, n] : edge_count) ++q.edge_incidence_histogram[n];
    return q;
}

struct TilingSpec {
    int nx = 1, ny = 1, nz = 1;
    bool periodic_x = false, periodic_y = false, periodic_z = false;

    bool periodic(int axis) const {
        return axis == 0 ? periodic_x : (axis == 1 ? periodic_y : periodic_z);
    }
};

// Tiles an nx x ny x nz brick with alternately reflected copies of a cube
// triangulation, so adjacent cells present mirror-identical triangulations
// on every shared face. Cell (0,0,0) is the untransformed cube.
inline TetMesh tile_box(const TilingSpec& spec, const TetMesh& cube) {
    if (spec.nx < 1 || spec.ny < 1 || spec.nz < 1) {
        throw ConstructionError("tile_box: cell counts must be positive");
    }
    for (const auto& p : cube.vertices) {
        if (max_abs_coord(p) > 1000) {
            throw ConstructionError("tile_box: base mesh must lie in the unit cube");
        }
    }
    detail::MeshMerger merger;
    for (int i = 0; i < spec.nx; ++i) {
        for (int j = 0; j < spec.ny; ++j) {
            for (int k = 0; k < spec.nz; ++k) {
                auto place = [&](const MilliPoint& p) {
                    auto cell = [](int idx, std::int64_t v) {
                        return 2000LL * idx + (idx % 2 == 0 ? v : -v);
                    };
                    return MilliPoint{cell(i, p.x), cell(j, p.y), cell(k, p.z)};
                };
                const bool flip = ((i + j + k) % 2) != 0;
                merger.add_mesh(cube, place, flip);
            }
        }
    }
    return std::move(merger).finish();
}

inline TetMesh tile_box(const TilingSpec& spec) { return tile_box(spec, canonical_cube()); }

}  // namespace acutecube
