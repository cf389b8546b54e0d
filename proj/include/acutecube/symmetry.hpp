#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "acutecube/mesh.hpp"
#include "acutecube/point.hpp"

namespace acutecube {

struct SymmetryError : Error {
    using Error::Error;
};

struct ClosureOverflowError : SymmetryError {
    using SymmetryError::SymmetryError;
};

struct SeedOutsideRegionError : SymmetryError {
    std::vector<int> offending;
    SeedOutsideRegionError(std::string msg, std::vector<int> idx)
        : SymmetryError(std::move(msg)), offending(std::move(idx)) {}
};

struct NotSymmetricError : SymmetryError {
    int op_index, vertex_index;
    NotSymmetricError(int op, int vertex)
        : SymmetryError("group element " + std::to_string(op) + " does not map vertex " +
                        std::to_string(vertex) + " into the vertex set"),
          op_index(op),
          vertex_index(vertex) {}
};

// One of the 24 orthogonal maps fixing the reference regular tetrahedron
// with vertices (-1,-1,-1), (-1,1,1), (1,-1,1), (1,1,-1). Entries are
// always in {-1,0,1}, so application is exact integer arithmetic.
struct SymmetryOp {
    std::array<std::array<int, 3>, 3> m{};

    MilliPoint apply(const MilliPoint& p) const {
        return {m[0][0] * p.x + m[0][1] * p.y + m[0][2] * p.z,
                m[1][0] * p.x + m[1][1] * p.y + m[1][2] * p.z,
                m[2][0] * p.x + m[2][1] * p.y + m[2][2] * p.z};
    }

    SymmetryOp transposed() const {
        SymmetryOp t;
        for (int r = 0; r < 3; ++r) {
            for (int c = 0; c < 3; ++c) t.m[r][c] = m[c][r];
        }
        return t;
    }

    int det() const {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    }

    bool is_orthogonal() const {
        const SymmetryOp t = t_times(*this, transposed());
        return t == identity();
    }

    static SymmetryOp identity() { return {{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}}; }

    static SymmetryOp t_times(const SymmetryOp& a, const SymmetryOp& b) {
        SymmetryOp out;
        for (int r = 0; r < 3; ++r) {
            for (int c = 0; c < 3; ++c) {
                out.m[r][c] = a.m[r][0] * b.m[0][c] + a.m[r][1] * b.m[1][c] + a.m[r][2] * b.m[2][c];
            }
        }
        return out;
    }

    friend bool operator==(const SymmetryOp&, const SymmetryOp&) = default;
    friend auto operator<=>(const SymmetryOp&, const SymmetryOp&) = default;
};

// Composition: (a * b) applies b first, then a.
inline SymmetryOp operator*(const SymmetryOp& a, const SymmetryOp& b) {
    return SymmetryOp::t_times(a, b);
}

// The four generators: reflection through x = -z, reflection through x = z,
// 180-degree rotation about the z-axis, and the 120-degree rotation about
// the main diagonal through (-1,-1,-1) and (1,1,1), i.e. (x,y,z) -> (y,z,x).
inline std::array<SymmetryOp, 4> tetrahedral_generators() {
    return {SymmetryOp{{{{0, 0, -1}, {0, 1, 0}, {-1, 0, 0}}}},
            SymmetryOp{{{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}}},
            SymmetryOp{{{{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}}}},
            SymmetryOp{{{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}}}};
}

// Closure of a generator set under composition. A valid generator set here
// can reach at most the 48 cube symmetries; anything larger signals a bad
// generator matrix.
inline std::vector<SymmetryOp> close_group(const std::vector<SymmetryOp>& gens) {
    std::set<SymmetryOp> seen{SymmetryOp::identity()};
    std::vector<SymmetryOp> frontier(seen.begin(), seen.end());
    for (const auto& g : gens) {
        if (!g.is_orthogonal()) throw SymmetryError("generator is not orthogonal");
    }
    while (!frontier.empty()) {
        std::vector<SymmetryOp> next;
        for (const auto& f : frontier) {
            for (const auto& g : gens) {
                const SymmetryOp h = g * f;
                if (seen.insert(h).second) next.push_back(h);
            }
        }
        if (seen.size() > 48) throw ClosureOverflowError("group closure exceeded 48 elements");
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

inline const std::vector<SymmetryOp>& full_symmetry_group() {
    static const std::vector<SymmetryOp> group = [] {
        const auto g = tetrahedral_generators();
        return close_group({g.begin(), g.end()});
    }();
    return group;
}

// The closed generating region: y >= -1, x >= y, x <= z, x <= -z
// (in milliunits). One 24th of the cube.
inline bool region_contains(const MilliPoint& p) {
    return p.y >= -1000 && p.x >= p.y && p.x <= p.z && p.x <= -p.z;
}

// Result of the staged orbit generation: cumulative vertex sets after the
// seed, A1, A2, A3, and the combined A4/A4^2 stage, plus the number of new
// vertices each application contributed (A4 and A4^2 counted separately).
struct VertexGeneration {
    std::array<std::vector<MilliPoint>, 5> stages;
    std::array<int, 6> block_counts{};

    const std::vector<MilliPoint>& full() const { return stages[4]; }
};

inline VertexGeneration generate_vertices(const std::vector<MilliPoint>& seed) {
    std::vector<int> outside;
    for (int i = 0; i < static_cast<int>(seed.size()); ++i) {
        if (!region_contains(seed[static_cast<std::size_t>(i)])) outside.push_back(i);
    }
    if (!outside.empty()) {
        std::string msg = "seed points outside the generating region:";
        for (int i : outside) msg += " " + std::to_string(i);
        throw SeedOutsideRegionError(std::move(msg), std::move(outside));
    }

    const auto gens = tetrahedral_generators();
    const SymmetryOp a4sq = gens[3] * gens[3];

    VertexGeneration out;
    std::unordered_set<MilliPoint, MilliPointHash> seen;
    std::vector<MilliPoint> current;
    auto absorb = [&](const std::vector<MilliPoint>& src, const SymmetryOp& op) {
        int fresh = 0;
        for (const auto& p : src) {
            const MilliPoint q = op.apply(p);
            if (seen.insert(q).second) {
                current.push_back(q);
                ++fresh;
            }
        }
        return fresh;
    };

    out.block_counts[0] = absorb(seed, SymmetryOp::identity());
    out.stages[0] = current;
    for (int k = 0; k < 3; ++k) {
        out.block_counts[static_cast<std::size_t>(k + 1)] =
            absorb(out.stages[static_cast<std::size_t>(k)], gens[static_cast<std::size_t>(k)]);
        out.stages[static_cast<std::size_t>(k + 1)] = current;
    }
    out.block_counts[4] = absorb(out.stages[3], gens[3]);
    out.block_counts[5] = absorb(out.stages[3], a4sq);
    out.stages[4] = current;
    return out;
}

enum class OrbitLocus {
    kInterior,      // orbit size 24: interior of the generating region
    kPlane,         // orbit size 12: meets a bounding plane of the region
    kYAxis,         // orbit size 6: meets the y-axis
    kMainDiagonal,  // orbit size 4: meets a main diagonal
    kOther,         // anything else (non-canonical meshes)
};

inline const char* orbit_locus_name(OrbitLocus l) {
    switch (l) {
        case OrbitLocus::kInterior: return "interior";
        case OrbitLocus::kPlane: return "plane";
        case OrbitLocus::kYAxis: return "y-axis";
        case OrbitLocus::kMainDiagonal: return "main-diagonal";
        default: return "other";
    }
}

inline OrbitLocus locus_from_orbit_size(int size) {
    switch (size) {
        case 24: return OrbitLocus::kInterior;
        case 12: return OrbitLocus::kPlane;
        case 6: return OrbitLocus::kYAxis;
        case 4: return OrbitLocus::kMainDiagonal;
        default: return OrbitLocus::kOther;
    }
}

struct OrbitClass {
    Tet representative;        // smallest sorted vertex quadruple in the class
    std::vector<int> members;  // tet indices, ascending
    OrbitLocus locus;

    int multiplicity() const { return static_cast<int>(members.size()); }
};

struct OrbitClassification {
    std::vector<OrbitClass> classes;

    std::map<int, int> size_histogram() const {
        std::map<int, int> h;
        for (const auto& c : classes) ++h[c.multiplicity()];
        return h;
    }
};

// Vertex images under every group element, as permutations of 0..n-1.
// Throws NotSymmetricError when some element does not map the vertex set
// onto itself.
inline std::vector<std::vector<int>> vertex_permutations(const TetMesh& mesh,
                                                         const std::vector<SymmetryOp>& group) {
    std::unordered_map<MilliPoint, int, MilliPointHash> index;
    index.reserve(mesh.vertices.size());
    for (int i = 0; i < static_cast<int>(mesh.vertices.size()); ++i) {
        index.emplace(mesh.vertices[static_cast<std::size_t>(i)], i);
    }
    std::vector<std::vector<int>> perms;
    perms.reserve(group.size());
    for (int gi = 0; gi < static_cast<int>(group.size()); ++gi) {
        std::vector<int> perm(mesh.vertices.size());
        for (int i = 0; i < static_cast<int>(mesh.vertices.size()); ++i) {
            const MilliPoint q = group[static_cast<std::size_t>(gi)].apply(
                mesh.vertices[static_cast<std::size_t>(i)]);
            const auto it = index.find(q);
            if (it == index.end()) throw NotSymmetricError(gi, i);
            perm[static_cast<std::size_t>(i)] = it->second;
        }
        perms.push_back(std::move(perm));
    }
    return perms;
}

// Partitions the tetrahedra into congruence classes: two tets are equivalent
// when some group element maps one's vertex set to the other's.
inline OrbitClassification classify_tets(const TetMesh& mesh,
                                         const std::vector<SymmetryOp>& group) {
    const auto perms = vertex_permutations(mesh, group);

    std::map<std::array<int, 4>, int> tet_index;
    for (int ti = 0; ti < static_cast<int>(mesh.tets.size()); ++ti) {
        tet_index.emplace(sorted_verts(mesh.tets[static_cast<std::size_t>(ti)]), ti);
    }

    OrbitClassification out;
    std::vector<char> assigned(mesh.tets.size(), 0);
    for (int ti = 0; ti < static_cast<int>(mesh.tets.size()); ++ti) {
        if (assigned[static_cast<std::size_t>(ti)]) continue;
        const auto base = sorted_verts(mesh.tets[static_cast<std::size_t>(ti)]);
        std::set<int> members;
        std::array<int, 4> rep_key = base;
        for (const auto& perm : perms) {
            std::array<int, 4> img{};
            for (int k = 0; k < 4; ++k) {
                img[static_cast<std::size_t>(k)] =
                    perm[static_cast<std::size_t>(base[static_cast<std::size_t>(k)])];
            }
            std::sort(img.begin(), img.end());
            const auto it = tet_index.find(img);
            if (it == tet_index.end()) continue;  // image not in this mesh
            members.insert(it->second);
            rep_key = std::min(rep_key, img);
        }
        OrbitClass cls;
        cls.representative = mesh.tets[static_cast<std::size_t>(tet_index.at(rep_key))];
        cls.members.assign(members.begin(), members.end());
        cls.locus = locus_from_orbit_size(cls.multiplicity());
        for (int m : cls.members) assigned[static_cast<std::size_t>(m)] = 1;
        out.classes.push_back(std::move(cls));
    }
    std::sort(out.classes.begin(), out.classes.end(), [](const OrbitClass& a, const OrbitClass& b) {
        return sorted_verts(a.representative) < sorted_verts(b.representative);
    });
    return out;
}

}  // namespace acutecube
