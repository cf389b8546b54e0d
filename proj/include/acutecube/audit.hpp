#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "acutecube/mesh.hpp"
#include "acutecube/metrics.hpp"
#include "acutecube/point.hpp"
#include "acutecube/predicates.hpp"

namespace acutecube {

struct EmptyMeshError : Error {
    using Error::Error;
};

enum class EdgeStratum {
    kCubeEdge,       // lies along an edge of the cube: at least 2 incident tets
    kCubeFace,       // lies in a face of the cube: at least 3
    kInterior,       // at least 5
    kBoundaryOther,  // boundary edge of a non-cube mesh: no requirement
};

inline const char* edge_stratum_name(EdgeStratum s) {
    switch (s) {
        case EdgeStratum::kCubeEdge: return "cube-edge";
        case EdgeStratum::kCubeFace: return "cube-face";
        case EdgeStratum::kInterior: return "interior";
        default: return "boundary";
    }
}

inline int edge_stratum_minimum(EdgeStratum s) {
    switch (s) {
        case EdgeStratum::kCubeEdge: return 2;
        case EdgeStratum::kCubeFace: return 3;
        case EdgeStratum::kInterior: return 5;
        default: return 0;
    }
}

struct EdgeConstraint {
    int a, b;
    EdgeStratum stratum;
    int required;
    int incident;
    bool pass;
};

struct FaceSummary {
    std::string name;
    int triangle_count = 0;
    double max_angle = 0.0;
    bool acute = true;  // exact sign test
};

struct AuditReport {
    int vertex_count = 0, edge_count = 0, triangle_count = 0, tet_count = 0;
    int boundary_vertex_count = 0, boundary_edge_count = 0, boundary_triangle_count = 0;
    int interior_vertex_count = 0, interior_edge_count = 0;
    long long euler_value = 0;
    bool euler_ok = false;  // V - E + F - T == 1 (solid ball)

    long long dihedral_count = 0;
    double dihedral_min = 0.0, dihedral_max = 0.0;
    bool dihedrals_all_acute = false;

    long long face_angle_count = 0;
    double face_angle_min = 0.0, face_angle_max = 0.0;
    bool face_angles_all_acute = false;

    long long h_over_r_count = 0;
    double h_over_r_min = 0.0, h_over_r_max = 0.0;
    bool h_over_r_all_positive = false;
    bool h_over_r_all_below_one = false;

    bool acute = false;
    bool three_well_centered = false;
    bool completely_well_centered = false;

    std::map<int, int> interior_edge_incidence;
    std::map<int, int> interior_vertex_degrees;

    bool surface_grouped = false;
    std::vector<FaceSummary> surface_faces;
    int surface_triangle_count = 0;
    double surface_max_angle = 0.0;
    bool surface_all_acute = false;

    bool combinatorial_ok = false;
    int combinatorial_violations = 0;
    std::map<std::string, int> edges_per_stratum;
};

namespace detail {

inline bool mesh_in_cube(const TetMesh& mesh) {
    for (const auto& p : mesh.vertices) {
        if (max_abs_coord(p) > 1000) return false;
    }
    return true;
}

// Number of coordinate planes x/y/z = +-1000 containing both endpoints.
inline int shared_cube_planes(const MilliPoint& a, const MilliPoint& b) {
    int shared = 0;
    for (int axis = 0; axis < 3; ++axis) {
        for (std::int64_t side : {std::int64_t{-1000}, std::int64_t{1000}}) {
            if (coord(a, axis) == side && coord(b, axis) == side) ++shared;
        }
    }
    return shared;
}

}  // namespace detail

// Per-edge incidence constraints for acuteness, stratified by where the edge
// sits on the cube. For meshes not contained in the cube only interior
// (non-boundary) edges are checked.
inline std::vector<EdgeConstraint> check_combinatorial_constraints(const TetMesh& mesh,
                                                                   const Connectivity& conn) {
    const bool in_cube = detail::mesh_in_cube(mesh);
    std::vector<EdgeConstraint> out;
    out.reserve(conn.edges.size());
    for (const auto& e : conn.edges) {
        EdgeStratum stratum;
        if (in_cube) {
            const int shared = detail::shared_cube_planes(
                mesh.vertices[static_cast<std::size_t>(e.a)],
                mesh.vertices[static_cast<std::size_t>(e.b)]);
            stratum = shared >= 2   ? EdgeStratum::kCubeEdge
                      : shared == 1 ? EdgeStratum::kCubeFace
                                    : EdgeStratum::kInterior;
        } else {
            stratum = e.boundary ? EdgeStratum::kBoundaryOther : EdgeStratum::kInterior;
        }
        const int req = edge_stratum_minimum(stratum);
        out.push_back({e.a, e.b, stratum, req, e.incident_tets, e.incident_tets >= req});
    }
    return out;
}

inline std::vector<EdgeConstraint> check_combinatorial_constraints(const TetMesh& mesh) {
    return check_combinatorial_constraints(mesh, connectivity(mesh));
}

// Triangle count and angle extremum per cube face, with an exact acuteness
// flag per group.
inline std::vector<FaceSummary> surface_audit(const TetMesh& mesh, const Connectivity& conn) {
    const auto surf = boundary_surface(mesh, conn);
    std::vector<FaceSummary> out;
    auto summarize = [&](const std::string& name, const std::vector<int>& tri_ids) {
        FaceSummary s;
        s.name = name;
        s.triangle_count = static_cast<int>(tri_ids.size());
        for (int id : tri_ids) {
            const auto& t = surf.triangles[static_cast<std::size_t>(id)];
            const MilliPoint p[3] = {mesh.vertices[static_cast<std::size_t>(t.v[0])],
                                     mesh.vertices[static_cast<std::size_t>(t.v[1])],
                                     mesh.vertices[static_cast<std::size_t>(t.v[2])]};
            for (int i = 0; i < 3; ++i) {
                const auto q = p[(i + 1) % 3], r = p[(i + 2) % 3];
                s.max_angle = std::max(
                    s.max_angle, detail::angle_deg(detail::sub(detail::to_vec3d(q),
                                                               detail::to_vec3d(p[i])),
                                                   detail::sub(detail::to_vec3d(r),
                                                               detail::to_vec3d(p[i]))));
                if (angle_cos_sign(p[i], q, r) <= 0) s.acute = false;
            }
        }
        out.push_back(std::move(s));
    };
    if (surf.cube_grouping) {
        for (int f = 0; f < 6; ++f) {
            summarize(cube_face_name(f), surf.face_triangles[static_cast<std::size_t>(f)]);
        }
        if (!surf.ungrouped.empty()) summarize("ungrouped", surf.ungrouped);
    } else {
        std::vector<int> all(surf.triangles.size());
        for (int i = 0; i < static_cast<int>(all.size()); ++i) all[static_cast<std::size_t>(i)] = i;
        summarize("boundary", all);
    }
    return out;
}

inline std::vector<FaceSummary> surface_audit(const TetMesh& mesh) {
    return surface_audit(mesh, connectivity(mesh));
}

// Every geometric and combinatorial statistic of a mesh. Sign-dependent
// flags (acuteness, well-centeredness) are decided with exact arithmetic;
// angle extrema are floating point.
inline AuditReport audit(const TetMesh& mesh) {
    if (mesh.tets.empty()) throw EmptyMeshError("audit: mesh has no tetrahedra");
    const auto conn = connectivity(mesh);

    AuditReport r;
    r.vertex_count = static_cast<int>(mesh.vertices.size());
    r.edge_count = static_cast<int>(conn.edges.size());
    r.triangle_count = static_cast<int>(conn.triangles.size());
    r.tet_count = static_cast<int>(mesh.tets.size());
    r.boundary_vertex_count = conn.boundary_vertex_count;
    r.boundary_edge_count = conn.boundary_edge_count;
    r.boundary_triangle_count = conn.boundary_triangle_count;
    r.interior_vertex_count = r.vertex_count - r.boundary_vertex_count;
    r.interior_edge_count = r.edge_count - r.boundary_edge_count;
    r.euler_value = static_cast<long long>(r.vertex_count) - r.edge_count + r.triangle_count -
                    r.tet_count;
    r.euler_ok = r.euler_value == 1;

    r.dihedral_min = std::numeric_limits<double>::infinity();
    r.dihedral_max = -std::numeric_limits<double>::infinity();
    r.face_angle_min = std::numeric_limits<double>::infinity();
    r.face_angle_max = -std::numeric_limits<double>::infinity();
    r.h_over_r_min = std::numeric_limits<double>::infinity();
    r.h_over_r_max = -std::numeric_limits<double>::infinity();
    r.dihedrals_all_acute = true;
    r.face_angles_all_acute = true;
    r.h_over_r_all_positive = true;
    r.h_over_r_all_below_one = true;

    for (int ti = 0; ti < static_cast<int>(mesh.tets.size()); ++ti) {
        const auto& t = mesh.tets[static_cast<std::size_t>(ti)];
        const MilliPoint a = mesh.vertices[static_cast<std::size_t>(t.v[0])];
        const MilliPoint b = mesh.vertices[static_cast<std::size_t>(t.v[1])];
        const MilliPoint c = mesh.vertices[static_cast<std::size_t>(t.v[2])];
        const MilliPoint d = mesh.vertices[static_cast<std::size_t>(t.v[3])];
        if (orient3d(a, b, c, d) == 0) {
            throw DegenerateTetError("audit: tetrahedron " + std::to_string(ti) +
                                     " is degenerate");
        }
        const MilliPoint pts[4] = {a, b, c, d};
        const auto dih = dihedral_angles(a, b, c, d);
        for (int k = 0; k < 6; ++k) {
            r.dihedral_min = std::min(r.dihedral_min, dih[static_cast<std::size_t>(k)]);
            r.dihedral_max = std::max(r.dihedral_max, dih[static_cast<std::size_t>(k)]);
            int rest[2], m = 0;
            for (int q = 0; q < 4; ++q) {
                if (q != kTetEdges[k][0] && q != kTetEdges[k][1]) rest[m++] = q;
            }
            if (dihedral_cos_sign(pts[kTetEdges[k][0]], pts[kTetEdges[k][1]], pts[rest[0]],
                                  pts[rest[1]]) <= 0) {
                r.dihedrals_all_acute = false;
            }
        }
        const auto fa = face_angles(a, b, c, d);
        for (double v : fa) {
            r.face_angle_min = std::min(r.face_angle_min, v);
            r.face_angle_max = std::max(r.face_angle_max, v);
        }
        for (const auto& f : kTetFacets) {
            for (int i = 0; i < 3; ++i) {
                if (angle_cos_sign(pts[f[i]], pts[f[(i + 1) % 3]], pts[f[(i + 2) % 3]]) <= 0) {
                    r.face_angles_all_acute = false;
                }
            }
        }
        const auto hr = h_over_r(a, b, c, d);
        const auto hs = h_over_r_signs(a, b, c, d);
        for (int i = 0; i < 4; ++i) {
            r.h_over_r_min = std::min(r.h_over_r_min, hr[static_cast<std::size_t>(i)]);
            r.h_over_r_max = std::max(r.h_over_r_max, hr[static_cast<std::size_t>(i)]);
            if (hs[static_cast<std::size_t>(i)] <= 0) r.h_over_r_all_positive = false;
            if (hr[static_cast<std::size_t>(i)] >= 1.0) r.h_over_r_all_below_one = false;
        }
    }
    r.dihedral_count = 6LL * r.tet_count;
    r.face_angle_count = 12LL * r.tet_count;
    r.h_over_r_count = 4LL * r.tet_count;
    r.acute = r.dihedrals_all_acute && r.face_angles_all_acute;
    r.three_well_centered = r.h_over_r_all_positive;
    r.completely_well_centered = r.three_well_centered && r.face_angles_all_acute;

    for (const auto& e : conn.edges) {
        if (!e.boundary) ++r.interior_edge_incidence[e.incident_tets];
    }
    for (std::size_t i = 0; i < conn.vertex_degree.size(); ++i) {
        if (!conn.vertex_boundary[i]) ++r.interior_vertex_degrees[conn.vertex_degree[i]];
    }

    const auto surf = surface_audit(mesh, conn);
    r.surface_faces = surf;
    r.surface_grouped = detail::mesh_in_cube(mesh);
    r.surface_all_acute = true;
    for (const auto& f : surf) {
        r.surface_triangle_count += f.triangle_count;
        r.surface_max_angle = std::max(r.surface_max_angle, f.max_angle);
        if (!f.acute) r.surface_all_acute = false;
    }

    const auto checks = check_combinatorial_constraints(mesh, conn);
    r.combinatorial_ok = true;
    for (const auto& c : checks) {
        ++r.edges_per_stratum[edge_stratum_name(c.stratum)];
        if (!c.pass) {
            r.combinatorial_ok = false;
            ++r.combinatorial_violations;
        }
    }
    return r;
}

enum class HistogramMetric { kDihedral, kFaceAngle, kHOverR };

struct HistogramSpec {
    HistogramMetric metric = HistogramMetric::kDihedral;
    double bin_width = 0.0;  // 0 selects the default for the metric

    double default_width() const {
        return metric == HistogramMetric::kHOverR ? 0.05 : 1.0;
    }
    double range_lo() const { return metric == HistogramMetric::kHOverR ? -1.0 : 0.0; }
    double range_hi() const { return metric == HistogramMetric::kHOverR ? 1.0 : 180.0; }
};

struct Histogram {
    std::vector<double> bin_start;
    std::vector<long long> count;
    long long total = 0;
};

inline Histogram histogram(const TetMesh& mesh, const HistogramSpec& spec) {
    if (mesh.tets.empty()) throw EmptyMeshError("histogram: mesh has no tetrahedra");
    const double width = spec.bin_width > 0 ? spec.bin_width : spec.default_width();
    if (width <= 0) throw Error("histogram: bin width must be positive");
    const double lo = spec.range_lo(), hi = spec.range_hi();
    const int bins = static_cast<int>(std::ceil((hi - lo) / width));
    Histogram h;
    h.bin_start.resize(static_cast<std::size_t>(bins));
    h.count.assign(static_cast<std::size_t>(bins), 0);
    for (int i = 0; i < bins; ++i) h.bin_start[static_cast<std::size_t>(i)] = lo + i * width;
    auto deposit = [&](double v) {
        int bin = static_cast<int>(std::floor((v - lo) / width));
        bin = std::max(0, std::min(bins - 1, bin));
        ++h.count[static_cast<std::size_t>(bin)];
        ++h.total;
    };
    for (const auto& t : mesh.tets) {
        const MilliPoint a = mesh.vertices[static_cast<std::size_t>(t.v[0])];
        const MilliPoint b = mesh.vertices[static_cast<std::size_t>(t.v[1])];
        const MilliPoint c = mesh.vertices[static_cast<std::size_t>(t.v[2])];
        const MilliPoint d = mesh.vertices[static_cast<std::size_t>(t.v[3])];
        switch (spec.metric) {
            case HistogramMetric::kDihedral:
                for (double v : dihedral_angles(a, b, c, d)) deposit(v);
                break;
            case HistogramMetric::kFaceAngle:
                for (double v : face_angles(a, b, c, d)) deposit(v);
                break;
            case HistogramMetric::kHOverR:
                for (double v : h_over_r(a, b, c, d)) deposit(v);
                break;
        }
    }
    return h;
}

}  // namespace acutecube
