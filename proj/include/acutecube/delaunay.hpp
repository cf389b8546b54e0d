#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "acutecube/mesh.hpp"
#include "acutecube/point.hpp"
#include "acutecube/predicates.hpp"

namespace acutecube {

struct DelaunayError : Error {
    using Error::Error;
};

struct TooFewPointsError : DelaunayError {
    using DelaunayError::DelaunayError;
};

struct AllCoplanarError : DelaunayError {
    using DelaunayError::DelaunayError;
};

struct CoordinateRangeError : DelaunayError {
    using DelaunayError::DelaunayError;
};

struct DuplicatePointError : DelaunayError {
    int first, second;
    DuplicatePointError(int a, int b)
        : DelaunayError("duplicate point: index " + std::to_string(b) + " repeats index " +
                        std::to_string(a)),
          first(a),
          second(b) {}
};

// Five or more input points lie on a common empty sphere, so the Delaunay
// triangulation is not unique. Raised only under DegeneracyPolicy::kReject.
struct DegeneracyError : DelaunayError {
    std::vector<int> cospherical;
    explicit DegeneracyError(std::vector<int> pts)
        : DelaunayError("cospherical degeneracy among " + std::to_string(pts.size()) +
                        " points; the Delaunay triangulation is not unique"),
          cospherical(std::move(pts)) {}
};

enum class DegeneracyPolicy {
    kReject,           // fail loudly when the triangulation is not unique
    kSymbolicPerturb,  // break ties deterministically: earlier-indexed points win
};

// Triangulation requires coordinates small enough to place an enclosing
// simplex that provably lies outside every input circumsphere while staying
// within 64-bit range. Covers everything built here; tiled meshes are
// assembled by reflection, never re-triangulated.
inline constexpr std::int64_t kTriangulateCoordMax = 10'000;

namespace detail {

struct BwTet {
    std::array<int, 4> v{};
    std::array<int, 4> nbr{-1, -1, -1, -1};  // nbr[i] shares the facet opposite v[i]
    bool alive = true;
};

class BowyerWatson {
  public:
    BowyerWatson(const std::vector<MilliPoint>& input, DegeneracyPolicy policy)
        : policy_(policy), n_(static_cast<int>(input.size())) {
        pts_ = input;
        preflight();
        std::int64_t cmax = 1;
        for (const auto& p : pts_) cmax = std::max(cmax, max_abs_coord(p));
        // Any circumsphere of a non-degenerate integer tetrahedron with
        // coordinates bounded by C has L-inf reach below 101*C^4, so corners
        // at distance >= 102*C^4 can never fall inside one.
        const std::int64_t a = 102 * cmax * cmax * cmax * cmax + 1;
        pts_.push_back({-a, -a, -a});
        pts_.push_back({3 * a, -a, -a});
        pts_.push_back({-a, 3 * a, -a});
        pts_.push_back({-a, -a, 3 * a});
        tets_.push_back({{n_, n_ + 1, n_ + 2, n_ + 3}, {-1, -1, -1, -1}, true});
    }

    TetMesh run() {
        for (int p = 0; p < n_; ++p) insert(p);
        TetMesh mesh;
        mesh.vertices.assign(pts_.begin(), pts_.begin() + n_);
        for (const auto& t : tets_) {
            if (!t.alive) continue;
            if (t.v[0] < n_ && t.v[1] < n_ && t.v[2] < n_ && t.v[3] < n_) {
                mesh.tets.push_back(Tet{t.v});
            }
        }
        normalize_mesh(mesh);
        post_validate(mesh);
        return mesh;
    }

  private:
    void preflight() const {
        if (n_ < 4) throw TooFewPointsError("triangulate: need at least 4 points");
        std::unordered_map<MilliPoint, int, MilliPointHash> seen;
        seen.reserve(pts_.size());
        for (int i = 0; i < n_; ++i) {
            if (max_abs_coord(pts_[static_cast<std::size_t>(i)]) > kTriangulateCoordMax) {
                throw CoordinateRangeError("triangulate: coordinate exceeds " +
                                           std::to_string(kTriangulateCoordMax) +
                                           " milliunits at point " + std::to_string(i));
            }
            auto [it, fresh] = seen.try_emplace(pts_[static_cast<std::size_t>(i)], i);
            if (!fresh) throw DuplicatePointError(it->second, i);
        }
        // all-coplanar scan: find any affinely independent quadruple
        const MilliPoint& p0 = pts_[0];
        int i1 = -1;
        for (int i = 1; i < n_ && i1 < 0; ++i) {
            if (!(pts_[static_cast<std::size_t>(i)] == p0)) i1 = i;
        }
        int i2 = -1;
        for (int i = 1; i < n_ && i2 < 0; ++i) {
            if (i == i1) continue;
            if (!collinear(p0, pts_[static_cast<std::size_t>(i1)],
                           pts_[static_cast<std::size_t>(i)])) {
                i2 = i;
            }
        }
        if (i2 < 0) throw AllCoplanarError("triangulate: all points are collinear");
        for (int i = 1; i < n_; ++i) {
            if (i == i1 || i == i2) continue;
            if (orient3d(p0, pts_[static_cast<std::size_t>(i1)], pts_[static_cast<std::size_t>(i2)],
                         pts_[static_cast<std::size_t>(i)]) != 0) {
                return;
            }
        }
        throw AllCoplanarError("triangulate: all points are coplanar");
    }

    static bool collinear(const MilliPoint& a, const MilliPoint& b, const MilliPoint& c) {
        const __int128 ux = b.x - a.x, uy = b.y - a.y, uz = b.z - a.z;
        const __int128 vx = c.x - a.x, vy = c.y - a.y, vz = c.z - a.z;
        return uy * vz - uz * vy == 0 && uz * vx - ux * vz == 0 && ux * vy - uy * vx == 0;
    }

    const MilliPoint& pt(int i) const { return pts_[static_cast<std::size_t>(i)]; }

    bool conflicts(const BwTet& t, int p) const {
        return insphere(pt(t.v[0]), pt(t.v[1]), pt(t.v[2]), pt(t.v[3]), pt(p)) > 0;
    }

    int locate(int p) const {
        int cur = hint_;
        std::size_t steps = 0;
        const std::size_t limit = 4 * tets_.size() + 16;
        while (steps++ < limit) {
            const auto& t = tets_[static_cast<std::size_t>(cur)];
            int next = -1;
            for (int i = 0; i < 4 && next < 0; ++i) {
                const auto& f = kTetFacets[i];
                if (orient3d(pt(t.v[f[0]]), pt(t.v[f[1]]), pt(t.v[f[2]]), pt(p)) > 0) {
                    next = t.nbr[i];
                }
            }
            if (next < 0) return cur;
            cur = next;
        }
        // The walk is guaranteed to terminate on a Delaunay complex; scan as
        // a last resort so a bug surfaces as a slow answer, not a hang.
        for (int ti = 0; ti < static_cast<int>(tets_.size()); ++ti) {
            const auto& t = tets_[static_cast<std::size_t>(ti)];
            if (!t.alive) continue;
            bool inside = true;
            for (int i = 0; i < 4 && inside; ++i) {
                const auto& f = kTetFacets[i];
                if (orient3d(pt(t.v[f[0]]), pt(t.v[f[1]]), pt(t.v[f[2]]), pt(p)) > 0) {
                    inside = false;
                }
            }
            if (inside) return ti;
        }
        throw std::logic_error("triangulate: point location failed");
    }

    void insert(int p) {
        // cavity = connected set of tets whose open circumball contains p
        int loc = locate(p);
        while (!tets_[static_cast<std::size_t>(loc)].alive) {
            throw std::logic_error("triangulate: located dead tet");
        }
        if (!conflicts(tets_[static_cast<std::size_t>(loc)], p)) {
            throw std::logic_error("triangulate: located tet does not conflict");
        }
        std::vector<int> cavity;
        std::vector<char>& mark = mark_;
        mark.assign(tets_.size(), 0);
        std::vector<int> stack{loc};
        mark[static_cast<std::size_t>(loc)] = 1;
        while (!stack.empty()) {
            const int ti = stack.back();
            stack.pop_back();
            cavity.push_back(ti);
            for (int i = 0; i < 4; ++i) {
                const int u = tets_[static_cast<std::size_t>(ti)].nbr[i];
                if (u < 0 || mark[static_cast<std::size_t>(u)]) continue;
                if (conflicts(tets_[static_cast<std::size_t>(u)], p)) {
                    mark[static_cast<std::size_t>(u)] = 1;
                    stack.push_back(u);
                } else {
                    mark[static_cast<std::size_t>(u)] = 2;  // outside neighbor
                }
            }
        }

        // star the cavity boundary to p
        std::map<std::pair<int, int>, std::pair<int, int>> open_edges;  // edge -> (tet, slot)
        std::vector<int> fresh;
        for (const int ti : cavity) {
            const auto tv = tets_[static_cast<std::size_t>(ti)].v;
            for (int i = 0; i < 4; ++i) {
                const int u = tets_[static_cast<std::size_t>(ti)].nbr[i];
                if (u >= 0 && mark[static_cast<std::size_t>(u)] == 1) continue;  // internal facet
                const auto& f = kTetFacets[i];
                const int a = tv[f[0]], b = tv[f[1]], c = tv[f[2]];
                // facet points away from the cavity side, so reverse it
                BwTet w{{a, c, b, p}, {-1, -1, -1, u}, true};
                if (orient3d(pt(a), pt(c), pt(b), pt(p)) <= 0) {
                    throw std::logic_error("triangulate: degenerate star tet");
                }
                const int wi = static_cast<int>(tets_.size());
                tets_.push_back(w);
                fresh.push_back(wi);
                if (u >= 0) {
                    auto& un = tets_[static_cast<std::size_t>(u)].nbr;
                    for (int k = 0; k < 4; ++k) {
                        if (un[k] == ti) un[k] = wi;
                    }
                }
                // Facets of w around p: slot k in {0,1,2} is opposite w.v[k]
                // and meets the old facet in the edge skipping w.v[k].
                const int wv[3] = {a, c, b};
                for (int k = 0; k < 3; ++k) {
                    const int e0 = wv[(k + 1) % 3], e1 = wv[(k + 2) % 3];
                    const auto key = std::make_pair(std::min(e0, e1), std::max(e0, e1));
                    auto it = open_edges.find(key);
                    if (it == open_edges.end()) {
                        open_edges.emplace(key, std::make_pair(wi, k));
                    } else {
                        const auto [oi, ok] = it->second;
                        tets_[static_cast<std::size_t>(wi)].nbr[k] = oi;
                        tets_[static_cast<std::size_t>(oi)].nbr[ok] = wi;
                        open_edges.erase(it);
                    }
                }
            }
        }
        if (!open_edges.empty()) {
            throw std::logic_error("triangulate: cavity boundary did not close");
        }
        for (const int ti : cavity) tets_[static_cast<std::size_t>(ti)].alive = false;
        hint_ = fresh.back();
    }

    void post_validate(const TetMesh& mesh) const {
        if (mesh.tets.empty()) {
            throw std::logic_error("triangulate: no tetrahedra survived");
        }
        validate_mesh(mesh);
        std::vector<char> used(static_cast<std::size_t>(n_), 0);
        for (const auto& t : mesh.tets) {
            for (int i : t.v) used[static_cast<std::size_t>(i)] = 1;
        }
        for (int i = 0; i < n_; ++i) {
            if (!used[static_cast<std::size_t>(i)]) {
                throw std::logic_error("triangulate: input point missing from output");
            }
        }
        // Definitional check: every circumball must be empty. Exact ties mean
        // the triangulation is not unique, which kReject reports.
        for (const auto& t : mesh.tets) {
            std::vector<int> on_sphere;
            for (int q = 0; q < n_; ++q) {
                if (q == t.v[0] || q == t.v[1] || q == t.v[2] || q == t.v[3]) continue;
                const int s = insphere(mesh.vertices[static_cast<std::size_t>(t.v[0])],
                                       mesh.vertices[static_cast<std::size_t>(t.v[1])],
                                       mesh.vertices[static_cast<std::size_t>(t.v[2])],
                                       mesh.vertices[static_cast<std::size_t>(t.v[3])],
                                       mesh.vertices[static_cast<std::size_t>(q)]);
                if (s > 0) throw std::logic_error("triangulate: circumball not empty");
                if (s == 0) on_sphere.push_back(q);
            }
            if (!on_sphere.empty() && policy_ == DegeneracyPolicy::kReject) {
                std::vector<int> witness(t.v.begin(), t.v.end());
                witness.insert(witness.end(), on_sphere.begin(), on_sphere.end());
                std::sort(witness.begin(), witness.end());
                throw DegeneracyError(std::move(witness));
            }
        }
        // The boundary must be the convex hull: no point beyond any
        // boundary facet's supporting plane.
        const auto conn = connectivity(mesh);
        for (const auto& tri : conn.triangles) {
            if (!tri.boundary()) continue;
            const auto& t = mesh.tets[static_cast<std::size_t>(tri.tet0)];
            int opp = -1;
            for (int i : t.v) {
                if (i != tri.v[0] && i != tri.v[1] && i != tri.v[2]) opp = i;
            }
            const auto& a = mesh.vertices[static_cast<std::size_t>(tri.v[0])];
            const auto& b = mesh.vertices[static_cast<std::size_t>(tri.v[1])];
            const auto& c = mesh.vertices[static_cast<std::size_t>(tri.v[2])];
            const int side_in = orient3d(a, b, c, mesh.vertices[static_cast<std::size_t>(opp)]);
            for (int q = 0; q < n_; ++q) {
                const int s = orient3d(a, b, c, mesh.vertices[static_cast<std::size_t>(q)]);
                if (s != 0 && s != side_in) {
                    throw std::logic_error("triangulate: boundary is not the convex hull");
                }
            }
        }
    }

    DegeneracyPolicy policy_;
    int n_;
    std::vector<MilliPoint> pts_;
    std::vector<BwTet> tets_;
    int hint_ = 0;
    mutable std::vector<char> mark_;
};

}  // namespace detail

// Exact 3D Delaunay triangulation. The output is normalized (sorted vertex
// quadruples, lexicographic tet order), so it is a pure function of the
// point sequence; under kReject it is a pure function of the point set.
inline TetMesh triangulate(const std::vector<MilliPoint>& points,
                           DegeneracyPolicy policy = DegeneracyPolicy::kReject) {
    detail::BowyerWatson bw(points, policy);
    return bw.run();
}

}  // namespace acutecube
