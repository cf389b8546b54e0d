#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "acutecube/delaunay.hpp"
#include "acutecube/mesh.hpp"
#include "acutecube/metrics.hpp"
#include "acutecube/point.hpp"
#include "acutecube/symmetry.hpp"

namespace acutecube {

struct InvertedTetError : Error {
    int tet_index;
    explicit InvertedTetError(int ti)
        : Error("perturbation inverted tetrahedron " + std::to_string(ti)), tet_index(ti) {}
};

enum class StratumKind { kCorner, kCubeEdge, kCubeFace, kInterior };

// Which boundary stratum of the cube a vertex lives on, and therefore which
// coordinates it may move: a coordinate pinned at +-1000 is frozen.
struct VertexStratum {
    StratumKind kind = StratumKind::kInterior;
    std::array<bool, 3> pinned{false, false, false};

    int dof() const { return 3 - pinned[0] - pinned[1] - pinned[2]; }
};

inline VertexStratum vertex_stratum(const MilliPoint& p) {
    if (max_abs_coord(p) > 1000) {
        throw Error("vertex_stratum: point lies outside the canonical cube");
    }
    VertexStratum s;
    int pins = 0;
    for (int axis = 0; axis < 3; ++axis) {
        if (coord(p, axis) == 1000 || coord(p, axis) == -1000) {
            s.pinned[static_cast<std::size_t>(axis)] = true;
            ++pins;
        }
    }
    s.kind = pins == 3   ? StratumKind::kCorner
             : pins == 2 ? StratumKind::kCubeEdge
             : pins == 1 ? StratumKind::kCubeFace
                         : StratumKind::kInterior;
    return s;
}

struct SmoothConfig {
    int max_sweeps = 200;
    std::int64_t step = 2;         // stencil step in milliunits (unit moves are always tried)
    double kappa = 90.0;           // degrees credited per unit of min h/R
    bool enforce_symmetry = false;
    double min_improvement = 0.0;  // optional early stop on global margin gain per sweep
    int redelaunay_every = 0;      // refresh connectivity every k sweeps (0 = never)
};

// Margin of one tetrahedron: how far it is from violating either dihedral
// acuteness or 3-well-centeredness. Positive iff the tet is dihedral-acute
// and contains its circumcenter.
inline double tet_margin(const MilliPoint& a, const MilliPoint& b, const MilliPoint& c,
                         const MilliPoint& d, double kappa = 90.0) {
    const TetQuality q = tet_quality_fast(a, b, c, d);
    return std::min(90.0 - q.max_dihedral_deg, kappa * q.min_h_over_r);
}

// Mesh quality margin: the worst tet margin. Positive iff the whole mesh is
// dihedral-acute and 3-well-centered.
inline double quality_margin(const TetMesh& mesh, double kappa = 90.0) {
    double margin = std::numeric_limits<double>::infinity();
    for (int ti = 0; ti < static_cast<int>(mesh.tets.size()); ++ti) {
        const auto& t = mesh.tets[static_cast<std::size_t>(ti)];
        const MilliPoint& a = mesh.vertices[static_cast<std::size_t>(t.v[0])];
        const MilliPoint& b = mesh.vertices[static_cast<std::size_t>(t.v[1])];
        const MilliPoint& c = mesh.vertices[static_cast<std::size_t>(t.v[2])];
        const MilliPoint& d = mesh.vertices[static_cast<std::size_t>(t.v[3])];
        if (orient3d(a, b, c, d) <= 0) {
            throw DegenerateTetError("quality_margin: tetrahedron " + std::to_string(ti) +
                                     " is degenerate or inverted");
        }
        margin = std::min(margin, tet_margin(a, b, c, d, kappa));
    }
    return margin;
}

// Test fixture: displaces every vertex by a deterministic pseudo-random
// integer offset of magnitude <= sigma within its stratum, keeping corners
// fixed and face/edge vertices on their faces/edges.
inline TetMesh perturb(const TetMesh& mesh, std::int64_t sigma, std::uint64_t seed) {
    if (sigma < 0) throw Error("perturb: sigma must be nonnegative");
    if (sigma == 0) return mesh;
    TetMesh out = mesh;
    std::mt19937_64 rng(seed);
    const std::uint64_t span = static_cast<std::uint64_t>(2 * sigma + 1);
    for (auto& p : out.vertices) {
        const VertexStratum s = vertex_stratum(p);
        for (int axis = 0; axis < 3; ++axis) {
            if (s.pinned[static_cast<std::size_t>(axis)]) continue;
            const std::int64_t off = static_cast<std::int64_t>(rng() % span) - sigma;
            std::int64_t v = coord(p, axis) + off;
            v = std::max<std::int64_t>(-999, std::min<std::int64_t>(999, v));
            if (axis == 0) p.x = v;
            else if (axis == 1) p.y = v;
            else p.z = v;
        }
    }
    for (int ti = 0; ti < static_cast<int>(out.tets.size()); ++ti) {
        const auto& t = out.tets[static_cast<std::size_t>(ti)];
        if (orient3d(out.vertices[static_cast<std::size_t>(t.v[0])],
                     out.vertices[static_cast<std::size_t>(t.v[1])],
                     out.vertices[static_cast<std::size_t>(t.v[2])],
                     out.vertices[static_cast<std::size_t>(t.v[3])]) <= 0) {
            throw InvertedTetError(ti);
        }
    }
    return out;
}

struct SmoothResult {
    TetMesh mesh;
    std::vector<double> sweep_margins;  // [0] is the initial margin
    int sweeps_run = 0;
    long long moves_accepted = 0;
};

namespace detail {

struct VertexOrbit {
    int representative;
    std::vector<int> members;              // ascending, includes representative
    std::vector<SymmetryOp> member_ops;    // op mapping representative to each member
    std::vector<SymmetryOp> stabilizer;    // ops fixing the representative's position
};

inline std::vector<MilliPoint> stencil_offsets(const VertexStratum& s, std::int64_t step,
                                               const std::vector<SymmetryOp>& stabilizer) {
    std::set<MilliPoint> offs;
    std::set<std::int64_t> mags{1};
    mags.insert(std::max<std::int64_t>(1, step));
    for (std::int64_t m : mags) {
        const std::array<std::int64_t, 3> choices{-m, 0, m};
        for (std::int64_t dx : choices) {
            for (std::int64_t dy : choices) {
                for (std::int64_t dz : choices) {
                    MilliPoint d{dx, dy, dz};
                    if (d == MilliPoint{0, 0, 0}) continue;
                    bool ok = true;
                    for (int axis = 0; axis < 3; ++axis) {
                        if (s.pinned[static_cast<std::size_t>(axis)] && coord(d, axis) != 0) {
                            ok = false;
                        }
                    }
                    for (const auto& g : stabilizer) {
                        if (!(g.apply(d) == d)) ok = false;
                    }
                    if (ok) offs.insert(d);
                }
            }
        }
    }
    return {offs.begin(), offs.end()};
}

}  // namespace detail

// Iterative local ascent on the quality margin. Per sweep each vertex (or,
// with symmetry enforcement, each vertex orbit moved in lockstep) tries a
// stencil of integer moves within its stratum and accepts the best strictly
// improving one, so the global margin never decreases. Stops when a sweep
// accepts no move or the sweep cap is reached.
inline SmoothResult smooth(const TetMesh& input, const SmoothConfig& config) {
    if (config.max_sweeps < 1) throw Error("smooth: max_sweeps must be at least 1");
    if (config.step < 1) throw Error("smooth: step must be at least 1 milliunit");
    TetMesh mesh = input;
    const int nv = static_cast<int>(mesh.vertices.size());

    std::vector<VertexStratum> strata;
    strata.reserve(mesh.vertices.size());
    for (const auto& p : mesh.vertices) strata.push_back(vertex_stratum(p));

    // vertex orbits (singletons unless symmetry is enforced)
    std::vector<detail::VertexOrbit> orbits;
    if (config.enforce_symmetry) {
        const auto& group = full_symmetry_group();
        const auto perms = vertex_permutations(mesh, group);
        std::vector<char> seen(static_cast<std::size_t>(nv), 0);
        for (int v = 0; v < nv; ++v) {
            if (seen[static_cast<std::size_t>(v)]) continue;
            detail::VertexOrbit orb;
            orb.representative = v;
            std::map<int, SymmetryOp> images;
            for (std::size_t gi = 0; gi < group.size(); ++gi) {
                const int img = perms[gi][static_cast<std::size_t>(v)];
                images.try_emplace(img, group[gi]);
                if (img == v) orb.stabilizer.push_back(group[gi]);
            }
            for (const auto& [img, op] : images) {
                orb.members.push_back(img);
                orb.member_ops.push_back(op);
                seen[static_cast<std::size_t>(img)] = 1;
            }
            orbits.push_back(std::move(orb));
        }
    } else {
        for (int v = 0; v < nv; ++v) {
            orbits.push_back({v, {v}, {SymmetryOp::identity()}, {}});
        }
    }

    auto build_incidence = [&]() {
        std::vector<std::vector<int>> inc(static_cast<std::size_t>(nv));
        for (int ti = 0; ti < static_cast<int>(mesh.tets.size()); ++ti) {
            for (int v : mesh.tets[static_cast<std::size_t>(ti)].v) {
                inc[static_cast<std::size_t>(v)].push_back(ti);
            }
        }
        return inc;
    };
    std::vector<std::vector<int>> incidence = build_incidence();

    auto eval_tet = [&](int ti) {
        const auto& t = mesh.tets[static_cast<std::size_t>(ti)];
        const MilliPoint& a = mesh.vertices[static_cast<std::size_t>(t.v[0])];
        const MilliPoint& b = mesh.vertices[static_cast<std::size_t>(t.v[1])];
        const MilliPoint& c = mesh.vertices[static_cast<std::size_t>(t.v[2])];
        const MilliPoint& d = mesh.vertices[static_cast<std::size_t>(t.v[3])];
        if (orient3d(a, b, c, d) <= 0) return -std::numeric_limits<double>::infinity();
        return tet_margin(a, b, c, d, config.kappa);
    };

    SmoothResult result;
    result.sweep_margins.push_back(quality_margin(mesh, config.kappa));

    for (int sweep = 0; sweep < config.max_sweeps; ++sweep) {
        long long moves = 0;
        for (const auto& orb : orbits) {
            const auto& s = strata[static_cast<std::size_t>(orb.representative)];
            if (s.kind == StratumKind::kCorner) continue;
            const auto candidates = detail::stencil_offsets(s, config.step, orb.stabilizer);
            if (candidates.empty()) continue;

            std::set<int> local;
            for (int m : orb.members) {
                for (int ti : incidence[static_cast<std::size_t>(m)]) local.insert(ti);
            }
            auto local_margin = [&]() {
                double worst = std::numeric_limits<double>::infinity();
                for (int ti : local) worst = std::min(worst, eval_tet(ti));
                return worst;
            };
            const double before = local_margin();

            std::vector<MilliPoint> saved;
            saved.reserve(orb.members.size());
            for (int m : orb.members) saved.push_back(mesh.vertices[static_cast<std::size_t>(m)]);
            const MilliPoint base = mesh.vertices[static_cast<std::size_t>(orb.representative)];

            double best = before;
            MilliPoint best_delta{0, 0, 0};
            bool found = false;
            for (const auto& d : candidates) {
                const MilliPoint target = base + d;
                bool in_range = true;
                for (int axis = 0; axis < 3; ++axis) {
                    if (!s.pinned[static_cast<std::size_t>(axis)] &&
                        std::llabs(coord(target, axis)) > 999) {
                        in_range = false;
                    }
                }
                if (!in_range) continue;
                for (std::size_t k = 0; k < orb.members.size(); ++k) {
                    mesh.vertices[static_cast<std::size_t>(orb.members[k])] =
                        orb.member_ops[k].apply(target);
                }
                const double after = local_margin();
                if (after > best) {
                    best = after;
                    best_delta = d;
                    found = true;
                }
                for (std::size_t k = 0; k < orb.members.size(); ++k) {
                    mesh.vertices[static_cast<std::size_t>(orb.members[k])] = saved[k];
                }
            }
            if (found) {
                const MilliPoint target = base + best_delta;
                for (std::size_t k = 0; k < orb.members.size(); ++k) {
                    mesh.vertices[static_cast<std::size_t>(orb.members[k])] =
                        orb.member_ops[k].apply(target);
                }
                ++moves;
            }
        }
        result.moves_accepted += moves;
        ++result.sweeps_run;

        if (config.redelaunay_every > 0 && (sweep + 1) % config.redelaunay_every == 0) {
            // Connectivity refresh; kept only when it does not hurt the margin.
            TetMesh redone = triangulate(mesh.vertices, DegeneracyPolicy::kSymbolicPerturb);
            if (quality_margin(redone, config.kappa) >= quality_margin(mesh, config.kappa)) {
                mesh = std::move(redone);
                incidence = build_incidence();
            }
        }

        const double margin = quality_margin(mesh, config.kappa);
        const double gain = margin - result.sweep_margins.back();
        result.sweep_margins.push_back(margin);
        if (moves == 0) break;
        if (config.min_improvement > 0 && gain < config.min_improvement) break;
    }
    result.mesh = std::move(mesh);
    return result;
}

}  // namespace acutecube
