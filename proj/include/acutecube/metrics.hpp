#pragma once

#include <array>
#include <cmath>
#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

#include "acutecube/point.hpp"
#include "acutecube/predicates.hpp"

namespace acutecube {

using Rational = boost::multiprecision::cpp_rational;

// Edge k joins vertices kTetEdges[k][0..1]; the other two vertices are the
// edge's opposite pair.
inline constexpr int kTetEdges[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

// Facet i is opposite vertex i. For a positively oriented tetrahedron the
// listed order makes each facet's normal point away from the opposite vertex.
inline constexpr int kTetFacets[4][3] = {{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}};

struct RationalPoint {
    Rational x, y, z;
};

struct CircumSphere {
    RationalPoint center;
    Rational r_squared;  // in milliunits^2
};

namespace detail {

struct Vec3d {
    double x, y, z;
};

inline Vec3d to_vec3d(const MilliPoint& p) {
    return {static_cast<double>(p.x), static_cast<double>(p.y), static_cast<double>(p.z)};
}

inline Vec3d sub(const Vec3d& a, const Vec3d& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline double dot(const Vec3d& a, const Vec3d& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3d cross(const Vec3d& a, const Vec3d& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3d& a) { return std::sqrt(dot(a, a)); }

inline double angle_deg(const Vec3d& u, const Vec3d& v) {
    double c = dot(u, v) / (norm(u) * norm(v));
    c = std::max(-1.0, std::min(1.0, c));
    return std::acos(c) * 180.0 / 3.14159265358979323846;
}

inline void require_nondegenerate(const MilliPoint& a, const MilliPoint& b, const MilliPoint& c,
                                  const MilliPoint& d) {
    if (orient3d(a, b, c, d) == 0) {
        throw DegenerateTetError("degenerate tetrahedron: vertices are coplanar");
    }
}

struct BigVec3 {
    BigInt x, y, z;
};

inline BigVec3 big_sub(const MilliPoint& a, const MilliPoint& b) {
    return {BigInt(a.x) - BigInt(b.x), BigInt(a.y) - BigInt(b.y), BigInt(a.z) - BigInt(b.z)};
}

inline BigInt big_dot(const BigVec3& a, const BigVec3& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline BigVec3 big_cross(const BigVec3& a, const BigVec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

// Exact circumcenter as (numerator vector, common denominator): the solution
// of 2(b-a).O = |b|^2-|a|^2 (and cyclic) by Cramer's rule.
struct RawCenter {
    BigInt nx, ny, nz, den;
};

inline RawCenter raw_circumcenter(const MilliPoint& a, const MilliPoint& b, const MilliPoint& c,
                                  const MilliPoint& d) {
    const BigVec3 m1 = big_sub(b, a), m2 = big_sub(c, a), m3 = big_sub(d, a);
    auto sq = [](const MilliPoint& p) {
        return BigInt(p.x) * p.x + BigInt(p.y) * p.y + BigInt(p.z) * p.z;
    };
    const BigInt sa = sq(a);
    // Halved system: (b-a).O = (|b|^2-|a|^2)/2; keep integers by scaling by 2.
    const BigInt r1 = sq(b) - sa, r2 = sq(c) - sa, r3 = sq(d) - sa;
    const BigInt two = 2;
    const BigInt den = two * det3(m1.x, m1.y, m1.z, m2.x, m2.y, m2.z, m3.x, m3.y, m3.z);
    const BigInt nx = det3(r1, m1.y, m1.z, r2, m2.y, m2.z, r3, m3.y, m3.z);
    const BigInt ny = det3(m1.x, r1, m1.z, m2.x, r2, m2.z, m3.x, r3, m3.z);
    const BigInt nz = det3(m1.x, m1.y, r1, m2.x, m2.y, r2, m3.x, m3.y, r3);
    return {nx, ny, nz, den};
}

}  // namespace detail

// Exact rational circumcenter and squared circumradius of a tetrahedron.
inline CircumSphere circumsphere(const MilliPoint& a, const MilliPoint& b, const MilliPoint& c,
                                 const MilliPoint& d) {
    detail::require_nondegenerate(a, b, c, d);
    const auto rc = detail::raw_circumcenter(a, b, c, d);
    CircumSphere out;
    out.center.x = Rational(rc.nx, rc.den);
    out.center.y = Rational(rc.ny, rc.den);
    out.center.z = Rational(rc.nz, rc.den);
    const Rational dx = out.center.x - a.x;
    const Rational dy = out.center.y - a.y;
    const Rational dz = out.center.z - a.z;
    out.r_squared = dx * dx + dy * dy + dz * dz;
    return out;
}

// The six interior dihedral angles in degrees, indexed like kTetEdges.
inline std::array<double, 6> dihedral_angles(const MilliPoint& a, const MilliPoint& b,
                                             const MilliPoint& c, const MilliPoint& d) {
    detail::require_nondegenerate(a, b, c, d);
    const MilliPoint pts[4] = {a, b, c, d};
    std::array<double, 6> out{};
    for (int k = 0; k < 6; ++k) {
        const int i = kTetEdges[k][0], j = kTetEdges[k][1];
        int rest[2], r = 0;
        for (int m = 0; m < 4; ++m) {
            if (m != i && m != j) rest[r++] = m;
        }
        const auto pa = detail::to_vec3d(pts[i]);
        const auto e = detail::sub(detail::to_vec3d(pts[j]), pa);
        const auto u0 = detail::sub(detail::to_vec3d(pts[rest[0]]), pa);
        const auto v0 = detail::sub(detail::to_vec3d(pts[rest[1]]), pa);
        const double ee = detail::dot(e, e);
        const detail::Vec3d u = {u0.x - detail::dot(u0, e) / ee * e.x,
                                 u0.y - detail::dot(u0, e) / ee * e.y,
                                 u0.z - detail::dot(u0, e) / ee * e.z};
        const detail::Vec3d v = {v0.x - detail::dot(v0, e) / ee * e.x,
                                 v0.y - detail::dot(v0, e) / ee * e.y,
                                 v0.z - detail::dot(v0, e) / ee * e.z};
        out[k] = detail::angle_deg(u, v);
    }
    return out;
}

// The twelve facet angles in degrees: facet f (opposite vertex f), then the
// angle at each of the facet's three vertices in kTetFacets order.
inline std::array<double, 12> face_angles(const MilliPoint& a, const MilliPoint& b,
                                          const MilliPoint& c, const MilliPoint& d) {
    detail::require_nondegenerate(a, b, c, d);
    const MilliPoint pts[4] = {a, b, c, d};
    std::array<double, 12> out{};
    int n = 0;
    for (const auto& f : kTetFacets) {
        for (int i = 0; i < 3; ++i) {
            const auto p = detail::to_vec3d(pts[f[i]]);
            const auto q = detail::to_vec3d(pts[f[(i + 1) % 3]]);
            const auto r = detail::to_vec3d(pts[f[(i + 2) % 3]]);
            out[n++] = detail::angle_deg(detail::sub(q, p), detail::sub(r, p));
        }
    }
    return out;
}

// Exact sign (+/0/-) of the signed circumcenter-to-facet distance for each
// facet, positive when the circumcenter is on the same side as the opposite
// vertex. Element i corresponds to the facet opposite vertex i.
inline std::array<int, 4> h_over_r_signs(const MilliPoint& a, const MilliPoint& b,
                                         const MilliPoint& c, const MilliPoint& d) {
    detail::require_nondegenerate(a, b, c, d);
    const MilliPoint pts[4] = {a, b, c, d};
    const auto rc = detail::raw_circumcenter(a, b, c, d);
    std::array<int, 4> out{};
    for (int i = 0; i < 4; ++i) {
        const auto& f = kTetFacets[i];
        const MilliPoint& f0 = pts[f[0]];
        const auto n = detail::big_cross(detail::big_sub(pts[f[1]], f0),
                                         detail::big_sub(pts[f[2]], f0));
        const BigInt side_opp = detail::big_dot(n, detail::big_sub(pts[i], f0));
        // n.(O - f0) scaled by the center's denominator
        const BigInt num = n.x * rc.nx + n.y * rc.ny + n.z * rc.nz -
                           rc.den * (n.x * f0.x + n.y * f0.y + n.z * f0.z);
        out[i] = detail::sign_of(num) * detail::sign_of(rc.den) * detail::sign_of(side_opp);
    }
    return out;
}

// h/R per facet: circumcenter-to-facet distance over circumradius, sign taken
// from the exact computation, magnitude in floating point. Always in (-1, 1).
inline std::array<double, 4> h_over_r(const MilliPoint& a, const MilliPoint& b,
                                      const MilliPoint& c, const MilliPoint& d) {
    const auto signs = h_over_r_signs(a, b, c, d);
    const auto cs = circumsphere(a, b, c, d);
    const detail::Vec3d center = {cs.center.x.convert_to<double>(),
                                  cs.center.y.convert_to<double>(),
                                  cs.center.z.convert_to<double>()};
    const double radius = std::sqrt(cs.r_squared.convert_to<double>());
    const MilliPoint pts[4] = {a, b, c, d};
    std::array<double, 4> out{};
    for (int i = 0; i < 4; ++i) {
        const auto& f = kTetFacets[i];
        const auto f0 = detail::to_vec3d(pts[f[0]]);
        const auto n = detail::cross(detail::sub(detail::to_vec3d(pts[f[1]]), f0),
                                     detail::sub(detail::to_vec3d(pts[f[2]]), f0));
        const double h = std::abs(detail::dot(n, detail::sub(center, f0))) / detail::norm(n);
        out[i] = signs[i] * h / radius;
    }
    return out;
}

// All-double quality numbers for optimization search loops. Not exact; the
// audit path recomputes anything that feeds a pass/fail flag.
struct TetQuality {
    double max_dihedral_deg;
    double min_h_over_r;
};

inline TetQuality tet_quality_fast(const MilliPoint& a, const MilliPoint& b, const MilliPoint& c,
                                   const MilliPoint& d) {
    using namespace detail;
    const Vec3d pts[4] = {to_vec3d(a), to_vec3d(b), to_vec3d(c), to_vec3d(d)};
    TetQuality q{0.0, 1.0};
    for (int k = 0; k < 6; ++k) {
        const int i = kTetEdges[k][0], j = kTetEdges[k][1];
        int rest[2], r = 0;
        for (int m = 0; m < 4; ++m) {
            if (m != i && m != j) rest[r++] = m;
        }
        const Vec3d e = sub(pts[j], pts[i]);
        const Vec3d u0 = sub(pts[rest[0]], pts[i]);
        const Vec3d v0 = sub(pts[rest[1]], pts[i]);
        const double ee = dot(e, e);
        const Vec3d u = {u0.x - dot(u0, e) / ee * e.x, u0.y - dot(u0, e) / ee * e.y,
                         u0.z - dot(u0, e) / ee * e.z};
        const Vec3d v = {v0.x - dot(v0, e) / ee * e.x, v0.y - dot(v0, e) / ee * e.y,
                         v0.z - dot(v0, e) / ee * e.z};
        q.max_dihedral_deg = std::max(q.max_dihedral_deg, angle_deg(u, v));
    }
    // Double Cramer solve for the circumcenter.
    const Vec3d m1 = sub(pts[1], pts[0]), m2 = sub(pts[2], pts[0]), m3 = sub(pts[3], pts[0]);
    const double den =
        2.0 * det3(m1.x, m1.y, m1.z, m2.x, m2.y, m2.z, m3.x, m3.y, m3.z);
    if (den == 0.0) {
        q.min_h_over_r = -1.0;
        return q;
    }
    auto sq = [](const Vec3d& p) { return p.x * p.x + p.y * p.y + p.z * p.z; };
    const double r1 = sq(pts[1]) - sq(pts[0]);
    const double r2 = sq(pts[2]) - sq(pts[0]);
    const double r3 = sq(pts[3]) - sq(pts[0]);
    const Vec3d center = {det3(r1, m1.y, m1.z, r2, m2.y, m2.z, r3, m3.y, m3.z) / den,
                          det3(m1.x, r1, m1.z, m2.x, r2, m2.z, m3.x, r3, m3.z) / den,
                          det3(m1.x, m1.y, r1, m2.x, m2.y, r2, m3.x, m3.y, r3) / den};
    const double radius = norm(sub(center, pts[0]));
    for (int i = 0; i < 4; ++i) {
        const auto& f = kTetFacets[i];
        const Vec3d n = cross(sub(pts[f[1]], pts[f[0]]), sub(pts[f[2]], pts[f[0]]));
        const double side_opp = dot(n, sub(pts[i], pts[f[0]]));
        const double h = dot(n, sub(center, pts[f[0]])) * (side_opp >= 0 ? 1.0 : -1.0) / norm(n);
        q.min_h_over_r = std::min(q.min_h_over_r, h / radius);
    }
    return q;
}

}  // namespace acutecube
