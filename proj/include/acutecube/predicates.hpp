#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

#include "acutecube/point.hpp"

namespace acutecube {

using BigInt = boost::multiprecision::cpp_int;

namespace detail {

using Int128 = __int128;

template <typename I>
int sign_of(const I& v) {
    if (v > 0) return 1;
    if (v < 0) return -1;
    return 0;
}

template <typename I>
I det3(I a00, I a01, I a02, I a10, I a11, I a12, I a20, I a21, I a22) {
    return a00 * (a11 * a22 - a12 * a21) - a01 * (a10 * a22 - a12 * a20) +
           a02 * (a10 * a21 - a11 * a20);
}

template <typename I>
int orient3d_impl(const MilliPoint& a, const MilliPoint& b, const MilliPoint& c,
                  const MilliPoint& d) {
    const I bax = I(b.x) - I(a.x), bay = I(b.y) - I(a.y), baz = I(b.z) - I(a.z);
    const I cax = I(c.x) - I(a.x), cay = I(c.y) - I(a.y), caz = I(c.z) - I(a.z);
    const I dax = I(d.x) - I(a.x), day = I(d.y) - I(a.y), daz = I(d.z) - I(a.z);
    return sign_of(det3(bax, bay, baz, cax, cay, caz, dax, day, daz));
}

// Determinant of the paraboloid-lifted 4x4 matrix with rows (p - e, |p - e|^2)
// for p in {a, b, c, d}, expanded along the lifted column.
template <typename I>
I insphere_det(const MilliPoint& a, const MilliPoint& b, const MilliPoint& c,
               const MilliPoint& d, const MilliPoint& e) {
    const I ax = I(a.x) - I(e.x), ay = I(a.y) - I(e.y), az = I(a.z) - I(e.z);
    const I bx = I(b.x) - I(e.x), by = I(b.y) - I(e.y), bz = I(b.z) - I(e.z);
    const I cx = I(c.x) - I(e.x), cy = I(c.y) - I(e.y), cz = I(c.z) - I(e.z);
    const I dx = I(d.x) - I(e.x), dy = I(d.y) - I(e.y), dz = I(d.z) - I(e.z);
    const I al = ax * ax + ay * ay + az * az;
    const I bl = bx * bx + by * by + bz * bz;
    const I cl = cx * cx + cy * cy + cz * cz;
    const I dl = dx * dx + dy * dy + dz * dz;
    return -al * det3(bx, by, bz, cx, cy, cz, dx, dy, dz) +
           bl * det3(ax, ay, az, cx, cy, cz, dx, dy, dz) -
           cl * det3(ax, ay, az, bx, by, bz, dx, dy, dz) +
           dl * det3(ax, ay, az, bx, by, bz, cx, cy, cz);
}

// For an edge (a,b) and the two opposite vertices c,d of a tetrahedron, the
// dihedral angle along the edge is the angle between the components of
// (c-a) and (d-a) orthogonal to (b-a). Its cosine has the sign of
//   [(c-a).(d-a)] |b-a|^2 - [(c-a).(b-a)] [(d-a).(b-a)].
template <typename I>
int dihedral_cos_sign_impl(const MilliPoint& a, const MilliPoint& b, const MilliPoint& c,
                           const MilliPoint& d) {
    const I ex = I(b.x) - I(a.x), ey = I(b.y) - I(a.y), ez = I(b.z) - I(a.z);
    const I ux = I(c.x) - I(a.x), uy = I(c.y) - I(a.y), uz = I(c.z) - I(a.z);
    const I vx = I(d.x) - I(a.x), vy = I(d.y) - I(a.y), vz = I(d.z) - I(a.z);
    const I ee = ex * ex + ey * ey + ez * ez;
    const I uv = ux * vx + uy * vy + uz * vz;
    const I ue = ux * ex + uy * ey + uz * ez;
    const I ve = vx * ex + vy * ey + vz * ez;
    return sign_of(uv * ee - ue * ve);
}

// Coordinate bounds under which the __int128 evaluation provably cannot
// overflow. Beyond them the arbitrary-precision path is used instead.
inline constexpr std::int64_t kOrientFastMax = 1'000'000'000'000;  // 1e12
inline constexpr std::int64_t kLiftedFastMax = 2'000'000;          // 2e6

inline bool all_within(std::int64_t lim, const MilliPoint& a, const MilliPoint& b,
                       const MilliPoint& c, const MilliPoint& d) {
    return max_abs_coord(a) <= lim && max_abs_coord(b) <= lim && max_abs_coord(c) <= lim &&
           max_abs_coord(d) <= lim;
}

}  // namespace detail

// Sign of det(b-a, c-a, d-a): +1 when d lies on the positive side of the
// oriented plane (a,b,c), 0 when the four points are coplanar.
inline int orient3d(const MilliPoint& a, const MilliPoint& b, const MilliPoint& c,
                    const MilliPoint& d) {
    if (detail::all_within(detail::kOrientFastMax, a, b, c, d)) {
        return detail::orient3d_impl<detail::Int128>(a, b, c, d);
    }
    return detail::orient3d_impl<BigInt>(a, b, c, d);
}

// +1 when e is strictly inside the circumsphere of (a,b,c,d), 0 when
// cospherical, -1 when strictly outside. Requires orient3d(a,b,c,d) > 0.
inline int insphere(const MilliPoint& a, const MilliPoint& b, const MilliPoint& c,
                    const MilliPoint& d, const MilliPoint& e) {
    if (orient3d(a, b, c, d) <= 0) {
        throw OrientationError("insphere: tetrahedron (a,b,c,d) is not positively oriented");
    }
    if (detail::all_within(detail::kLiftedFastMax, a, b, c, d) &&
        max_abs_coord(e) <= detail::kLiftedFastMax) {
        return -detail::sign_of(detail::insphere_det<detail::Int128>(a, b, c, d, e));
    }
    return -detail::sign_of(detail::insphere_det<BigInt>(a, b, c, d, e));
}

// Sign of the cosine of the dihedral angle along edge (a,b) with opposite
// vertices c and d: +1 acute, 0 right, -1 obtuse. Exact.
inline int dihedral_cos_sign(const MilliPoint& a, const MilliPoint& b, const MilliPoint& c,
                             const MilliPoint& d) {
    if (detail::all_within(detail::kLiftedFastMax, a, b, c, d)) {
        return detail::dihedral_cos_sign_impl<detail::Int128>(a, b, c, d);
    }
    return detail::dihedral_cos_sign_impl<BigInt>(a, b, c, d);
}

namespace detail {

template <typename I>
int angle_cos_sign_impl(const MilliPoint& p, const MilliPoint& q, const MilliPoint& r) {
    const I ux = I(q.x) - I(p.x), uy = I(q.y) - I(p.y), uz = I(q.z) - I(p.z);
    const I vx = I(r.x) - I(p.x), vy = I(r.y) - I(p.y), vz = I(r.z) - I(p.z);
    return sign_of(ux * vx + uy * vy + uz * vz);
}

}  // namespace detail

// Sign of (q-p).(r-p): +1 when the triangle angle at p is acute. Exact.
inline int angle_cos_sign(const MilliPoint& p, const MilliPoint& q, const MilliPoint& r) {
    if (detail::all_within(detail::kOrientFastMax, p, q, r, p)) {
        return detail::angle_cos_sign_impl<detail::Int128>(p, q, r);
    }
    return detail::angle_cos_sign_impl<BigInt>(p, q, r);
}

}  // namespace acutecube
