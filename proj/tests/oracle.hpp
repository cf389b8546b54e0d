#pragma once

#include <algorithm>
#include <array>
#include <vector>

#include "acutecube/point.hpp"
#include "acutecube/predicates.hpp"

namespace testutil {

// Brute-force Delaunay oracle: enumerate all 4-subsets and keep the ones
// whose circumsphere is strictly empty of every other point. For a point set
// whose Delaunay triangulation is unique this is exactly its tet set. Shares
// only the insphere/orient3d predicates with the implementation under test,
// never its incremental construction.
inline std::vector<std::array<int, 4>> brute_force_delaunay(
    const std::vector<acutecube::MilliPoint>& pts) {
    using acutecube::MilliPoint;
    const int n = static_cast<int>(pts.size());
    std::vector<std::array<int, 4>> out;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            for (int c = b + 1; c < n; ++c) {
                for (int d = c + 1; d < n; ++d) {
                    MilliPoint p0 = pts[static_cast<std::size_t>(a)];
                    MilliPoint p1 = pts[static_cast<std::size_t>(b)];
                    MilliPoint p2 = pts[static_cast<std::size_t>(c)];
                    MilliPoint p3 = pts[static_cast<std::size_t>(d)];
                    const int o = acutecube::orient3d(p0, p1, p2, p3);
                    if (o == 0) continue;
                    if (o < 0) std::swap(p2, p3);
                    bool empty = true;
                    for (int e = 0; e < n && empty; ++e) {
                        if (e == a || e == b || e == c || e == d) continue;
                        if (acutecube::insphere(p0, p1, p2, p3,
                                                pts[static_cast<std::size_t>(e)]) >= 0) {
                            empty = false;
                        }
                    }
                    if (empty) out.push_back({a, b, c, d});
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace testutil
