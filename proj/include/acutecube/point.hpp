#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>

namespace acutecube {

// All geometry lives on an integer grid: 1 milliunit = 0.001 of a cube
// coordinate, so the canonical cube [-1,1]^3 becomes [-1000,1000]^3 and
// every published vertex coordinate (at most 3 decimals) is represented
// exactly. Exact predicates over these points never need an epsilon.
struct MilliPoint {
    std::int64_t x = 0;
    std::int64_t y = 0;
    std::int64_t z = 0;

    friend bool operator==(const MilliPoint&, const MilliPoint&) = default;
    friend auto operator<=>(const MilliPoint&, const MilliPoint&) = default;
};

inline MilliPoint operator+(const MilliPoint& a, const MilliPoint& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
}

inline MilliPoint operator-(const MilliPoint& a, const MilliPoint& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
}

inline std::int64_t max_abs_coord(const MilliPoint& p) {
    return std::max({std::llabs(p.x), std::llabs(p.y), std::llabs(p.z)});
}

inline std::int64_t coord(const MilliPoint& p, int axis) {
    return axis == 0 ? p.x : (axis == 1 ? p.y : p.z);
}

struct MilliPointHash {
    std::size_t operator()(const MilliPoint& p) const {
        auto mix = [](std::uint64_t v) {
            v += 0x9e3779b97f4a7c15ULL;
            v = (v ^ (v >> 30)) * 0xbf58476d1ce4e5b9ULL;
            v = (v ^ (v >> 27)) * 0x94d049bb133111ebULL;
            return v ^ (v >> 31);
        };
        std::uint64_t h = mix(static_cast<std::uint64_t>(p.x));
        h = mix(h ^ static_cast<std::uint64_t>(p.y));
        h = mix(h ^ static_cast<std::uint64_t>(p.z));
        return static_cast<std::size_t>(h);
    }
};

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Predicate was called with a tetrahedron that is not positively oriented.
struct OrientationError : Error {
    using Error::Error;
};

struct DegenerateTetError : Error {
    using Error::Error;
};

}  // namespace acutecube
