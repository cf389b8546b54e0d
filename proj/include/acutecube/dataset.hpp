#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "acutecube/point.hpp"

namespace acutecube {

// Vertex coordinates of the 1370-tetrahedron acute triangulation of the
// cube [-1000,1000]^3, in milliunits. Listed in generation order: the 26
// seed vertices of the generating region first, then the vertices each
// symmetry stage adds (15, 28, 68, 84, 56). dataset_seed() returns the
// first block; canonical_vertices() the full set.
inline constexpr std::array<int, 6> kDatasetBlockSizes = {26, 15, 28, 68, 84, 56};

inline constexpr std::array<std::array<std::int64_t, 3>, 277> kCanonicalVertexTable = {{
    {-1000, -1000, -1000}, {-152, -472, -152}, {-127, -269, 127}, {-122, -624, 122},
    {-210, -398, 99}, {0, 0, 0}, {-399, -598, 52}, {-224, -316, 224},
    {-240, -1000, -240}, {-270, -523, 270}, {-158, -263, -27}, {-1000, -1000, 0},
    {-254, -254, -254}, {-200, -200, 200}, {-347, -1000, 347}, {-336, -336, 336},
    {-258, -258, 115}, {-1000, -1000, 1000}, {-325, -325, -20}, {-115, -115, -115},
    {-517, -517, -230}, {-376, -376, 180}, {0, -214, 0}, {-559, -559, 357},
    {0, -388, 0}, {-150, -150, 61}, {1000, -1000, 1000}, {-52, -598, 399},
    {-99, -398, 210}, {-357, -559, 559}, {-180, -376, 376}, {-61, -150, 150},
    {240, -1000, 240}, {152, -472, 152}, {27, -263, 158}, {0, -1000, 1000},
    {254, -254, 254}, {-115, -258, 258}, {230, -517, 517}, {20, -325, 325},
    {115, -115, 115}, {0, -1000, -1000}, {180, -376, -376}, {517, -517, 230},
    {336, -336, -336}, {1000, -1000, 0}, {150, -150, -61}, {-20, -325, -325},
    {347, -1000, -347}, {99, -398, -210}, {559, -559, -357}, {1000, -1000, -1000},
    {224, -316, -224}, {399, -598, -52}, {-230, -517, -517}, {127, -269, -127},
    {325, -325, 20}, {357, -559, -559}, {-27, -263, -158}, {376, -376, -180},
    {122, -624, -122}, {200, -200, -200}, {210, -398, -99}, {52, -598, -399},
    {115, -258, -258}, {158, -263, 27}, {270, -523, -270}, {61, -150, -150},
    {258, -258, -115}, {1000, 1000, -1000}, {0, 214, 0}, {-52, 598, -399},
    {258, 258, 115}, {-357, 559, -559}, {-150, 150, -61}, {115, 115, -115},
    {-122, 624, -122}, {240, 1000, -240}, {150, 150, 61}, {-270, 523, -270},
    {1000, 1000, 0}, {-1000, 1000, 1000}, {-336, 336, -336}, {347, 1000, 347},
    {-240, 1000, 240}, {20, 325, -325}, {1000, 1000, 1000}, {0, 1000, 1000},
    {-180, 376, -376}, {517, 517, -230}, {-230, 517, 517}, {-99, 398, -210},
    {559, 559, 357}, {357, 559, 559}, {-224, 316, -224}, {122, 624, 122},
    {52, 598, 399}, {-127, 269, -127}, {399, 598, 52}, {-152, 472, 152},
    {27, 263, -158}, {152, 472, -152}, {-254, 254, 254}, {-200, 200, -200},
    {270, 523, 270}, {-20, 325, 325}, {-115, 258, -258}, {254, 254, -254},
    {180, 376, 376}, {-61, 150, -150}, {336, 336, 336}, {99, 398, 210},
    {-1000, 1000, 0}, {325, 325, -20}, {-27, 263, 158}, {-517, 517, 230},
    {376, 376, 180}, {115, 258, 258}, {-559, 559, -357}, {0, 388, 0},
    {-115, 115, 115}, {-399, 598, -52}, {210, 398, 99}, {61, 150, 150},
    {-325, 325, 20}, {224, 316, 224}, {0, 1000, -1000}, {-376, 376, -180},
    {127, 269, 127}, {-347, 1000, -347}, {-210, 398, -99}, {158, 263, -27},
    {-1000, 1000, -1000}, {-158, 263, 27}, {200, 200, 200}, {230, 517, -517},
    {-258, 258, -115}, {-1000, -240, -240}, {-398, -210, 99}, {269, 127, 127},
    {-523, -270, 270}, {316, 224, 224}, {150, -61, -150}, {-1000, 0, -1000},
    {-316, -224, 224}, {263, -27, 158}, {-1000, 347, -347}, {-269, -127, 127},
    {258, 115, 258}, {-517, -230, -517}, {-263, -158, -27}, {214, 0, 0},
    {-559, 357, -559}, {-1000, 0, 1000}, {150, 61, 150}, {-624, 122, -122},
    {-517, 230, 517}, {1000, 240, -240}, {-598, 52, -399}, {-559, -357, 559},
    {598, 399, 52}, {-472, -152, -152}, {-598, -52, 399}, {472, 152, -152},
    {-523, 270, -270}, {-325, 20, 325}, {398, 210, 99}, {-325, -20, -325},
    {-376, -180, 376}, {263, 158, -27}, {-376, 180, -376}, {-398, -99, 210},
    {1000, -347, -347}, {-388, 0, 0}, {-263, 27, 158}, {624, -122, -122},
    {-398, 99, -210}, {-258, -115, 258}, {598, -399, -52}, {-316, 224, -224},
    {-150, -61, 150}, {523, -270, -270}, {-269, 127, -127}, {1000, -240, 240},
    {398, -210, -99}, {-263, -27, -158}, {1000, 0, 1000}, {316, -224, -224},
    {-258, 115, -258}, {1000, 347, 347}, {269, -127, -127}, {-214, 0, 0},
    {517, -230, 517}, {263, -158, 27}, {-150, 61, -150}, {559, 357, 559},
    {1000, 0, -1000}, {-1000, 240, 240}, {624, 122, 122}, {517, 230, -517},
    {-598, 399, -52}, {598, 52, 399}, {559, -357, -559}, {-472, 152, 152},
    {472, -152, 152}, {598, -52, -399}, {-398, 210, -99}, {523, 270, 270},
    {325, 20, -325}, {-263, 158, 27}, {325, -20, 325}, {376, -180, -376},
    {-1000, -347, 347}, {376, 180, 376}, {398, -99, -210}, {-624, -122, 122},
    {388, 0, 0}, {263, 27, -158}, {-598, -399, 52}, {398, 99, 210},
    {258, -115, -258}, {-240, -240, -1000}, {-399, 52, -598}, {-27, 158, 263},
    {-347, 347, -1000}, {224, 224, 316}, {27, -158, 263}, {-122, 122, -624},
    {127, 127, 269}, {347, -347, -1000}, {-270, 270, -523}, {0, 0, 214},
    {122, -122, -624}, {-210, 99, -398}, {240, -240, 1000}, {52, -399, -598},
    {-224, 224, -316}, {399, 52, 598}, {-152, -152, -472}, {-127, 127, -269},
    {152, -152, 472}, {270, -270, -523}, {-158, -27, -263}, {210, 99, 398},
    {0, 0, -388}, {-52, 399, -598}, {158, -27, 263}, {99, -210, -398},
    {-99, 210, -398}, {-347, -347, 1000}, {224, -224, -316}, {27, 158, -263},
    {-122, -122, 624}, {127, -127, -269}, {-240, 240, 1000}, {-399, -52, 598},
    {-27, -158, -263}, {347, 347, 1000}, {-270, -270, 523}, {0, 0, -214},
    {122, 122, 624}, {-210, -99, 398}, {240, 240, -1000}, {52, 399, 598},
    {-224, -224, 316}, {399, -52, -598}, {-152, 152, 472}, {-127, -127, 269},
    {152, 152, -472}, {270, 270, 523}, {-158, 27, 263}, {210, -99, -398},
    {0, 0, 388}, {-52, -399, 598}, {158, 27, -263}, {99, 210, 398},
    {-99, -210, 398}
}};

inline std::vector<MilliPoint> canonical_vertices() {
    std::vector<MilliPoint> out;
    out.reserve(kCanonicalVertexTable.size());
    for (const auto& r : kCanonicalVertexTable) out.push_back({r[0], r[1], r[2]});
    return out;
}

inline std::vector<MilliPoint> dataset_seed() {
    std::vector<MilliPoint> out;
    out.reserve(kDatasetBlockSizes[0]);
    for (int i = 0; i < kDatasetBlockSizes[0]; ++i) {
        const auto& r = kCanonicalVertexTable[static_cast<std::size_t>(i)];
        out.push_back({r[0], r[1], r[2]});
    }
    return out;
}

}  // namespace acutecube
