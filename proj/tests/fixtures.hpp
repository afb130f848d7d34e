#pragma once

// Shared fixtures for the test suites. Coordinates are frozen; every derived
// value was computed with the independent oracles in the tests that use it.

#include <vector>

#include "mosaic/geometry.hpp"

namespace fixtures {

using mosaic::Box;
using mosaic::CoordVec;
using mosaic::Floorplan;

// Two stacked blocks: [0,1]x[0,1] below [0,1]x[1,2].
inline Floorplan stack2() {
    return Floorplan::validate(
        2, Box{{0, 0}, {1, 2}},
        {Box{{0, 0}, {1, 1}}, Box{{0, 1}, {1, 2}}});
}

// Two blocks side by side along x.
inline Floorplan side2() {
    return Floorplan::validate(
        2, Box{{0, 0}, {2, 1}},
        {Box{{0, 0}, {1, 1}}, Box{{1, 0}, {2, 1}}});
}

// Left column plus two stacked right blocks.
inline Floorplan three_blocks() {
    return Floorplan::validate(2, Box{{0, 0}, {2, 2}},
                               {Box{{0, 0}, {1, 2}}, Box{{1, 0}, {2, 1}}, Box{{1, 1}, {2, 2}}});
}

// Four equal squares meeting at the center: two borders cross there.
inline std::vector<Box> grid2x2_blocks() {
    return {Box{{0, 0}, {1, 1}}, Box{{1, 0}, {2, 1}}, Box{{0, 1}, {1, 2}}, Box{{1, 1}, {2, 2}}};
}

// Four rectangles around a center block; only T-junctions, no crossings.
inline Floorplan pinwheel5() {
    return Floorplan::validate(2, Box{{0, 0}, {3, 3}},
                               {Box{{0, 0}, {2, 1}}, Box{{2, 0}, {3, 2}}, Box{{1, 2}, {3, 3}},
                                Box{{0, 1}, {1, 3}}, Box{{1, 1}, {2, 2}}});
}

// 3D plan whose border at z=1 is an L: a tall pillar next to two stacked
// columns. Five blocks; no fewer can break genericity.
inline std::vector<Box> l_border_blocks() {
    return {Box{{0, 0, 0}, {1, 1, 2}}, Box{{1, 0, 0}, {2, 2, 1}}, Box{{1, 0, 1}, {2, 2, 2}},
            Box{{0, 1, 0}, {1, 2, 1}}, Box{{0, 1, 1}, {1, 2, 2}}};
}

// The 7-block mosaic floorplan of the Baxter permutation 4513762, realized
// by d-perm2FP and frozen.
inline Floorplan bax7() {
    return Floorplan::validate(
        2, Box{{0, 0}, {4, 4}},
        {Box{{0, 0}, {1, 1}}, Box{{1, 0}, {3, 1}}, Box{{0, 1}, {2, 4}}, Box{{2, 1}, {3, 3}},
         Box{{3, 0}, {4, 2}}, Box{{3, 2}, {4, 3}}, Box{{2, 3}, {4, 4}}});
}

// The 5-block 3-floorplan whose 3-permutation is (12435, 34125), frozen from
// the d-perm2FP output projected down its full-width fourth axis.
inline Floorplan fp3() {
    return Floorplan::validate(3, Box{{0, 0, 0}, {3, 2, 2}},
                               {Box{{0, 0, 0}, {1, 1, 2}}, Box{{1, 0, 0}, {2, 1, 2}},
                                Box{{0, 1, 0}, {2, 2, 1}}, Box{{0, 1, 1}, {2, 2, 2}},
                                Box{{2, 0, 0}, {3, 2, 2}}});
}

}  // namespace fixtures
