#pragma once

#include <vector>

#include "mosaic/dperm.hpp"
#include "mosaic/geometry.hpp"
#include "mosaic/relation.hpp"

namespace mosaic {

/// The d canonical peeling corners of a 2^{d-1}-floorplan. Corner q_i
/// alternates packets of 2^{d-1-i} zeros and ones, starting with zeros.
struct CanonicalCornerSet {
    int dims = 0;  // d; the corners live in dimension 2^{d-1}
    std::vector<Corner> corners;
};

CanonicalCornerSet canonical_corners(int dims);

/// Bijection between the 2^{d-1} positive directions and floorplan axes:
/// ax(dir) is the axis whose direction relation is the intersection of the
/// signed canonical peeling orders selected by dir. Throws
/// NonPositiveDirection.
int associated_axis(const Direction& dir, int dims);
Direction direction_for_axis(int axis, int dims);

/// Append full-width axes until the floorplan has target_dim dimensions.
Floorplan lift_floorplan(const Floorplan& fp, int target_dim);

/// The canonical d-permutation of a 2^{d-1}-floorplan: coordinate i of a
/// block's point is its 1-based rank in the peel order at q_i. Floorplans of
/// other dimensions are lifted to the next power of two when allow_lift is
/// set; otherwise DimensionNotPowerOfTwo is thrown.
DPermutation phi(const Floorplan& fp, bool allow_lift = true);

/// The 2^{d-1} partial orders of a d-permutation, indexed by the associated
/// floorplan axis: psi(p)[ax(dir)] relates a before b iff the direction from
/// point a to point b is dir.
std::vector<Relation> psi(const DPermutation& p);

/// Algorithm d-perm2FP: realize a 2^{d-1}-floorplan from a d-permutation in
/// F^{d-1} by successive block insertions at the maximal corner. Block k of
/// the result corresponds to the point with first coordinate k. Throws
/// NotInClassF with the offending occurrence.
Floorplan dperm_to_floorplan(const DPermutation& p);

/// dperm_to_floorplan(phi(fp)) weakly equivalent to fp. Requires a
/// power-of-two dimension.
bool roundtrip_check(const Floorplan& fp);
/// phi(dperm_to_floorplan(p)) == p. Requires p in F.
bool roundtrip_check(const DPermutation& p);

}  // namespace mosaic
