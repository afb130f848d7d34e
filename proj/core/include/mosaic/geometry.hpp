#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mosaic/errors.hpp"
#include "mosaic/relation.hpp"

namespace mosaic {

using Coord = int;
using CoordVec = std::vector<Coord>;

/// Closed axis-aligned box given by its minimal and maximal corners.
/// Blocks are full-dimensional: lo[i] < hi[i] on every axis.
struct Box {
    CoordVec lo, hi;

    int dim() const { return static_cast<int>(lo.size()); }
    long long volume() const;
    bool contains(const Box& inner) const;
    bool interiors_overlap(const Box& other) const;
    bool operator==(const Box&) const = default;
};

/// A (d-1)-dimensional facet: a degenerate box whose interval on `axis` is
/// punctual. rect.lo[axis] == rect.hi[axis] == position().
struct Facet {
    int axis = -1;
    Box rect;

    Coord position() const { return rect.lo[axis]; }
    bool operator==(const Facet&) const = default;
};

enum class Touch { Disjoint, ProperTouch, Crosses, Equal };

/// Directional touch test. Crosses when the interiors intersect and the axes
/// differ; ProperTouch when the interior of f meets g (closed) without
/// crossing. Boundary-only contact of f against g is Disjoint.
Touch touches(const Facet& f, const Facet& g);

/// A bounding-box corner as a min/max flag per axis (1 = maximal side).
struct Corner {
    std::vector<std::uint8_t> max_side;

    int dim() const { return static_cast<int>(max_side.size()); }
    Corner opposite() const;
    static Corner zeros(int d) { return Corner{std::vector<std::uint8_t>(d, 0)}; }
    static Corner ones(int d) { return Corner{std::vector<std::uint8_t>(d, 1)}; }
    bool operator==(const Corner&) const = default;
};

/// One partial order per axis; rel[j].get(a, b) means block a precedes block
/// b in direction j. Each rel[j] is reflexive and transitive.
struct DirectionRelationSet {
    int dim = 0;
    int n = 0;
    std::vector<Relation> rel;
};

/// Weak-equivalence invariant: the direction relations under the canonical
/// block labeling (peel order at the all-zeros corner).
struct Signature {
    int dim = 0;
    int n = 0;
    std::vector<Relation> rel;

    bool operator==(const Signature&) const = default;
    std::string key() const;  // stable textual form, usable as a map key
};

/// A d-dimensional mosaic floorplan on the integer grid. Instances are only
/// created through validate() and are immutable afterwards: partitionhood,
/// genericity and the tatami condition always hold, coordinates are
/// normalized, and the interior borders are precomputed.
class Floorplan {
public:
    /// Throws NotAPartition / NotGeneric / TatamiViolation. The returned
    /// floorplan is normalized; block identifiers are the list indices.
    static Floorplan validate(int dim, const Box& bounds, std::vector<Box> blocks);

    int dim() const { return dim_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    const Box& bounds() const { return bounds_; }
    const std::vector<Box>& blocks() const { return blocks_; }

    /// Maximal interior borders, sorted by (axis, position). In a valid
    /// floorplan every border is a single facet.
    const std::vector<Facet>& borders() const { return borders_; }

    bool operator==(const Floorplan&) const = default;

private:
    Floorplan() = default;

    int dim_ = 0;
    Box bounds_;
    std::vector<Box> blocks_;
    std::vector<Facet> borders_;
};

/// The one-block floorplan [0,1]^d.
Floorplan single_block(int dim);

/// Order-preserving remap of the per-axis coordinate sets onto 0..k.
/// Idempotent; preserves weak equivalence.
Floorplan normalize(const Floorplan& fp);

CoordVec corner_point(const Floorplan& fp, const Corner& corner);

/// Index of the unique block incident to a bounding-box corner.
int block_at_corner(const Floorplan& fp, const Corner& corner);

DirectionRelationSet direction_relations(const Floorplan& fp);

/// The unique facet f of the block at `corner` that is incident to the
/// block's opposite corner and satisfies b(f) = f. Throws SingleBlock.
Facet shifting_facet(const Floorplan& fp, const Corner& corner);

/// Remove the block at `corner` and close the gap by shifting its shifting
/// facet to the corner. Surviving blocks keep their relative order; validity
/// is re-checked. If removed_id is non-null it receives the deleted block's
/// index in fp. Throws SingleBlock.
Floorplan delete_block(const Floorplan& fp, const Corner& corner, int* removed_id = nullptr);

/// Deletion order of all blocks under repeated delete_block at `corner`.
std::vector<int> peel(const Floorplan& fp, const Corner& corner);

/// Two floorplans are weakly equivalent iff their signatures are equal.
Signature canonical_signature(const Floorplan& fp);

/// True iff fp is one block or some border spans the full cross-section and
/// both parts are recursively guillotine.
bool is_guillotine(const Floorplan& fp);

}  // namespace mosaic
