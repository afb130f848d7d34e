#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "mosaic/geometry.hpp"

namespace mosaic {

/// Sentinel for the punctual entry of a rank vector ("." in the text form).
inline constexpr int kDot = -1;

/// Rank encoding of one pushable corner: entries[axis] == kDot, every other
/// entry is the 0-based rank of the corner's coordinate among the distinct
/// coordinates of all pushable corners on that axis.
struct RankVector {
    int axis = 0;
    std::vector<int> entries;

    bool operator==(const RankVector&) const = default;
    bool operator<(const RankVector& o) const {
        if (axis != o.axis) return axis < o.axis;
        return entries < o.entries;
    }
};

/// Canonical node label of the generating tree: deduplicated rank vectors
/// sorted by (axis, entries), with per-coordinate ranks compressed to a
/// prefix of the naturals.
struct Label {
    int dim = 0;
    std::vector<RankVector> vectors;

    static Label root(int dim);
    /// Canonicalize an arbitrary vector set (sort, dedupe, re-rank).
    static Label canonicalize(int dim, std::vector<RankVector> vectors);
    std::size_t size() const { return vectors.size(); }

    /// Text form: entries comma-separated with '.' for the DOT, vectors
    /// joined by ';'. Example root for d=2: ".,0;0,."
    std::string key() const;
    static Label parse(int dim, const std::string& key);

    bool operator==(const Label&) const = default;
};

/// A pushable corner: the minimal corner of a pushable facet. The facet lies
/// on the upper bounding facet of its axis, contains the maximal corner, and
/// is a union of upper block facets of that axis.
struct PushableCorner {
    int axis = 0;
    CoordVec coords;
    Facet facet;

    bool operator==(const PushableCorner&) const = default;
};

/// All pushable corners with respect to the maximal corner, sorted by
/// (axis, coords). Per axis the pushable facets are nested.
std::vector<PushableCorner> pushable_corners(const Floorplan& fp);

/// Inverse of delete_block at the maximal corner: flatten the blocks below
/// the pushable facet and insert a new block in the freed space. The new
/// block is appended, so existing block identifiers are stable. Throws
/// InvalidCorner when pc is not a pushable corner of fp.
Floorplan insert_block(const Floorplan& fp, const PushableCorner& pc);

/// Block deletion at the maximal corner. Throws SingleBlock.
Floorplan parent(const Floorplan& fp);

/// One child per pushable corner, in pushable_corners order.
std::vector<Floorplan> children(const Floorplan& fp);

/// The canonical label of fp's pushable-corner set.
Label label_of(const Floorplan& fp);

/// Label rewriting rule of the tree T_d^l: drop the vectors shadowed by v,
/// then adjoin the d new-core vectors. Throws VectorNotInLabel.
Label rewrite(const Label& label, const RankVector& v);

struct EnumerationLimits {
    int workers = 1;
    /// Cap on distinct labels per frontier (count_by_level) or nodes per
    /// level (enumerate_floorplans).
    std::uint64_t frontier_cap = 10'000'000;
};

/// The frontier of the level-by-level count: (label key, multiplicity)
/// records sorted by key, plus the counts of all completed levels.
struct Frontier {
    int dim = 0;
    int level = 0;  // depth of the entries (root = 1)
    std::vector<std::uint64_t> counts;
    std::vector<std::pair<std::string, std::uint64_t>> entries;
};

/// Iterates the multiplicity map of canonical labels level by level.
/// Deterministic for any worker count.
class LevelCounter {
public:
    explicit LevelCounter(int dim, EnumerationLimits limits = {});
    static LevelCounter resume(const Frontier& frontier, EnumerationLimits limits = {});

    int dim() const { return dim_; }
    int level() const { return level_; }
    const std::vector<std::uint64_t>& counts() const { return counts_; }

    /// Advance one level. Throws ResourceLimitError when the frontier cap is
    /// exceeded; counts() still reports every completed level.
    void advance();

    Frontier frontier() const;

private:
    LevelCounter() = default;

    int dim_ = 0;
    int level_ = 1;
    EnumerationLimits limits_;
    std::vector<std::uint64_t> counts_;
    std::vector<std::pair<Label, std::uint64_t>> frontier_;  // sorted by key
};

/// counts[k] = number of d-floorplans with k+1 blocks, for k+1 <= n_max.
std::vector<std::uint64_t> count_by_level(int dim, int n_max, EnumerationLimits limits = {});

/// Exhaustive enumeration of one representative per equivalence class at
/// depth n, streamed in deterministic order. The generating tree never
/// produces two equivalent floorplans, so no deduplication happens.
void enumerate_floorplans(int dim, int n, const std::function<void(const Floorplan&)>& sink,
                          EnumerationLimits limits = {});
std::vector<Floorplan> enumerate_floorplans(int dim, int n, EnumerationLimits limits = {});

}  // namespace mosaic
