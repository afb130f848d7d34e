#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mosaic/errors.hpp"

namespace mosaic {

/// A d-permutation: d-1 permutations of {0..n-1}; the implicit first
/// coordinate is the identity. Point i of the diagram is
/// (i, perms[0][i], ..., perms[d-2][i]).
struct DPermutation {
    int dims = 2;
    std::vector<std::vector<int>> perms;

    int size() const { return perms.empty() ? 0 : static_cast<int>(perms[0].size()); }
    static DPermutation identity(int dims, int n);
    std::vector<std::vector<int>> points() const;

    bool operator==(const DPermutation&) const = default;
};

/// An element of {+1,-1}^d; positive iff signs[0] == +1.
struct Direction {
    std::vector<int> signs;

    bool positive() const { return !signs.empty() && signs[0] > 0; }
    Direction opposite() const;
    bool operator==(const Direction&) const = default;
};

/// Componentwise sign of b - a. Coordinates of distinct points never tie.
Direction direction_between(const std::vector<int>& a, const std::vector<int>& b);

/// A pattern with per-axis adjacency sets: j in adjacency[k] forces the j-th
/// and (j+1)-th occurrence points in axis-k order to have consecutive axis-k
/// coordinates.
struct VincularPattern {
    DPermutation pattern;
    std::vector<std::vector<int>> adjacency;  // one sorted subset of [k-1] per axis

    std::string to_string() const;
    bool operator==(const VincularPattern&) const = default;
};

/// An occurrence reported as a witness: the projection axes and the ambient
/// axis-0 indices of the matched points (0-based, ascending).
struct Occurrence {
    std::vector<int> axes;
    std::vector<int> points;
    VincularPattern pattern;

    std::string to_string() const;
};

/// Direct projection onto an increasing index list; proj on all indices is
/// the identity. Throws BadIndices.
DPermutation project(const DPermutation& p, const std::vector<int>& indices);

/// Classical containment: some direct projection and index subset realize
/// the pattern.
bool contains(const DPermutation& p, const DPermutation& pattern);

/// Vincular containment; adjacency is evaluated in the projected
/// coordinates. An empty adjacency list degenerates to contains().
bool contains_vincular(const DPermutation& p, const VincularPattern& vp,
                       Occurrence* witness = nullptr);

/// Orbit of vp under the 2^d'·d'! symmetries of the pattern's own cube,
/// re-normalized so axis 0 reads as the identity, adjacency transported,
/// deduplicated, sorted. Throws BadIndices when the pattern exceeds
/// ambient_dims.
std::vector<VincularPattern> symmetry_closure(const VincularPattern& vp, int ambient_dims);

/// Membership in the class F^{d-1}: avoid Sym((312, 213)) on 3D projections
/// and Sym(vinc(2413, X0={2})) on 2D projections.
bool is_in_F(const DPermutation& p, Occurrence* witness = nullptr);

/// Size 1, or the diagram splits in two parts with a single direction from
/// every first-part point to every second-part point, both parts separable.
bool is_separable(const DPermutation& p);

/// Classical Baxter test on a plain permutation (avoid 2-41-3 and 3-14-2 by
/// direct position scan). Independent of the pattern engine.
bool is_baxter_2d(const std::vector<int>& perm);

enum class PermClass { F, Separable, All };

/// Exhaustive count over all (n!)^{d-1} d-permutations. Deterministic for
/// any worker count. Throws ResourceLimitError when the search space is
/// plainly infeasible.
std::uint64_t enumerate_class(int dims, int n, PermClass cls, int workers = 1);

}  // namespace mosaic
