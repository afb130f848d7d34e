#include "mosaic/bijection.hpp"

#include <algorithm>

#include "mosaic/gentree.hpp"

namespace mosaic {

namespace {

bool is_power_of_two(int x) { return x > 0 && (x & (x - 1)) == 0; }

int next_power_of_two(int x) {
    int p = 1;
    while (p < x) p *= 2;
    return p;
}

int log2_exact(int x) {
    int l = 0;
    while ((1 << l) < x) ++l;
    return l;
}

}  // namespace

CanonicalCornerSet canonical_corners(int dims) {
    if (dims < 1) throw DomainError("dims must be >= 1");
    const int D = 1 << (dims - 1);
    CanonicalCornerSet cs{dims, {}};
    for (int i = 0; i < dims; ++i) {
        Corner q = Corner::zeros(D);
        const int packet = 1 << (dims - 1 - i);
        for (int j = 0; j < D; ++j) q.max_side[j] = static_cast<std::uint8_t>((j / packet) % 2);
        cs.corners.push_back(std::move(q));
    }
    return cs;
}

int associated_axis(const Direction& dir, int dims) {
    if (static_cast<int>(dir.signs.size()) != dims)
        throw DomainError("direction dimension mismatch");
    if (!dir.positive()) throw NonPositiveDirection("associated_axis needs a positive direction");
    int axis = 0;
    for (int i = 1; i < dims; ++i)
        if (dir.signs[i] < 0) axis |= 1 << (dims - 1 - i);
    return axis;
}

Direction direction_for_axis(int axis, int dims) {
    Direction dir{std::vector<int>(dims, 1)};
    for (int i = 1; i < dims; ++i)
        if ((axis >> (dims - 1 - i)) & 1) dir.signs[i] = -1;
    return dir;
}

Floorplan lift_floorplan(const Floorplan& fp, int target_dim) {
    if (target_dim < fp.dim()) throw DomainError("cannot lift to a smaller dimension");
    if (target_dim == fp.dim()) return fp;
    const int extra = target_dim - fp.dim();
    Box bounds = fp.bounds();
    for (int t = 0; t < extra; ++t) {
        bounds.lo.push_back(0);
        bounds.hi.push_back(1);
    }
    std::vector<Box> blocks = fp.blocks();
    for (Box& b : blocks)
        for (int t = 0; t < extra; ++t) {
            b.lo.push_back(0);
            b.hi.push_back(1);
        }
    return Floorplan::validate(target_dim, bounds, std::move(blocks));
}

DPermutation phi(const Floorplan& input, bool allow_lift) {
    Floorplan fp = input;
    if (!is_power_of_two(fp.dim())) {
        if (!allow_lift)
            throw DimensionNotPowerOfTwo("floorplan dimension " + std::to_string(fp.dim()) +
                                         " is not a power of two");
        fp = lift_floorplan(fp, next_power_of_two(fp.dim()));
    }
    const int dims = log2_exact(fp.dim()) + 1;
    const CanonicalCornerSet cs = canonical_corners(dims);
    const int n = fp.block_count();

    std::vector<std::vector<int>> rank(dims, std::vector<int>(n));
    std::vector<int> first;
    for (int i = 0; i < dims; ++i) {
        const std::vector<int> order = peel(fp, cs.corners[i]);
        for (int r = 0; r < n; ++r) rank[i][order[r]] = r;
        if (i == 0) first = order;
    }
    DPermutation p{dims, std::vector<std::vector<int>>(dims - 1, std::vector<int>(n))};
    for (int t = 1; t < dims; ++t)
        for (int k = 0; k < n; ++k) p.perms[t - 1][k] = rank[t][first[k]];
    return p;
}

std::vector<Relation> psi(const DPermutation& p) {
    const int dims = p.dims;
    const int D = 1 << (dims - 1);
    const int n = p.size();
    const auto pts = p.points();
    std::vector<Relation> orders(D, Relation(n, true));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            const Direction d = direction_between(pts[a], pts[b]);
            if (d.positive()) orders[associated_axis(d, dims)].set(a, b);
        }
    return orders;
}

Floorplan dperm_to_floorplan(const DPermutation& p) {
    Occurrence occ;
    if (!is_in_F(p, &occ))
        throw NotInClassF("permutation is not in class F", occ.to_string());

    const int dims = p.dims;
    const int D = 1 << (dims - 1);
    const int n = p.size();
    const auto pts = p.points();

    Floorplan fp = single_block(D);
    std::vector<std::vector<int>> saillant(D, std::vector<int>{0});
    for (int i = 1; i < n; ++i) {
        const Direction f = direction_between(pts[i - 1], pts[i]);
        const int j = associated_axis(f, dims);
        std::vector<int> push;
        for (int k : saillant[j])
            if (direction_between(pts[k], pts[i]) == f) push.push_back(k);
        if (push.empty()) throw Error("d-perm2FP: empty push set");

        // minimal corner of the union of the pushed blocks' upper facets
        CoordVec a = fp.bounds().hi;
        for (int t = 0; t < D; ++t) {
            if (t == j) continue;
            for (int k : push) a[t] = std::min(a[t], fp.blocks()[k].lo[t]);
        }
        const auto pcs = pushable_corners(fp);
        const PushableCorner* target = nullptr;
        for (const PushableCorner& pc : pcs)
            if (pc.axis == j && pc.coords == a) target = &pc;
        if (target == nullptr) throw Error("d-perm2FP: pushable corner not found");

        // the facet must cover exactly the blocks the algorithm pushes
        std::vector<int> under;
        for (int k = 0; k < fp.block_count(); ++k) {
            const Box& b = fp.blocks()[k];
            if (b.hi[j] != fp.bounds().hi[j]) continue;
            bool inside = true;
            for (int t = 0; t < D && inside; ++t)
                if (t != j) inside = a[t] <= b.lo[t];
            if (inside) under.push_back(k);
        }
        if (under != push) throw Error("d-perm2FP: push set mismatch");

        fp = insert_block(fp, *target);
        std::erase_if(saillant[j], [&](int k) {
            return std::find(push.begin(), push.end(), k) != push.end();
        });
        for (int t = 0; t < D; ++t) saillant[t].push_back(i);
    }
    return fp;
}

bool roundtrip_check(const Floorplan& fp) {
    if (!is_power_of_two(fp.dim()))
        throw DimensionNotPowerOfTwo("roundtrip needs a power-of-two dimension");
    return canonical_signature(dperm_to_floorplan(phi(fp))) == canonical_signature(fp);
}

bool roundtrip_check(const DPermutation& p) { return phi(dperm_to_floorplan(p)) == p; }

}  // namespace mosaic
