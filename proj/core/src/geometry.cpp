#include "mosaic/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace mosaic {

long long Box::volume() const {
    long long v = 1;
    for (int j = 0; j < dim(); ++j) v *= hi[j] - lo[j];
    return v;
}

bool Box::contains(const Box& inner) const {
    for (int j = 0; j < dim(); ++j)
        if (inner.lo[j] < lo[j] || hi[j] < inner.hi[j]) return false;
    return true;
}

bool Box::interiors_overlap(const Box& other) const {
    for (int j = 0; j < dim(); ++j)
        if (std::max(lo[j], other.lo[j]) >= std::min(hi[j], other.hi[j])) return false;
    return true;
}

Corner Corner::opposite() const {
    Corner c = *this;
    for (auto& s : c.max_side) s = s ? 0 : 1;
    return c;
}

namespace {

// Open interval of a facet on axis k: the punctual point on its own axis,
// the open extent elsewhere.
bool open_open_meet(Coord alo, Coord ahi, Coord blo, Coord bhi) {
    return std::max(alo, blo) < std::min(ahi, bhi);
}

bool interiors_intersect(const Facet& f, const Facet& g) {
    const int d = f.rect.dim();
    for (int k = 0; k < d; ++k) {
        const bool fp = (k == f.axis);
        const bool gp = (k == g.axis);
        if (fp && gp) {
            if (f.position() != g.position()) return false;
        } else if (fp) {
            if (!(g.rect.lo[k] < f.position() && f.position() < g.rect.hi[k])) return false;
        } else if (gp) {
            if (!(f.rect.lo[k] < g.position() && g.position() < f.rect.hi[k])) return false;
        } else {
            if (!open_open_meet(f.rect.lo[k], f.rect.hi[k], g.rect.lo[k], g.rect.hi[k]))
                return false;
        }
    }
    return true;
}

// interior(f) meets the closed facet g?
bool interior_meets_closed(const Facet& f, const Facet& g) {
    const int d = f.rect.dim();
    for (int k = 0; k < d; ++k) {
        if (k == f.axis) {
            if (!(g.rect.lo[k] <= f.position() && f.position() <= g.rect.hi[k])) return false;
        } else {
            // open (f.lo, f.hi) against closed [g.lo, g.hi]
            if (!(f.rect.lo[k] < g.rect.hi[k] && g.rect.lo[k] < f.rect.hi[k])) return false;
        }
    }
    return true;
}

std::string box_str(const Box& b) {
    std::ostringstream os;
    os << "[";
    for (int j = 0; j < b.dim(); ++j) os << (j ? "," : "") << b.lo[j];
    os << "]-[";
    for (int j = 0; j < b.dim(); ++j) os << (j ? "," : "") << b.hi[j];
    os << "]";
    return os.str();
}

void compress_coordinates(int dim, Box& bounds, std::vector<Box>& blocks) {
    for (int j = 0; j < dim; ++j) {
        std::set<Coord> vals{bounds.lo[j], bounds.hi[j]};
        for (const Box& b : blocks) {
            vals.insert(b.lo[j]);
            vals.insert(b.hi[j]);
        }
        std::map<Coord, Coord> remap;
        Coord r = 0;
        for (Coord v : vals) remap[v] = r++;
        bounds.lo[j] = remap[bounds.lo[j]];
        bounds.hi[j] = remap[bounds.hi[j]];
        for (Box& b : blocks) {
            b.lo[j] = remap[b.lo[j]];
            b.hi[j] = remap[b.hi[j]];
        }
    }
}

}  // namespace

Touch touches(const Facet& f, const Facet& g) {
    if (f == g) return Touch::Equal;
    if (f.axis != g.axis && interiors_intersect(f, g)) return Touch::Crosses;
    if (interior_meets_closed(f, g)) return Touch::ProperTouch;
    return Touch::Disjoint;
}

Floorplan Floorplan::validate(int dim, const Box& raw_bounds, std::vector<Box> blocks) {
    if (dim < 1) throw DomainError("floorplan dimension must be >= 1");
    if (raw_bounds.dim() != dim) throw DomainError("bounds dimension mismatch");
    if (blocks.empty()) throw NotAPartition("a floorplan needs at least one block");
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (blocks[i].dim() != dim) throw DomainError("block dimension mismatch");
        for (int j = 0; j < dim; ++j)
            if (blocks[i].lo[j] >= blocks[i].hi[j])
                throw NotAPartition("block " + std::to_string(i) + " is not full-dimensional");
        if (!raw_bounds.contains(blocks[i]))
            throw NotAPartition("block " + std::to_string(i) + " lies outside the bounds");
    }

    Box bounds = raw_bounds;
    compress_coordinates(dim, bounds, blocks);

    for (std::size_t a = 0; a < blocks.size(); ++a)
        for (std::size_t b = a + 1; b < blocks.size(); ++b)
            if (blocks[a].interiors_overlap(blocks[b]))
                throw NotAPartition("blocks " + std::to_string(a) + " and " + std::to_string(b) +
                                    " overlap");
    long long vol = 0;
    for (const Box& b : blocks) vol += b.volume();
    if (vol != bounds.volume())
        throw NotAPartition("blocks do not cover the bounds (gap of volume " +
                            std::to_string(bounds.volume() - vol) + ")");

    // Genericity: per (axis, position), the union of all interior facets at
    // that position must exactly cover its hyperrectangle hull.
    std::vector<Facet> borders;
    for (int j = 0; j < dim; ++j) {
        std::map<Coord, std::vector<const Box*>> groups;
        for (const Box& b : blocks)
            for (Coord pos : {b.lo[j], b.hi[j]})
                if (pos != bounds.lo[j] && pos != bounds.hi[j]) groups[pos].push_back(&b);
        for (auto& [pos, mem] : groups) {
            Box hull{CoordVec(dim), CoordVec(dim)};
            hull.lo[j] = hull.hi[j] = pos;
            bool first = true;
            for (const Box* b : mem) {
                for (int t = 0; t < dim; ++t) {
                    if (t == j) continue;
                    hull.lo[t] = first ? b->lo[t] : std::min(hull.lo[t], b->lo[t]);
                    hull.hi[t] = first ? b->hi[t] : std::max(hull.hi[t], b->hi[t]);
                }
                first = false;
            }
            // cell-by-cell cover check on the compressed sub-grid of the group
            std::vector<std::vector<Coord>> cs(dim);
            for (int t = 0; t < dim; ++t) {
                if (t == j) continue;
                std::set<Coord> vals;
                for (const Box* b : mem) {
                    vals.insert(b->lo[t]);
                    vals.insert(b->hi[t]);
                }
                cs[t].assign(vals.begin(), vals.end());
            }
            const auto covered = [&](const CoordVec& clo, const CoordVec& chi) {
                for (const Box* b : mem) {
                    bool in = true;
                    for (int t = 0; t < dim && in; ++t)
                        if (t != j) in = b->lo[t] <= clo[t] && chi[t] <= b->hi[t];
                    if (in) return true;
                }
                return false;
            };
            // odometer over the hull cells of the group's compressed sub-grid
            std::vector<std::size_t> cell(dim, 0);
            bool done = false;
            while (!done) {
                CoordVec clo(dim, pos), chi(dim, pos);
                for (int t = 0; t < dim; ++t) {
                    if (t == j) continue;
                    clo[t] = cs[t][cell[t]];
                    chi[t] = cs[t][cell[t] + 1];
                }
                if (!covered(clo, chi))
                    throw NotGeneric("border of axis " + std::to_string(j) + " at position " +
                                     std::to_string(pos) + " is not a single facet");
                done = true;
                for (int t = 0; t < dim; ++t) {
                    if (t == j) continue;
                    if (cell[t] + 2 < cs[t].size()) {
                        ++cell[t];
                        done = false;
                        break;
                    }
                    cell[t] = 0;
                }
            }
            borders.push_back(Facet{j, hull});
        }
    }

    for (std::size_t a = 0; a < borders.size(); ++a)
        for (std::size_t b = a + 1; b < borders.size(); ++b)
            if (touches(borders[a], borders[b]) == Touch::Crosses)
                throw TatamiViolation("borders cross: axis " + std::to_string(borders[a].axis) +
                                      " at " + std::to_string(borders[a].position()) + " " +
                                      box_str(borders[a].rect) + " and axis " +
                                      std::to_string(borders[b].axis) + " at " +
                                      std::to_string(borders[b].position()) + " " +
                                      box_str(borders[b].rect));

    Floorplan fp;
    fp.dim_ = dim;
    fp.bounds_ = std::move(bounds);
    fp.blocks_ = std::move(blocks);
    fp.borders_ = std::move(borders);
    return fp;
}

Floorplan single_block(int dim) {
    Box unit{CoordVec(dim, 0), CoordVec(dim, 1)};
    return Floorplan::validate(dim, unit, {unit});
}

Floorplan normalize(const Floorplan& fp) {
    return Floorplan::validate(fp.dim(), fp.bounds(), fp.blocks());
}

CoordVec corner_point(const Floorplan& fp, const Corner& corner) {
    if (corner.dim() != fp.dim()) throw DomainError("corner dimension mismatch");
    CoordVec q(fp.dim());
    for (int j = 0; j < fp.dim(); ++j)
        q[j] = corner.max_side[j] ? fp.bounds().hi[j] : fp.bounds().lo[j];
    return q;
}

int block_at_corner(const Floorplan& fp, const Corner& corner) {
    const CoordVec q = corner_point(fp, corner);
    int found = -1;
    for (int i = 0; i < fp.block_count(); ++i) {
        const Box& b = fp.blocks()[i];
        bool in = true;
        for (int j = 0; j < fp.dim() && in; ++j) in = b.lo[j] <= q[j] && q[j] <= b.hi[j];
        if (in) {
            found = i;
            break;  // the incident block is unique in a partition
        }
    }
    if (found < 0) throw DomainError("no block at corner");
    return found;
}

DirectionRelationSet direction_relations(const Floorplan& fp) {
    const int n = fp.block_count();
    const int d = fp.dim();
    DirectionRelationSet out{d, n, std::vector<Relation>(d, Relation(n))};
    for (int j = 0; j < d; ++j) {
        // a and b are j-neighbors iff they share the border at a.hi[j]; in a
        // generic floorplan that border is unique per position, so the shared
        // coordinate suffices.
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (a != b && fp.blocks()[a].hi[j] == fp.blocks()[b].lo[j]) out.rel[j].set(a, b);
        out.rel[j].close();
    }
    return out;
}

Facet shifting_facet(const Floorplan& fp, const Corner& corner) {
    if (fp.block_count() < 2) throw SingleBlock("one-block floorplan has no shifting facet");
    const int d = fp.dim();
    const int bi = block_at_corner(fp, corner);
    const Box& b = fp.blocks()[bi];
    // opposite corner of the block
    CoordVec qbar(d);
    for (int j = 0; j < d; ++j) qbar[j] = corner.max_side[j] ? b.lo[j] : b.hi[j];

    const Facet* result = nullptr;
    for (int ax = 0; ax < d; ++ax) {
        const Coord pos = qbar[ax];
        if (pos == fp.bounds().lo[ax] || pos == fp.bounds().hi[ax]) continue;
        Facet f{ax, b};
        f.rect.lo[ax] = f.rect.hi[ax] = pos;
        for (const Facet& border : fp.borders()) {
            if (border.axis == ax && border.position() == pos && border == f) {
                if (result != nullptr) throw DomainError("shifting facet is not unique");
                result = &border;
            }
        }
    }
    if (result == nullptr) throw DomainError("no shifting facet found");
    return *result;
}

Floorplan delete_block(const Floorplan& fp, const Corner& corner, int* removed_id) {
    if (fp.block_count() < 2) throw SingleBlock("cannot delete the last block");
    const int bi = block_at_corner(fp, corner);
    const Facet f = shifting_facet(fp, corner);
    const int ax = f.axis;
    const Coord pos = f.position();

    std::vector<Box> nb;
    nb.reserve(fp.block_count() - 1);
    for (int k = 0; k < fp.block_count(); ++k) {
        if (k == bi) continue;
        Box b = fp.blocks()[k];
        if (corner.max_side[ax]) {
            if (b.hi[ax] == pos) b.hi[ax] = fp.bounds().hi[ax];
        } else {
            if (b.lo[ax] == pos) b.lo[ax] = fp.bounds().lo[ax];
        }
        nb.push_back(std::move(b));
    }
    if (removed_id != nullptr) *removed_id = bi;
    // re-validate rather than trusting the shift; also drops the vacated
    // grid coordinate via normalization
    return Floorplan::validate(fp.dim(), fp.bounds(), std::move(nb));
}

std::vector<int> peel(const Floorplan& fp, const Corner& corner) {
    std::vector<int> order;
    order.reserve(fp.block_count());
    std::vector<int> ids(fp.block_count());
    for (int i = 0; i < fp.block_count(); ++i) ids[i] = i;
    Floorplan cur = fp;
    while (cur.block_count() > 1) {
        int k = -1;
        cur = delete_block(cur, corner, &k);
        order.push_back(ids[k]);
        ids.erase(ids.begin() + k);
    }
    order.push_back(ids[0]);
    return order;
}

Signature canonical_signature(const Floorplan& fp) {
    DirectionRelationSet drs = direction_relations(fp);
    // The peel order at the all-zeros corner is the union of all forward
    // direction relations, so it can be read off the relations alone.
    Relation u(fp.block_count(), true);
    for (const Relation& r : drs.rel) u = u | r;
    const std::vector<int> order = u.linear_order();
    Signature sig{fp.dim(), fp.block_count(), {}};
    sig.rel.reserve(drs.rel.size());
    for (const Relation& r : drs.rel) sig.rel.push_back(r.relabeled(order));
    return sig;
}

std::string Signature::key() const {
    std::ostringstream os;
    os << dim << ":" << n << ":";
    for (const Relation& r : rel) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) os << (r.get(a, b) ? '1' : '0');
        os << "|";
    }
    return os.str();
}

bool is_guillotine(const Floorplan& fp) {
    if (fp.block_count() == 1) return true;
    const int d = fp.dim();
    for (const Facet& border : fp.borders()) {
        const int j = border.axis;
        bool full = true;
        for (int t = 0; t < d && full; ++t)
            if (t != j)
                full = border.rect.lo[t] == fp.bounds().lo[t] &&
                       border.rect.hi[t] == fp.bounds().hi[t];
        if (!full) continue;
        const Coord pos = border.position();
        std::vector<Box> below, above;
        for (const Box& b : fp.blocks()) {
            if (b.hi[j] <= pos)
                below.push_back(b);
            else if (b.lo[j] >= pos)
                above.push_back(b);
        }
        if (below.size() + above.size() != fp.blocks().size()) continue;
        Box blo = fp.bounds(), bhi = fp.bounds();
        blo.hi[j] = pos;
        bhi.lo[j] = pos;
        if (is_guillotine(Floorplan::validate(d, blo, below)) &&
            is_guillotine(Floorplan::validate(d, bhi, above)))
            return true;
    }
    return false;
}

}  // namespace mosaic
