#include "mosaic/gentree.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>

namespace mosaic {

Label Label::root(int dim) {
    Label l{dim, {}};
    for (int i = 0; i < dim; ++i) {
        RankVector v{i, std::vector<int>(dim, 0)};
        v.entries[i] = kDot;
        l.vectors.push_back(std::move(v));
    }
    return l;
}

Label Label::canonicalize(int dim, std::vector<RankVector> vecs) {
    // per coordinate, order-preserving re-rank of the numeric entries
    for (int j = 0; j < dim; ++j) {
        std::set<int> vals;
        for (const RankVector& v : vecs)
            if (v.entries[j] != kDot) vals.insert(v.entries[j]);
        std::map<int, int> rank;
        int r = 0;
        for (int x : vals) rank[x] = r++;
        for (RankVector& v : vecs)
            if (v.entries[j] != kDot) v.entries[j] = rank[v.entries[j]];
    }
    std::sort(vecs.begin(), vecs.end());
    vecs.erase(std::unique(vecs.begin(), vecs.end()), vecs.end());
    return Label{dim, std::move(vecs)};
}

std::string Label::key() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < vectors.size(); ++k) {
        if (k) os << ';';
        const RankVector& v = vectors[k];
        for (int j = 0; j < dim; ++j) {
            if (j) os << ',';
            if (v.entries[j] == kDot)
                os << '.';
            else
                os << v.entries[j];
        }
    }
    return os.str();
}

Label Label::parse(int dim, const std::string& key) {
    Label l{dim, {}};
    std::istringstream vs(key);
    std::string vec;
    while (std::getline(vs, vec, ';')) {
        RankVector v{-1, {}};
        std::istringstream es(vec);
        std::string ent;
        while (std::getline(es, ent, ',')) {
            if (ent == ".") {
                if (v.axis >= 0) throw ParseError("rank vector with two dots: " + vec);
                v.axis = static_cast<int>(v.entries.size());
                v.entries.push_back(kDot);
            } else {
                try {
                    v.entries.push_back(std::stoi(ent));
                } catch (const std::exception&) {
                    throw ParseError("bad rank entry '" + ent + "' in " + vec);
                }
            }
        }
        if (v.axis < 0 || static_cast<int>(v.entries.size()) != dim)
            throw ParseError("malformed rank vector: " + vec);
        l.vectors.push_back(std::move(v));
    }
    if (l.vectors.empty()) throw ParseError("empty label");
    return canonicalize(dim, std::move(l.vectors));
}

std::vector<PushableCorner> pushable_corners(const Floorplan& fp) {
    const int d = fp.dim();
    std::vector<PushableCorner> out;
    for (int ax = 0; ax < d; ++ax) {
        const Coord top = fp.bounds().hi[ax];
        std::vector<const Box*> tops;
        for (const Box& b : fp.blocks())
            if (b.hi[ax] == top) tops.push_back(&b);

        // candidate minimal corners: the minimal corner of some upper facet
        std::set<CoordVec> cands;
        for (const Box* b : tops) {
            CoordVec a = b->lo;
            a[ax] = top;
            cands.insert(std::move(a));
        }
        for (const CoordVec& a : cands) {
            // the would-be facet [a, bounds.hi]; pushable iff exactly tiled
            // by the upper facets inside it
            Facet f{ax, Box{a, fp.bounds().hi}};
            f.rect.lo[ax] = f.rect.hi[ax] = top;
            long long covered = 0;
            bool exact = true;
            for (const Box* b : tops) {
                bool meets = true, inside = true;
                long long vol = 1;
                for (int t = 0; t < d; ++t) {
                    if (t == ax) continue;
                    meets = meets && std::max(b->lo[t], a[t]) < b->hi[t];
                    inside = inside && a[t] <= b->lo[t];
                    vol *= b->hi[t] - b->lo[t];
                }
                if (!meets) continue;
                if (!inside) {
                    exact = false;
                    break;
                }
                covered += vol;
            }
            long long want = 1;
            for (int t = 0; t < d; ++t)
                if (t != ax) want *= fp.bounds().hi[t] - a[t];
            if (exact && covered == want) out.push_back(PushableCorner{ax, a, std::move(f)});
        }
    }
    std::sort(out.begin(), out.end(), [](const PushableCorner& x, const PushableCorner& y) {
        if (x.axis != y.axis) return x.axis < y.axis;
        return x.coords < y.coords;
    });
    return out;
}

Floorplan insert_block(const Floorplan& fp, const PushableCorner& pc) {
    const auto pcs = pushable_corners(fp);
    if (std::find(pcs.begin(), pcs.end(), pc) == pcs.end())
        throw InvalidCorner("corner is not pushable in this floorplan");

    const int d = fp.dim();
    const int ax = pc.axis;
    const Coord top = fp.bounds().hi[ax];
    std::vector<Box> nb = fp.blocks();
    for (Box& b : nb) {
        if (b.hi[ax] != top) continue;
        bool under = true;
        for (int t = 0; t < d && under; ++t)
            if (t != ax) under = pc.coords[t] <= b.lo[t];
        // blocks under the pushable facet keep their height; the rest grow
        // with the bounding box
        if (!under) b.hi[ax] = top + 1;
    }
    Box fresh{pc.coords, fp.bounds().hi};
    fresh.lo[ax] = top;
    fresh.hi[ax] = top + 1;
    nb.push_back(std::move(fresh));
    Box bounds = fp.bounds();
    bounds.hi[ax] = top + 1;
    return Floorplan::validate(d, bounds, std::move(nb));
}

Floorplan parent(const Floorplan& fp) {
    if (fp.block_count() < 2) throw SingleBlock("the root has no parent");
    return delete_block(fp, Corner::ones(fp.dim()));
}

std::vector<Floorplan> children(const Floorplan& fp) {
    std::vector<Floorplan> out;
    for (const PushableCorner& pc : pushable_corners(fp)) out.push_back(insert_block(fp, pc));
    return out;
}

Label label_of(const Floorplan& fp) {
    const auto pcs = pushable_corners(fp);
    const int d = fp.dim();
    std::vector<std::map<Coord, int>> rank(d);
    for (int j = 0; j < d; ++j) {
        std::set<Coord> vals;
        for (const PushableCorner& pc : pcs) vals.insert(pc.coords[j]);
        int r = 0;
        for (Coord v : vals) rank[j][v] = r++;
    }
    std::vector<RankVector> vecs;
    vecs.reserve(pcs.size());
    for (const PushableCorner& pc : pcs) {
        RankVector v{pc.axis, std::vector<int>(d)};
        for (int j = 0; j < d; ++j) v.entries[j] = (j == pc.axis) ? kDot : rank[j][pc.coords[j]];
        vecs.push_back(std::move(v));
    }
    return Label::canonicalize(d, std::move(vecs));
}

Label rewrite(const Label& label, const RankVector& v) {
    const int d = label.dim;
    if (std::find(label.vectors.begin(), label.vectors.end(), v) == label.vectors.end())
        throw VectorNotInLabel("vector " + Label{d, {v}}.key() + " not in label " + label.key());

    const int i = v.axis;
    std::vector<RankVector> survivors;
    for (const RankVector& w : label.vectors) {
        bool shadowed = false;
        for (int j = 0; j < d && !shadowed; ++j) {
            if (j == i || j == w.axis) continue;
            shadowed = w.entries[j] > v.entries[j];
        }
        if (!shadowed) survivors.push_back(w);
    }
    // new core vector: per-coordinate maxima over the numeric entries of the
    // survivors, bumped by one on the chosen axis
    std::vector<int> core(d);
    for (int j = 0; j < d; ++j) {
        int m = -1;
        for (const RankVector& w : survivors)
            if (w.entries[j] != kDot) m = std::max(m, w.entries[j]);
        core[j] = (j == i) ? m + 1 : m;
    }
    std::vector<RankVector> out = std::move(survivors);
    for (int j = 0; j < d; ++j) {
        RankVector nv{j, core};
        nv.entries[j] = kDot;
        out.push_back(std::move(nv));
    }
    return Label::canonicalize(d, std::move(out));
}

LevelCounter::LevelCounter(int dim, EnumerationLimits limits) : dim_(dim), limits_(limits) {
    if (dim < 1) throw DomainError("dimension must be >= 1");
    frontier_.emplace_back(Label::root(dim), 1);
    counts_.push_back(1);
}

LevelCounter LevelCounter::resume(const Frontier& f, EnumerationLimits limits) {
    LevelCounter lc;
    lc.dim_ = f.dim;
    lc.level_ = f.level;
    lc.limits_ = limits;
    lc.counts_ = f.counts;
    for (const auto& [key, count] : f.entries)
        lc.frontier_.emplace_back(Label::parse(f.dim, key), count);
    std::sort(lc.frontier_.begin(), lc.frontier_.end(),
              [](const auto& a, const auto& b) { return a.first.key() < b.first.key(); });
    return lc;
}

void LevelCounter::advance() {
    const int workers = std::max(1, limits_.workers);
    std::vector<std::unordered_map<std::string, std::pair<Label, std::uint64_t>>> local(workers);

    auto run = [&](int w) {
        auto& mine = local[w];
        for (std::size_t idx = w; idx < frontier_.size(); idx += workers) {
            const auto& [label, count] = frontier_[idx];
            for (const RankVector& v : label.vectors) {
                Label child = rewrite(label, v);
                std::string key = child.key();
                auto it = mine.find(key);
                if (it == mine.end())
                    mine.emplace(std::move(key), std::make_pair(std::move(child), count));
                else
                    it->second.second += count;
            }
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }

    // merge: keyed addition is order-independent, so the result does not
    // depend on the worker count
    std::map<std::string, std::pair<Label, std::uint64_t>> merged;
    for (auto& mine : local)
        for (auto& [key, lc] : mine) {
            auto it = merged.find(key);
            if (it == merged.end())
                merged.emplace(key, std::move(lc));
            else
                it->second.second += lc.second;
        }

    if (merged.size() > limits_.frontier_cap)
        throw ResourceLimitError("frontier cap exceeded at level " + std::to_string(level_ + 1) +
                                     " (" + std::to_string(merged.size()) + " labels)",
                                 level_);

    frontier_.clear();
    std::uint64_t total = 0;
    for (auto& [key, lc] : merged) {
        total += lc.second;
        frontier_.emplace_back(std::move(lc.first), lc.second);
    }
    counts_.push_back(total);
    ++level_;
}

Frontier LevelCounter::frontier() const {
    Frontier f{dim_, level_, counts_, {}};
    f.entries.reserve(frontier_.size());
    for (const auto& [label, count] : frontier_) f.entries.emplace_back(label.key(), count);
    return f;
}

std::vector<std::uint64_t> count_by_level(int dim, int n_max, EnumerationLimits limits) {
    if (n_max < 1) throw DomainError("n_max must be >= 1");
    LevelCounter lc(dim, limits);
    while (lc.level() < n_max) lc.advance();
    return lc.counts();
}

void enumerate_floorplans(int dim, int n, const std::function<void(const Floorplan&)>& sink,
                          EnumerationLimits limits) {
    if (n < 1) throw DomainError("n must be >= 1");
    std::vector<Floorplan> level{single_block(dim)};
    for (int depth = 1; depth < n; ++depth) {
        std::vector<Floorplan> next;
        for (const Floorplan& fp : level)
            for (Floorplan& child : children(fp)) {
                next.push_back(std::move(child));
                if (next.size() > limits.frontier_cap)
                    throw ResourceLimitError("node cap exceeded at level " +
                                                 std::to_string(depth + 1),
                                             depth);
            }
        level = std::move(next);
    }
    for (const Floorplan& fp : level) sink(fp);
}

std::vector<Floorplan> enumerate_floorplans(int dim, int n, EnumerationLimits limits) {
    std::vector<Floorplan> out;
    enumerate_floorplans(
        dim, n, [&](const Floorplan& fp) { out.push_back(fp); }, limits);
    return out;
}

}  // namespace mosaic
