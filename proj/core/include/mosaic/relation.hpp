#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <numeric>
#include <vector>

namespace mosaic {

// Dense n x n boolean relation with 64-bit row words. Small n (block counts
// of enumerated floorplans), so Floyd-Warshall closure on bit rows is plenty.
class Relation {
public:
    Relation() = default;
    explicit Relation(int n, bool reflexive = false)
        : n_(n), wpr_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * wpr_) {
        if (reflexive) {
            for (int i = 0; i < n; ++i) set(i, i);
        }
    }

    int size() const { return n_; }

    bool get(int a, int b) const {
        return (bits_[row(a) + b / 64] >> (b % 64)) & 1u;
    }
    void set(int a, int b) { bits_[row(a) + b / 64] |= std::uint64_t{1} << (b % 64); }

    // Reflexive-transitive closure in place.
    void close() {
        for (int i = 0; i < n_; ++i) set(i, i);
        for (int k = 0; k < n_; ++k) {
            for (int i = 0; i < n_; ++i) {
                if (get(i, k)) {
                    or_row(i, k);
                }
            }
        }
    }

    Relation reversed() const {
        Relation r(n_);
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b)
                if (get(a, b)) r.set(b, a);
        return r;
    }

    // new(a, b) = old(order[a], order[b])
    Relation relabeled(const std::vector<int>& order) const {
        assert(static_cast<int>(order.size()) == n_);
        Relation r(n_);
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b)
                if (get(order[a], order[b])) r.set(a, b);
        return r;
    }

    bool subset_of(const Relation& other) const {
        assert(n_ == other.n_);
        for (std::size_t w = 0; w < bits_.size(); ++w)
            if (bits_[w] & ~other.bits_[w]) return false;
        return true;
    }

    friend Relation operator&(const Relation& a, const Relation& b) {
        assert(a.n_ == b.n_);
        Relation r(a.n_);
        for (std::size_t w = 0; w < r.bits_.size(); ++w) r.bits_[w] = a.bits_[w] & b.bits_[w];
        return r;
    }
    friend Relation operator|(const Relation& a, const Relation& b) {
        assert(a.n_ == b.n_);
        Relation r(a.n_);
        for (std::size_t w = 0; w < r.bits_.size(); ++w) r.bits_[w] = a.bits_[w] | b.bits_[w];
        return r;
    }

    bool operator==(const Relation&) const = default;

    // Every pair comparable (in at least one direction)?
    bool total() const {
        for (int a = 0; a < n_; ++a)
            for (int b = a + 1; b < n_; ++b)
                if (!get(a, b) && !get(b, a)) return false;
        return true;
    }

    int successors(int a) const {
        int c = 0;
        for (int w = 0; w < wpr_; ++w) c += std::popcount(bits_[row(a) + w]);
        return c;
    }

    // For a reflexive total order: elements sorted first to last.
    std::vector<int> linear_order() const {
        assert(total());
        std::vector<int> idx(n_);
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(),
                  [this](int a, int b) { return successors(a) > successors(b); });
        return idx;
    }

private:
    std::size_t row(int a) const { return static_cast<std::size_t>(a) * wpr_; }
    void or_row(int dst, int src) {
        for (int w = 0; w < wpr_; ++w) bits_[row(dst) + w] |= bits_[row(src) + w];
    }

    int n_ = 0;
    int wpr_ = 0;
    std::vector<std::uint64_t> bits_;
};

}  // namespace mosaic
