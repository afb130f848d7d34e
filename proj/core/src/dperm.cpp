#include "mosaic/dperm.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

namespace mosaic {

DPermutation DPermutation::identity(int dims, int n) {
    DPermutation p{dims, {}};
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    p.perms.assign(dims - 1, id);
    return p;
}

std::vector<std::vector<int>> DPermutation::points() const {
    const int n = size();
    std::vector<std::vector<int>> pts(n, std::vector<int>(dims));
    for (int i = 0; i < n; ++i) {
        pts[i][0] = i;
        for (int t = 1; t < dims; ++t) pts[i][t] = perms[t - 1][i];
    }
    return pts;
}

Direction Direction::opposite() const {
    Direction d = *this;
    for (int& s : d.signs) s = -s;
    return d;
}

Direction direction_between(const std::vector<int>& a, const std::vector<int>& b) {
    Direction d;
    d.signs.reserve(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) d.signs.push_back(b[j] > a[j] ? 1 : -1);
    return d;
}

std::string VincularPattern::to_string() const {
    std::ostringstream os;
    const int n = pattern.size();
    for (std::size_t t = 0; t < pattern.perms.size(); ++t) {
        if (t) os << '|';
        for (int i = 0; i < n; ++i) {
            if (n > 9 && i) os << ' ';
            os << pattern.perms[t][i] + 1;
        }
    }
    for (std::size_t k = 0; k < adjacency.size(); ++k) {
        if (adjacency[k].empty()) continue;
        os << " X" << k << "={";
        for (std::size_t t = 0; t < adjacency[k].size(); ++t)
            os << (t ? "," : "") << adjacency[k][t];
        os << "}";
    }
    return os.str();
}

std::string Occurrence::to_string() const {
    std::ostringstream os;
    os << "points";
    for (int p : points) os << ' ' << p + 1;
    os << " match pattern " << pattern.to_string() << " on axes";
    for (int a : axes) os << ' ' << a;
    return os.str();
}

DPermutation project(const DPermutation& p, const std::vector<int>& indices) {
    if (indices.empty()) throw BadIndices("projection needs at least one index");
    for (std::size_t t = 0; t < indices.size(); ++t) {
        if (indices[t] < 0 || indices[t] >= p.dims) throw BadIndices("projection index out of range");
        if (t > 0 && indices[t] <= indices[t - 1])
            throw BadIndices("projection indices must increase");
    }
    const int n = p.size();
    const auto pts = p.points();
    std::vector<std::vector<int>> rows(n, std::vector<int>(indices.size()));
    for (int i = 0; i < n; ++i)
        for (std::size_t t = 0; t < indices.size(); ++t) rows[i][t] = pts[i][indices[t]];
    std::sort(rows.begin(), rows.end());
    DPermutation out{static_cast<int>(indices.size()), {}};
    out.perms.assign(indices.size() - 1, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (std::size_t t = 1; t < indices.size(); ++t) out.perms[t - 1][i] = rows[i][t];
    return out;
}

namespace {

// Occurrence search on one projection: rows are the projected points sorted
// by their first coordinate, src maps a row to the ambient axis-0 index.
struct ProjectedMatch {
    const std::vector<std::vector<int>>& rows;
    const std::vector<int>& src;
    const DPermutation& pat;
    const std::vector<std::vector<int>>& adjacency;
    int k, dp, n;
    std::vector<int> chosen;

    bool adjacency_ok() const {
        for (int t = 0; t < dp; ++t) {
            if (adjacency[t].empty()) continue;
            std::vector<int> order(chosen.begin(), chosen.end());
            std::sort(order.begin(), order.end(),
                      [&](int a, int b) { return rows[a][t] < rows[b][t]; });
            for (int j : adjacency[t])
                if (std::abs(rows[order[j]][t] - rows[order[j - 1]][t]) != 1) return false;
        }
        return true;
    }

    bool search(int next_row, std::vector<int>* hit) {
        const int got = static_cast<int>(chosen.size());
        if (got == k) {
            if (!adjacency_ok()) return false;
            if (hit != nullptr)
                for (int r : chosen) hit->push_back(src[r]);
            return true;
        }
        for (int r = next_row; r <= n - (k - got); ++r) {
            bool ok = true;
            // incremental order-isomorphism against every already chosen row
            for (int t = 1; t < dp && ok; ++t) {
                const int pv = pat.perms[t - 1][got];
                for (int s = 0; s < got && ok; ++s)
                    ok = (rows[r][t] > rows[chosen[s]][t]) == (pv > pat.perms[t - 1][s]);
            }
            if (!ok) continue;
            chosen.push_back(r);
            if (search(r + 1, hit)) return true;
            chosen.pop_back();
        }
        return false;
    }
};

void increasing_tuples(int d, int dp, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> idx(dp);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        f(idx);
        int t = dp - 1;
        while (t >= 0 && idx[t] == d - dp + t) --t;
        if (t < 0) return;
        ++idx[t];
        for (int s = t + 1; s < dp; ++s) idx[s] = idx[s - 1] + 1;
    }
}

std::string pattern_key(const VincularPattern& vp) {
    std::ostringstream os;
    os << vp.to_string();
    return os.str();
}

}  // namespace

bool contains_vincular(const DPermutation& p, const VincularPattern& vp, Occurrence* witness) {
    const int dp = vp.pattern.dims;
    const int k = vp.pattern.size();
    if (dp > p.dims || k > p.size()) return false;

    const auto pts = p.points();
    const int n = p.size();
    bool found = false;
    increasing_tuples(p.dims, dp, [&](const std::vector<int>& axes) {
        if (found) return;
        std::vector<std::vector<int>> rows(n, std::vector<int>(dp));
        std::vector<int> src(n);
        for (int i = 0; i < n; ++i) {
            for (int t = 0; t < dp; ++t) rows[i][t] = pts[i][axes[t]];
            src[i] = i;
        }
        std::sort(src.begin(), src.end(),
                  [&](int a, int b) { return rows[a][0] < rows[b][0]; });
        std::vector<std::vector<int>> sorted_rows(n);
        for (int i = 0; i < n; ++i) sorted_rows[i] = rows[src[i]];

        ProjectedMatch m{sorted_rows, src, vp.pattern, vp.adjacency, k, dp, n, {}};
        std::vector<int> hit;
        if (m.search(0, witness != nullptr ? &hit : nullptr)) {
            found = true;
            if (witness != nullptr) {
                std::sort(hit.begin(), hit.end());
                *witness = Occurrence{axes, hit, vp};
            }
        }
    });
    return found;
}

bool contains(const DPermutation& p, const DPermutation& pattern) {
    VincularPattern vp{pattern, std::vector<std::vector<int>>(pattern.dims)};
    return contains_vincular(p, vp);
}

std::vector<VincularPattern> symmetry_closure(const VincularPattern& vp, int ambient_dims) {
    const int dp = vp.pattern.dims;
    if (dp > ambient_dims) throw BadIndices("pattern dimension exceeds the ambient dimension");
    const int k = vp.pattern.size();
    const auto base = vp.pattern.points();

    std::vector<int> tau(dp);
    std::iota(tau.begin(), tau.end(), 0);
    std::set<std::string> seen;
    std::vector<VincularPattern> out;
    do {
        for (int mask = 0; mask < (1 << dp); ++mask) {
            std::vector<std::vector<int>> pts(k, std::vector<int>(dp));
            for (int i = 0; i < k; ++i)
                for (int t = 0; t < dp; ++t) {
                    const int v = base[i][tau[t]];
                    pts[i][t] = (mask >> t) & 1 ? k - 1 - v : v;
                }
            std::sort(pts.begin(), pts.end());
            VincularPattern img;
            img.pattern.dims = dp;
            img.pattern.perms.assign(dp - 1, std::vector<int>(k));
            for (int i = 0; i < k; ++i)
                for (int t = 1; t < dp; ++t) img.pattern.perms[t - 1][i] = pts[i][t];
            img.adjacency.assign(dp, {});
            for (int t = 0; t < dp; ++t) {
                for (int j : vp.adjacency[tau[t]])
                    img.adjacency[t].push_back((mask >> t) & 1 ? k - j : j);
                std::sort(img.adjacency[t].begin(), img.adjacency[t].end());
            }
            if (seen.insert(pattern_key(img)).second) out.push_back(std::move(img));
        }
    } while (std::next_permutation(tau.begin(), tau.end()));
    std::sort(out.begin(), out.end(), [](const VincularPattern& a, const VincularPattern& b) {
        return pattern_key(a) < pattern_key(b);
    });
    return out;
}

namespace {

const std::vector<VincularPattern>& forbidden_3d() {
    static const std::vector<VincularPattern> pats = [] {
        VincularPattern sep;
        sep.pattern.dims = 3;
        sep.pattern.perms = {{2, 0, 1}, {1, 0, 2}};  // (312, 213), 0-based
        sep.adjacency.assign(3, {});
        return symmetry_closure(sep, 3);
    }();
    return pats;
}

const std::vector<VincularPattern>& forbidden_2d() {
    static const std::vector<VincularPattern> pats = [] {
        VincularPattern bax;
        bax.pattern.dims = 2;
        bax.pattern.perms = {{1, 3, 0, 2}};  // 2413, 0-based
        bax.adjacency = {{2}, {}};
        return symmetry_closure(bax, 2);
    }();
    return pats;
}

}  // namespace

bool is_in_F(const DPermutation& p, Occurrence* witness) {
    for (const VincularPattern& vp : forbidden_3d())
        if (contains_vincular(p, vp, witness)) return false;
    for (const VincularPattern& vp : forbidden_2d())
        if (contains_vincular(p, vp, witness)) return false;
    return true;
}

namespace {

bool separable_points(const std::vector<std::vector<int>>& pts) {
    const int n = static_cast<int>(pts.size());
    if (n == 1) return true;
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
        std::vector<std::vector<int>> p1, p2;
        for (int i = 0; i < n; ++i)
            ((mask >> i) & 1 ? p1 : p2).push_back(pts[i]);
        bool uniform = true;
        Direction want;
        for (std::size_t a = 0; a < p1.size() && uniform; ++a)
            for (std::size_t b = 0; b < p2.size() && uniform; ++b) {
                Direction d = direction_between(p1[a], p2[b]);
                if (want.signs.empty())
                    want = d;
                else
                    uniform = (d == want);
            }
        if (uniform && separable_points(p1) && separable_points(p2)) return true;
    }
    return false;
}

}  // namespace

bool is_separable(const DPermutation& p) {
    if (p.size() <= 1) return true;
    if (p.size() > 20) throw ResourceLimitError("separability test capped at n=20", 0);
    return separable_points(p.points());
}

bool is_baxter_2d(const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    for (int b = 0; b + 1 < n; ++b)
        for (int a = 0; a < b; ++a)
            for (int c = b + 2; c < n; ++c) {
                if (perm[b + 1] < perm[a] && perm[a] < perm[c] && perm[c] < perm[b]) return false;
                if (perm[b] < perm[c] && perm[c] < perm[a] && perm[a] < perm[b + 1]) return false;
            }
    return true;
}

std::uint64_t enumerate_class(int dims, int n, PermClass cls, int workers) {
    if (dims < 2 || n < 1) throw DomainError("enumerate_class needs dims >= 2 and n >= 1");
    std::uint64_t fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    double space = std::pow(static_cast<double>(fact), dims - 1);
    if (space > 5e8) throw ResourceLimitError("class enumeration space too large", 0);

    std::vector<std::vector<int>> all;
    all.reserve(fact);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        all.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    const int rows = dims - 1;
    const std::uint64_t total = [&] {
        std::uint64_t t = 1;
        for (int r = 0; r < rows; ++r) t *= fact;
        return t;
    }();

    workers = std::max(1, workers);
    std::vector<std::uint64_t> partial(workers, 0);
    auto run = [&](int w) {
        DPermutation p{dims, std::vector<std::vector<int>>(rows)};
        for (std::uint64_t code = w; code < total; code += workers) {
            std::uint64_t c = code;
            for (int r = 0; r < rows; ++r) {
                p.perms[r] = all[c % fact];
                c /= fact;
            }
            bool in = false;
            switch (cls) {
                case PermClass::F: in = is_in_F(p); break;
                case PermClass::Separable: in = is_separable(p); break;
                case PermClass::All: in = true; break;
            }
            if (in) ++partial[w];
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }
    std::uint64_t sum = 0;
    for (std::uint64_t c : partial) sum += c;
    return sum;
}

}  // namespace mosaic
