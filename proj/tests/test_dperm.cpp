#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "mosaic/dperm.hpp"
#include "mosaic/text_io.hpp"

using namespace mosaic;

namespace {

DPermutation dp(const std::string& compact) { return permutation_from_text(compact + "\n"); }

VincularPattern vinc(const std::string& compact, std::vector<std::vector<int>> adjacency) {
    VincularPattern vp{dp(compact), std::move(adjacency)};
    vp.adjacency.resize(vp.pattern.dims);
    return vp;
}

DPermutation random_dperm(std::mt19937& rng, int dims, int n) {
    DPermutation p{dims, {}};
    for (int t = 1; t < dims; ++t) {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        p.perms.push_back(std::move(perm));
    }
    return p;
}

// Independent orbit oracle: closure under the generating symmetries (swap of
// two adjacent axes, reversal of axis 0) instead of direct enumeration of
// the whole group.
std::set<std::string> generator_closure(const VincularPattern& start) {
    const int dims = start.pattern.dims;
    const int k = start.pattern.size();
    const auto apply = [&](const VincularPattern& vp, int kind) {
        // kind < dims-1: swap axes kind, kind+1; kind == dims-1: reverse axis 0
        auto pts = vp.pattern.points();
        std::vector<std::vector<int>> adj = vp.adjacency;
        if (kind < dims - 1) {
            for (auto& pt : pts) std::swap(pt[kind], pt[kind + 1]);
            std::swap(adj[kind], adj[kind + 1]);
        } else {
            for (auto& pt : pts) pt[0] = k - 1 - pt[0];
            for (int& j : adj[0]) j = k - j;
            std::sort(adj[0].begin(), adj[0].end());
        }
        std::sort(pts.begin(), pts.end());
        VincularPattern out;
        out.pattern.dims = dims;
        out.pattern.perms.assign(dims - 1, std::vector<int>(k));
        for (int i = 0; i < k; ++i)
            for (int t = 1; t < dims; ++t) out.pattern.perms[t - 1][i] = pts[i][t];
        out.adjacency = std::move(adj);
        return out;
    };
    std::set<std::string> seen{start.to_string()};
    std::vector<VincularPattern> queue{start};
    while (!queue.empty()) {
        const VincularPattern cur = queue.back();
        queue.pop_back();
        for (int kind = 0; kind < dims; ++kind) {
            VincularPattern next = apply(cur, kind);
            if (seen.insert(next.to_string()).second) queue.push_back(next);
        }
    }
    return seen;
}

}  // namespace

TEST_CASE("projection basics") {
    const DPermutation pi = dp("1432|3124");
    CHECK(project(pi, {1, 2}) == dp("3421"));
    CHECK(project(pi, {0, 1, 2}) == pi);
    CHECK(project(dp("12435|34125"), {0, 1}) == dp("12435"));
    CHECK_THROWS_AS(project(pi, {2, 1}), BadIndices);
    CHECK_THROWS_AS(project(pi, {0, 5}), BadIndices);
}

TEST_CASE("classical containment on the worked example") {
    const DPermutation pi = dp("1432|3124");
    CHECK(contains(pi, dp("132|213")));
    CHECK(contains(pi, dp("231")));
    CHECK(contains(pi, dp("1")));
    CHECK_FALSE(contains(pi, dp("123|123")));
}

TEST_CASE("vincular containment distinguishes adjacency placements") {
    const DPermutation pi = dp("1432|3124");
    // occurrence points 1,3,4: first coordinates 1,3 are not adjacent but
    // 3,4 are; occurrence points 1,2,4 has adjacent first coordinates 1,2.
    CHECK(contains_vincular(pi, vinc("132|213", {{2}, {1}})));
    CHECK(contains_vincular(pi, vinc("132|213", {{1}})));
    CHECK_FALSE(contains_vincular(pi, vinc("132|213", {{1}, {2}, {2}})));

    Occurrence occ;
    REQUIRE(contains_vincular(pi, vinc("132|213", {{2}, {1}}), &occ));
    CHECK(occ.points == std::vector<int>{0, 2, 3});
    CHECK(occ.axes == std::vector<int>{0, 1, 2});
}

TEST_CASE("empty adjacency reduces to classical containment") {
    std::mt19937 rng(7);
    const std::vector<DPermutation> pats{dp("2413"), dp("132|213"), dp("21|12")};
    for (int rep = 0; rep < 60; ++rep) {
        const DPermutation p = random_dperm(rng, 3, 6);
        for (const DPermutation& pat : pats) {
            VincularPattern vp{pat, std::vector<std::vector<int>>(pat.dims)};
            CHECK(contains_vincular(p, vp) == contains(p, pat));
        }
    }
}

TEST_CASE("containment is monotone under direct projection") {
    std::mt19937 rng(11);
    for (int rep = 0; rep < 40; ++rep) {
        const DPermutation p = random_dperm(rng, 3, 5);
        const DPermutation pat = dp("231");
        bool via_proj = false;
        for (const auto& idx : {std::vector<int>{0, 1}, {0, 2}, {1, 2}})
            via_proj = via_proj || contains(project(p, idx), pat);
        if (via_proj) CHECK(contains(p, pat));
    }
}

TEST_CASE("symmetry closure of 2413") {
    const auto orbit = symmetry_closure(vinc("2413", {}), 2);
    bool has_3142 = false;
    for (const VincularPattern& vp : orbit)
        if (vp.pattern == dp("3142") && vp.adjacency[0].empty() && vp.adjacency[1].empty())
            has_3142 = true;
    CHECK(has_3142);
    CHECK(8 % orbit.size() == 0);  // divides the group order 2^2 * 2!
}

TEST_CASE("symmetry closure matches the generator-closure oracle") {
    const VincularPattern sep = vinc("312|213", {});
    const auto orbit = symmetry_closure(sep, 3);
    CHECK(orbit.size() == generator_closure(sep).size());
    CHECK(48 % orbit.size() == 0);

    const VincularPattern bax = vinc("2413", {{2}});
    const auto orbit2 = symmetry_closure(bax, 2);
    CHECK(orbit2.size() == generator_closure(bax).size());

    CHECK_THROWS_AS(symmetry_closure(sep, 2), BadIndices);
}

TEST_CASE("symmetry closure is a fixed point of the group action") {
    const auto orbit = symmetry_closure(vinc("2413", {{2}}), 2);
    std::set<std::string> keys;
    for (const VincularPattern& vp : orbit) keys.insert(vp.to_string());
    for (const VincularPattern& vp : orbit) {
        std::set<std::string> again;
        for (const VincularPattern& w : symmetry_closure(vp, 2)) again.insert(w.to_string());
        CHECK(again == keys);
    }
}

TEST_CASE("class F membership on small permutations") {
    CHECK(is_in_F(dp("1")));
    CHECK(is_in_F(dp("12")));
    CHECK(is_in_F(dp("21|21")));
    CHECK_FALSE(is_in_F(dp("2413")));
    CHECK_FALSE(is_in_F(dp("3142")));
    CHECK(is_in_F(dp("2143")));

    Occurrence occ;
    CHECK_FALSE(is_in_F(dp("2413"), &occ));
    CHECK(occ.points.size() == 4);
}

TEST_CASE("every vincular Baxter occurrence witnesses exclusion from F") {
    std::mt19937 rng(23);
    const VincularPattern bax = vinc("2413", {{2}});
    for (int rep = 0; rep < 80; ++rep) {
        const DPermutation p = random_dperm(rng, 3, 5);
        if (contains_vincular(p, bax)) CHECK_FALSE(is_in_F(p));
    }
}

TEST_CASE("F counts match the table columns at unit-test scale") {
    const std::vector<std::uint64_t> want2{1, 2, 6, 22, 92};
    for (int n = 1; n <= 5; ++n) CHECK(enumerate_class(2, n, PermClass::F) == want2[n - 1]);
    const std::vector<std::uint64_t> want3{1, 4, 28, 244};
    for (int n = 1; n <= 4; ++n) CHECK(enumerate_class(3, n, PermClass::F) == want3[n - 1]);
    CHECK(enumerate_class(4, 1, PermClass::F) == 1);
    CHECK(enumerate_class(3, 3, PermClass::All) == 36);
}

TEST_CASE("enumerate_class is worker-count independent") {
    CHECK(enumerate_class(3, 4, PermClass::F, 4) == enumerate_class(3, 4, PermClass::F, 1));
}

TEST_CASE("F at d=2 equals the classical Baxter test") {
    for (int n = 1; n <= 7; ++n) {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            const DPermutation p{2, {perm}};
            CHECK(is_in_F(p) == is_baxter_2d(perm));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

TEST_CASE("separability") {
    CHECK(is_separable(dp("1")));
    CHECK(is_separable(dp("12|12")));
    CHECK_FALSE(is_separable(dp("2413")));
    CHECK(is_separable(dp("213|213")));

    // separable <=> avoids Sym(2413) and Sym(312|213), over all 3-perms n<=4
    const auto sym2413 = symmetry_closure(vinc("2413", {}), 3);
    const auto sym_sep = symmetry_closure(vinc("312|213", {}), 3);
    for (int n = 1; n <= 4; ++n) {
        std::vector<int> a(n), b(n);
        std::iota(a.begin(), a.end(), 0);
        do {
            std::iota(b.begin(), b.end(), 0);
            do {
                const DPermutation p{3, {a, b}};
                bool avoids = true;
                for (const auto& vp : sym2413) avoids = avoids && !contains_vincular(p, vp);
                for (const auto& vp : sym_sep) avoids = avoids && !contains_vincular(p, vp);
                CHECK(is_separable(p) == avoids);
            } while (std::next_permutation(b.begin(), b.end()));
        } while (std::next_permutation(a.begin(), a.end()));
    }
}

TEST_CASE("separable counts are the Schroeder numbers") {
    const std::vector<std::uint64_t> schroeder{1, 2, 6, 22, 90};
    for (int n = 1; n <= 5; ++n)
        CHECK(enumerate_class(2, n, PermClass::Separable) == schroeder[n - 1]);
}
