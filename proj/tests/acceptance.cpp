// Acceptance suite: one criterion per section, one PASS/FAIL line each,
// non-zero exit code when anything fails. Everything is exact (integer
// counts, exact signature equality); there are no tolerances to tune.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "mosaic/bijection.hpp"
#include "mosaic/dperm.hpp"
#include "mosaic/gentree.hpp"
#include "mosaic/geometry.hpp"
#include "mosaic/text_io.hpp"

using namespace mosaic;

namespace {

int failures = 0;

void report(int criterion, const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << criterion << ": " << name;
    if (!detail.empty()) std::cout << "  (" << detail << ")";
    std::cout << std::endl;
    if (!ok) ++failures;
}

std::string join(const std::vector<std::uint64_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

Relation peel_as_relation(const Floorplan& fp, const Corner& q) {
    Relation po(fp.block_count(), true);
    const std::vector<int> order = peel(fp, q);
    for (std::size_t r = 0; r < order.size(); ++r)
        for (std::size_t s = r + 1; s < order.size(); ++s) po.set(order[r], order[s]);
    return po;
}

// ---- criterion 1: exact reproduction of the level counts ----
void criterion_1() {
    const std::vector<std::pair<int, std::vector<std::uint64_t>>> table = {
        {2, {1, 2, 6, 22, 92, 422, 2074, 10754, 58202, 326240}},
        {3, {1, 3, 15, 93, 651, 4917, 39111, 322941}},
        {4, {1, 4, 28, 244, 2392, 25204}},
        {5, {1, 5, 45, 505, 6365}},
    };
    for (const auto& [d, want] : table) {
        const auto got = count_by_level(d, static_cast<int>(want.size()));
        report(1, "level counts d=" + std::to_string(d), got == want,
               got == want ? join(got) : "got " + join(got) + " want " + join(want));
    }
}

// ---- criterion 2: label tree isomorphic to the geometric tree ----
void criterion_2() {
    for (int d = 2; d <= 3; ++d) {
        bool ok = true;
        std::function<void(const Floorplan&, const Label&, int)> rec =
            [&](const Floorplan& fp, const Label& lab, int depth) {
                if (!ok) return;
                if (label_of(fp) != lab) {
                    ok = false;
                    return;
                }
                if (depth == 5) return;
                const auto pcs = pushable_corners(fp);
                if (pcs.size() != lab.size()) {
                    ok = false;
                    return;
                }
                for (std::size_t k = 0; k < pcs.size(); ++k)
                    rec(insert_block(fp, pcs[k]), rewrite(lab, lab.vectors[k]), depth + 1);
            };
        rec(single_block(d), Label::root(d), 1);
        report(2, "tree isomorphism d=" + std::to_string(d) + " n<=5", ok);
    }
}

// ---- criterion 3: bijection round trips ----
void criterion_3() {
    {
        bool ok = true;
        std::size_t total = 0;
        for (int n = 1; n <= 6 && ok; ++n)
            for (const Floorplan& fp : enumerate_floorplans(2, n)) {
                ++total;
                if (!roundtrip_check(fp)) {
                    ok = false;
                    break;
                }
            }
        report(3, "2-floorplan round trip n<=6", ok, std::to_string(total) + " plans");
    }
    {
        bool ok = true;
        std::size_t total = 0;
        for (int n = 1; n <= 5 && ok; ++n)
            for (const Floorplan& fp : enumerate_floorplans(4, n)) {
                ++total;
                if (!roundtrip_check(fp)) {
                    ok = false;
                    break;
                }
            }
        report(3, "4-floorplan round trip n<=5", ok, std::to_string(total) + " plans");
    }
    {
        bool ok = true;
        std::size_t total = 0;
        for (int n = 1; n <= 6 && ok; ++n) {
            std::vector<int> perm(n);
            for (int i = 0; i < n; ++i) perm[i] = i;
            do {
                const DPermutation p{2, {perm}};
                if (!is_in_F(p)) continue;
                ++total;
                if (!roundtrip_check(p)) {
                    ok = false;
                    break;
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
        report(3, "permutation round trip F^1 n<=6", ok, std::to_string(total) + " perms");
    }
    {
        bool ok = true;
        std::size_t total = 0;
        for (int n = 1; n <= 4 && ok; ++n) {
            std::vector<int> a(n), b(n);
            for (int i = 0; i < n; ++i) a[i] = i;
            do {
                for (int i = 0; i < n; ++i) b[i] = i;
                do {
                    const DPermutation p{3, {a, b}};
                    if (!is_in_F(p)) continue;
                    ++total;
                    if (!roundtrip_check(p)) ok = false;
                } while (ok && std::next_permutation(b.begin(), b.end()));
            } while (ok && std::next_permutation(a.begin(), a.end()));
        }
        report(3, "permutation round trip F^2 n<=4", ok, std::to_string(total) + " perms");
    }
}

// ---- criterion 4: brute-force class counts against the table ----
void criterion_4() {
    const std::vector<std::uint64_t> want2{1, 2, 6, 22, 92, 422};
    std::vector<std::uint64_t> got2;
    for (int n = 1; n <= 6; ++n) got2.push_back(enumerate_class(2, n, PermClass::F));
    report(4, "brute-force |F^1_n| n<=6", got2 == want2, join(got2));

    const std::vector<std::uint64_t> want3{1, 4, 28, 244, 2392};
    std::vector<std::uint64_t> got3;
    for (int n = 1; n <= 5; ++n) got3.push_back(enumerate_class(3, n, PermClass::F));
    report(4, "brute-force |F^2_n| n<=5", got3 == want3, join(got3));
}

// ---- criterion 5: duality lemmas over the criterion-3 ranges ----
void criterion_5() {
    bool unique_axis = true;   // one axis relates each pair
    bool peel_union = true;    // peel order = union of compatible relations
    bool recover = true;       // relation = intersection of signed canonical peels
    bool del_preserve = true;  // deletion preserves survivor relations
    bool axis_disagree = true; // agreeing vs disagreeing pairs use distinct axes

    const auto run_range = [&](int D, int dims, int nmax) {
        const auto corners = canonical_corners(dims).corners;
        for (int n = 1; n <= nmax; ++n)
            for (const Floorplan& fp : enumerate_floorplans(D, n)) {
                const auto rel = direction_relations(fp);
                const int nb = fp.block_count();

                for (int a = 0; a < nb; ++a)
                    for (int b = a + 1; b < nb; ++b) {
                        int axes = 0;
                        for (int j = 0; j < D; ++j)
                            if (rel.rel[j].get(a, b) || rel.rel[j].get(b, a)) ++axes;
                        if (axes != 1) unique_axis = false;
                    }

                std::vector<Relation> canon_peels;
                for (const Corner& q : corners) canon_peels.push_back(peel_as_relation(fp, q));

                // peel = union at every bounding-box corner
                for (int c = 0; c < (1 << D); ++c) {
                    Corner q{std::vector<std::uint8_t>(D)};
                    for (int j = 0; j < D; ++j) q.max_side[j] = (c >> j) & 1;
                    const Relation po = peel_as_relation(fp, q);
                    Relation uni(nb, true);
                    for (int j = 0; j < D; ++j)
                        uni = uni | (q.max_side[j] ? rel.rel[j].reversed() : rel.rel[j]);
                    if (!(uni == po)) peel_union = false;
                }

                // relation = intersection of all signed canonical peels
                for (int axis = 0; axis < D; ++axis) {
                    const Direction dir = direction_for_axis(axis, dims);
                    Relation inter(nb, true);
                    bool first = true;
                    for (int i = 0; i < dims; ++i) {
                        const Relation side =
                            dir.signs[i] > 0 ? canon_peels[i] : canon_peels[i].reversed();
                        inter = first ? side : (inter & side);
                        first = false;
                    }
                    if (!(inter == rel.rel[axis])) recover = false;
                }

                // agreement under two canonical peels forces distinct axes
                const auto axis_of_pair = [&](int a, int b) {
                    for (int j = 0; j < D; ++j)
                        if (rel.rel[j].get(a, b) || rel.rel[j].get(b, a)) return j;
                    return -1;
                };
                for (int a = 0; a < nb; ++a)
                    for (int b = 0; b < nb; ++b)
                        for (int c = 0; c < nb; ++c)
                            for (int e = 0; e < nb; ++e) {
                                if (a == b || c == e) continue;
                                if (canon_peels[0].get(a, b) && canon_peels[1].get(a, b) &&
                                    canon_peels[0].get(c, e) && canon_peels[1].get(e, c) &&
                                    axis_of_pair(a, b) == axis_of_pair(c, e))
                                    axis_disagree = false;
                            }

                // deletion at every corner preserves survivor relations
                if (nb >= 2)
                    for (int c = 0; c < (1 << D); ++c) {
                        Corner q{std::vector<std::uint8_t>(D)};
                        for (int j = 0; j < D; ++j) q.max_side[j] = (c >> j) & 1;
                        int removed = -1;
                        const Floorplan after = delete_block(fp, q, &removed);
                        std::vector<int> keep;
                        for (int i = 0; i < nb; ++i)
                            if (i != removed) keep.push_back(i);
                        const auto rel2 = direction_relations(after);
                        for (int j = 0; j < D; ++j)
                            for (std::size_t x = 0; x < keep.size(); ++x)
                                for (std::size_t y = 0; y < keep.size(); ++y)
                                    if (rel2.rel[j].get(static_cast<int>(x),
                                                        static_cast<int>(y)) !=
                                        rel.rel[j].get(keep[x], keep[y]))
                                        del_preserve = false;
                    }
            }
    };
    run_range(2, 2, 6);
    run_range(4, 3, 5);

    report(5, "unique relating axis (pairs)", unique_axis);
    report(5, "peel equals union of compatible relations", peel_union);
    report(5, "relation equals intersection of signed canonical peels", recover);
    report(5, "deletion preserves survivor relations", del_preserve);
    report(5, "agree/disagree pairs use distinct axes", axis_disagree);
}

// ---- criterion 6: guillotine <=> separable through phi ----
void criterion_6() {
    bool ok2 = true;
    for (int n = 1; n <= 5 && ok2; ++n)
        for (const Floorplan& fp : enumerate_floorplans(2, n))
            if (is_guillotine(fp) != is_separable(phi(fp))) {
                ok2 = false;
                break;
            }
    report(6, "guillotine <=> separable, 2-floorplans n<=5", ok2);

    bool ok4 = true;
    for (int n = 1; n <= 4 && ok4; ++n)
        for (const Floorplan& fp : enumerate_floorplans(4, n))
            if (is_guillotine(fp) != is_separable(phi(fp))) {
                ok4 = false;
                break;
            }
    report(6, "guillotine <=> separable, 4-floorplans n<=4", ok4);
}

// ---- criterion 7: named fixtures ----
void criterion_7() {
    const Floorplan bax7 = Floorplan::validate(
        2, Box{{0, 0}, {4, 4}},
        {Box{{0, 0}, {1, 1}}, Box{{1, 0}, {3, 1}}, Box{{0, 1}, {2, 4}}, Box{{2, 1}, {3, 3}},
         Box{{3, 0}, {4, 2}}, Box{{3, 2}, {4, 3}}, Box{{2, 3}, {4, 4}}});
    const DPermutation bax = permutation_from_text("4513762");
    report(7, "phi(BAX7) = 4513762", phi(bax7) == bax);
    report(7, "BAX7 is the d-perm2FP image of 4513762",
           canonical_signature(dperm_to_floorplan(bax)) == canonical_signature(bax7));

    const Floorplan fp3 = Floorplan::validate(
        3, Box{{0, 0, 0}, {3, 2, 2}},
        {Box{{0, 0, 0}, {1, 1, 2}}, Box{{1, 0, 0}, {2, 1, 2}}, Box{{0, 1, 0}, {2, 2, 1}},
         Box{{0, 1, 1}, {2, 2, 2}}, Box{{2, 0, 0}, {3, 2, 2}}});
    report(7, "phi(FP3 lifted) = (12435, 34125)",
           phi(fp3) == permutation_from_text("12435|34125"));

    Floorplan fig = single_block(3);
    for (int k : {0, 0, 0, 1, 4, 6}) fig = insert_block(fig, pushable_corners(fig)[k]);
    report(7, "nine-vector label of the insertion-figure plan",
           label_of(fig).key() == ".,0,0;.,1,0;.,1,1;.,1,2;0,.,0;0,.,1;0,.,2;0,0,.;0,1,.");
}

}  // namespace

int main() {
    const auto t0 = std::chrono::steady_clock::now();
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    const auto dt =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
    std::cout << (failures == 0 ? "ALL CRITERIA PASS" : "FAILURES: " + std::to_string(failures))
              << "  (" << dt.count() << " ms)" << std::endl;
    return failures == 0 ? 0 : 1;
}
