#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "linemat/matroid.hpp"
#include "linemat/rng.hpp"

using namespace linemat;
using core::GroundSet;
using core::LatticePoint;
using core::PointSet;
using core::SubSimplex;

namespace {

// Definitional oracle: scan every translate of every size, no shortcuts.
// Kept independent of the library's min-closure fast path.
bool naive_independent(const GroundSet& g, const PointSet& s) {
    const int n = g.n(), d = g.d();
    std::vector<std::vector<int>> anchors;
    std::function<void(std::vector<int>&, int, int)> gen = [&](std::vector<int>& cur, int left, int pos) {
        if (pos == d - 1) {
            cur.push_back(left);
            anchors.push_back(cur);
            cur.pop_back();
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur.push_back(v);
            gen(cur, left - v, pos + 1);
            cur.pop_back();
        }
    };
    for (int k = 1; k <= n; ++k) {
        anchors.clear();
        std::vector<int> cur;
        gen(cur, n - k, 0);
        for (const auto& anchor : anchors) {
            int count = 0;
            for (const auto& p : s.members()) {
                bool inside = true;
                for (int i = 0; i < d; ++i)
                    if (p[i] < anchor[i]) { inside = false; break; }
                count += inside;
            }
            if (count > k) return false;
        }
    }
    return true;
}

std::vector<PointSet> all_subsets_of_size(const GroundSet& g, int k) {
    std::vector<PointSet> out;
    std::vector<LatticePoint> cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == k) {
            out.emplace_back(g, cur);
            return;
        }
        for (int i = start; i < g.size(); ++i) {
            cur.push_back(g.points()[i]);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

std::vector<PointSet> all_independent_sets(const GroundSet& g) {
    std::vector<PointSet> out;
    for (int k = 0; k <= g.n(); ++k)
        for (const auto& s : all_subsets_of_size(g, k))
            if (core::is_independent(g, s)) out.push_back(s);
    return out;
}

PointSet random_subset(const GroundSet& g, std::mt19937_64& rng) {
    std::vector<LatticePoint> pts;
    for (const auto& p : g.points())
        if (uniform_below(rng, 2)) pts.push_back(p);
    return PointSet(g, pts);
}

} // namespace

TEST_CASE("ground set enumeration") {
    CHECK(GroundSet(4, 3).size() == 10);
    GroundSet tiny(1, 3);
    REQUIRE(tiny.size() == 1);
    CHECK(tiny.points()[0] == LatticePoint{0, 0, 0});
    CHECK(GroundSet(5, 4).size() == 35);
    CHECK_THROWS_AS(GroundSet(0, 3), UsageError);
    CHECK_THROWS_AS(GroundSet(3, 1), UsageError);
    CHECK_THROWS_AS(GroundSet(2000, 3), BudgetExceeded);
    // Canonical order is lexicographic.
    GroundSet g(3, 3);
    CHECK(std::is_sorted(g.points().begin(), g.points().end()));
}

TEST_CASE("independence: worked examples") {
    GroundSet g(4, 3);
    PointSet dependent(g, {{3, 0, 0}, {2, 1, 0}, {1, 2, 0}, {1, 1, 1}});
    CHECK_FALSE(core::is_independent(g, dependent));
    CHECK(core::is_independent(g, PointSet(g, {})));
    CHECK_THROWS_AS(core::is_independent(g, PointSet(g, {{4, 0, 0}})), UsageError);

    // All 3-subsets of T_{3,3}: exactly 17 independent, and the 3 dependent
    // ones are the point sets of the size-2 translates.
    GroundSet g3(3, 3);
    int independent = 0;
    std::vector<PointSet> dependents;
    for (const auto& s : all_subsets_of_size(g3, 3)) {
        if (core::is_independent(g3, s))
            ++independent;
        else
            dependents.push_back(s);
    }
    CHECK(independent == 17);
    REQUIRE(dependents.size() == 3);
    for (const auto& s : dependents) {
        auto v = core::find_violation(g3, s);
        REQUIRE(v.has_value());
        CHECK(v->size == 2);
        CHECK(core::points_in(g3, *v) == s.members());
    }
}

TEST_CASE("fast path agrees with the definitional oracle") {
    for (auto [n, d] : {std::pair{2, 3}, {3, 3}, {4, 3}, {2, 4}, {3, 4}}) {
        GroundSet g(n, d);
        std::mt19937_64 rng(derive_seed(42, n * 10 + d));
        for (int trial = 0; trial < 200; ++trial) {
            PointSet s = random_subset(g, rng);
            CHECK(core::is_independent(g, s) == naive_independent(g, s));
            CHECK(core::is_independent(g, s) == !core::find_violation(g, s).has_value());
        }
    }
}

TEST_CASE("violation witness is canonical: smallest size, then lex-least anchor") {
    GroundSet g(4, 3);
    // Three of these points sit inside the size-2 translate at (1,1,0), which
    // beats the size-3 translate at (1,0,0) that holds all four.
    auto v = core::find_violation(g, PointSet(g, {{3, 0, 0}, {2, 1, 0}, {1, 2, 0}, {1, 1, 1}}));
    REQUIRE(v.has_value());
    CHECK(v->anchor == std::vector<int>{1, 1, 0});
    CHECK(v->size == 2);

    CHECK_FALSE(core::find_violation(g, PointSet(g, {})).has_value());

    GroundSet g2(2, 3);
    auto v2 = core::find_violation(g2, PointSet(g2, g2.points()));
    REQUIRE(v2.has_value());
    CHECK(v2->anchor == std::vector<int>{0, 0, 0});
    CHECK(v2->size == 2);
}

TEST_CASE("rank: worked examples") {
    GroundSet g(4, 3);
    auto six = core::points_in(g, core::make_subsimplex(g, {1, 0, 0}));
    REQUIRE(six.size() == 6);
    CHECK(core::rank(g, PointSet(g, six)) == 3);
    CHECK(core::rank(g, PointSet(g, {})) == 0);
    for (int n = 1; n <= 5; ++n) {
        GroundSet gn(n, 3);
        CHECK(core::rank(gn, PointSet(gn, gn.points())) == n);
    }
}

TEST_CASE("rank is monotone, submodular, and bounded") {
    for (int n = 2; n <= 4; ++n) {
        GroundSet g(n, 3);
        std::mt19937_64 rng(derive_seed(7, n));
        for (int trial = 0; trial < 60; ++trial) {
            PointSet a = random_subset(g, rng);
            PointSet b = random_subset(g, rng);
            std::vector<LatticePoint> uni = a.members(), inter;
            for (const auto& p : b.members()) {
                uni.push_back(p);
                if (a.contains(p)) inter.push_back(p);
            }
            PointSet u(g, uni), i(g, inter);
            const int ra = core::rank(g, a), rb = core::rank(g, b);
            CHECK(ra <= std::min(a.size(), n));
            if (std::includes(b.members().begin(), b.members().end(), a.members().begin(), a.members().end()))
                CHECK(ra <= rb);
            CHECK(core::rank(g, u) + core::rank(g, i) <= ra + rb);
        }
    }
}

TEST_CASE("exchange axiom holds exhaustively at desk scale") {
    for (auto [n, d] : {std::pair{2, 3}, {3, 3}, {4, 3}, {2, 4}, {3, 4}}) {
        GroundSet g(n, d);
        auto indep = all_independent_sets(g);
        for (const auto& i : indep)
            for (const auto& j : indep) {
                if (i.size() >= j.size()) continue;
                bool extended = false;
                for (const auto& e : j.members()) {
                    if (i.contains(e)) continue;
                    auto aug = i.members();
                    aug.push_back(e);
                    if (core::is_independent(g, PointSet(g, aug))) { extended = true; break; }
                }
                CHECK(extended);
            }
    }
}

TEST_CASE("basis predicates and enumeration") {
    GroundSet g2(2, 3);
    CHECK(core::enumerate_bases(g2).size() == 3);
    GroundSet g3(3, 3);
    auto bases = core::enumerate_bases(g3);
    CHECK(bases.size() == 17);
    for (const auto& b : bases) CHECK(core::is_basis(g3, b));
    CHECK(std::is_sorted(bases.begin(), bases.end(),
                         [](const PointSet& a, const PointSet& b) { return a.members() < b.members(); }));
    GroundSet g1(1, 5);
    auto one = core::enumerate_bases(g1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].members() == g1.points());

    CHECK_THROWS_AS(core::enumerate_bases(GroundSet(4, 3), 5), BudgetExceeded);

    // Worker split preserves the canonical order.
    GroundSet g4(4, 3);
    auto serial = core::enumerate_bases(g4);
    auto parallel = core::enumerate_bases(g4, 10'000'000, 4);
    REQUIRE(serial.size() == parallel.size());
    for (size_t i = 0; i < serial.size(); ++i) CHECK(serial[i].members() == parallel[i].members());
}

TEST_CASE("meet and join of translates") {
    GroundSet g(4, 3);
    SubSimplex t = core::make_subsimplex(g, {1, 0, 0});
    auto [meet_tt, join_tt] = core::meet_join(g, t, t);
    CHECK(meet_tt == t);
    CHECK(join_tt == t);

    SubSimplex u = core::make_subsimplex(g, {0, 1, 0});
    auto [meet, join] = core::meet_join(g, t, u);
    CHECK(meet.anchor == std::vector<int>{1, 1, 0});
    CHECK(meet.size == 2);
    CHECK(join.anchor == std::vector<int>{0, 0, 0});
    CHECK(join.size == 4);
    CHECK(meet.size + join.size == t.size + u.size);

    SubSimplex far1 = core::make_subsimplex(g, {3, 0, 0});
    SubSimplex far2 = core::make_subsimplex(g, {0, 3, 0});
    CHECK_THROWS_AS(core::meet_join(g, far1, far2), UsageError);
}

TEST_CASE("saturated translates are closed under meet and join") {
    GroundSet g(4, 3);
    std::mt19937_64 rng(31337);
    // Every translate of size >= 1, i.e. every anchor with coordinate sum <= n-1.
    std::vector<SubSimplex> simplices;
    for (int a1 = 0; a1 <= 3; ++a1)
        for (int a2 = 0; a1 + a2 <= 3; ++a2)
            for (int a3 = 0; a1 + a2 + a3 <= 3; ++a3)
                simplices.push_back(core::make_subsimplex(g, {a1, a2, a3}));
    for (int trial = 0; trial < 100; ++trial) {
        PointSet s = random_subset(g, rng);
        if (!core::is_independent(g, s)) continue;
        auto saturated = [&](const SubSimplex& t) {
            int c = 0;
            for (const auto& p : s.members()) c += t.contains(p);
            return c == t.size;
        };
        for (const auto& a : simplices)
            for (const auto& b : simplices) {
                if (!saturated(a) || !saturated(b)) continue;
                std::vector<int> hi(3);
                for (int i = 0; i < 3; ++i) hi[i] = std::max(a.anchor[i], b.anchor[i]);
                if (4 - (hi[0] + hi[1] + hi[2]) < 0) continue;
                auto [meet, join] = core::meet_join(g, a, b);
                CHECK(meet.size + join.size == a.size + b.size);
                CHECK(saturated(meet));
                CHECK(saturated(join));
            }
    }
}
