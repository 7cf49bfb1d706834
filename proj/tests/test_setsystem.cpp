#include <doctest.h>

#include <algorithm>
#include <functional>

#include "linemat/setsystem.hpp"

using namespace linemat;
using core::SetSystem;

namespace {

std::vector<std::vector<std::vector<int>>> block_subsets(const std::vector<std::vector<int>>& ground, int max_size) {
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<std::vector<int>> cur;
    std::function<void(size_t)> rec = [&](size_t start) {
        out.push_back(cur);
        if (static_cast<int>(cur.size()) == max_size) return;
        for (size_t i = start; i < ground.size(); ++i) {
            cur.push_back(ground[i]);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

// Minimal dependent collections, enumerated from scratch.
std::vector<std::vector<std::vector<int>>> hm_circuits(int n, int m) {
    const auto ground = core::all_subsets(m, n - 1);
    std::vector<std::vector<std::vector<int>>> circuits;
    for (const auto& cand : block_subsets(ground, n + 1)) {
        if (cand.empty()) continue;
        if (core::hm_is_independent(n, m, SetSystem(m, n - 1, cand))) continue;
        bool minimal = true;
        for (size_t skip = 0; skip < cand.size() && minimal; ++skip) {
            auto sub = cand;
            sub.erase(sub.begin() + static_cast<long>(skip));
            if (!core::hm_is_independent(n, m, SetSystem(m, n - 1, sub))) minimal = false;
        }
        if (minimal) circuits.push_back(cand);
    }
    return circuits;
}

} // namespace

TEST_CASE("hyperplane-line independence") {
    // Three blocks sharing the pair {1,4}: three lines inside a 2-flat.
    CHECK_FALSE(core::hm_is_independent(4, 5, SetSystem(5, 3, {{1, 2, 4}, {1, 3, 4}, {1, 4, 5}})));
    CHECK(core::hm_is_independent(4, 5, SetSystem(5, 3, {{1, 2, 4}, {2, 3, 4}, {1, 3, 5}})));
    CHECK(core::hm_is_independent(4, 5, SetSystem(5, 3, {{1, 2, 4}})));
    CHECK_FALSE(core::hm_is_independent(3, 4, SetSystem(4, 2, {{1, 2}, {1, 3}, {1, 4}, {2, 3}})));
    CHECK(core::hm_is_independent(3, 4, SetSystem(4, 2, {{1, 2}, {1, 3}, {2, 3}})));
    CHECK_THROWS_AS(core::hm_is_independent(4, 5, SetSystem(5, 2, {{1, 2}})), UsageError);
}

TEST_CASE("dilworth independence") {
    CHECK(core::dilworth_is_independent(5, 2, SetSystem(5, 2, {{1, 2}})));
    CHECK_FALSE(core::dilworth_is_independent(5, 2, SetSystem(5, 2, {{1, 2}, {2, 3}, {1, 3}})));
    // Level 2 on [m] is the graphic matroid of K_m: forests are independent.
    CHECK(core::dilworth_is_independent(5, 2, SetSystem(5, 2, {{1, 2}, {2, 3}, {3, 4}, {4, 5}})));
    CHECK_THROWS_AS(core::dilworth_is_independent(5, 3, SetSystem(5, 2, {{1, 2}})), UsageError);
}

TEST_CASE("circuit axioms for the hyperplane-line matroid") {
    for (auto [n, m] : {std::pair{3, 4}, {3, 5}, {4, 5}}) {
        auto circuits = hm_circuits(n, m);
        REQUIRE(!circuits.empty());
        // (C1) is enumeration-by-minimality; double-check anyway.
        for (const auto& c1 : circuits)
            for (const auto& c2 : circuits) {
                if (c1 == c2) continue;
                CHECK_FALSE(std::includes(c2.begin(), c2.end(), c1.begin(), c1.end()));
            }
        // (C2): shared element x, then C1 u C2 - x is dependent.
        for (const auto& c1 : circuits)
            for (const auto& c2 : circuits) {
                if (c1 == c2) continue;
                for (const auto& x : c1) {
                    if (!std::binary_search(c2.begin(), c2.end(), x)) continue;
                    std::vector<std::vector<int>> uni;
                    std::set_union(c1.begin(), c1.end(), c2.begin(), c2.end(), std::back_inserter(uni));
                    uni.erase(std::find(uni.begin(), uni.end(), x));
                    CHECK_FALSE(core::hm_is_independent(n, m, SetSystem(m, n - 1, uni)));
                }
            }
    }
}

TEST_CASE("complementation carries the hyperplane-line matroid onto the dilworth one") {
    for (auto [n, m] : {std::pair{3, 4}, {3, 5}}) {
        const int k = m - n + 1;
        const auto ground = core::all_subsets(m, n - 1);
        // Independence transfers block-wise through A <-> [m] - A...
        for (const auto& sub : block_subsets(ground, n + 1)) {
            if (sub.empty()) continue;
            SetSystem sys(m, n - 1, sub);
            CHECK(core::hm_is_independent(n, m, sys) ==
                  core::dilworth_is_independent(m, k, core::complement_blocks(sys)));
        }
        // ...so bases correspond to bases (both ranks equal n).
        int bases = 0;
        for (const auto& sub : block_subsets(ground, n)) {
            if (static_cast<int>(sub.size()) != n) continue;
            SetSystem sys(m, n - 1, sub);
            const bool hm_basis = core::hm_is_basis(n, m, sys);
            CHECK(hm_basis == core::dilworth_is_basis(m, k, core::complement_blocks(sys)));
            bases += hm_basis;
        }
        CHECK(bases > 0);
    }
}

TEST_CASE("hm rank by greedy") {
    // Stars have rank 2: all blocks share an element.
    CHECK(core::hm_rank(3, 4, SetSystem(4, 2, {{1, 2}, {1, 3}, {1, 4}})) == 2);
    CHECK(core::hm_rank(3, 4, SetSystem(4, 2, core::all_subsets(4, 2))) == 3);
}
