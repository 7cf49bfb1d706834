#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "linemat/matroid.hpp"
#include "linemat/tiling.hpp"

using namespace linemat;
using core::GroundSet;
using core::LatticePoint;
using core::PointSet;
using tiling::HoleyTriangle;
using tiling::RhombusTiling;

namespace {

std::vector<PointSet> all_hole_sets(const GroundSet& g) {
    std::vector<PointSet> out;
    std::vector<LatticePoint> cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == g.n()) {
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

} // namespace

TEST_CASE("coordinate conversion is involutive") {
    for (int n = 1; n <= 5; ++n)
        for (int r = 1; r <= n; ++r)
            for (int j = 1; j <= r; ++j) {
                auto p = tiling::up_to_point(n, r, j);
                auto [r2, j2] = tiling::point_to_up(n, p);
                CHECK(r2 == r);
                CHECK(j2 == j);
            }
}

TEST_CASE("tileability worked examples") {
    GroundSet g2(2, 3);
    CHECK(tiling::is_tileable(tiling::make_holey(g2, PointSet(g2, {{1, 0, 0}, {0, 1, 0}}))));

    GroundSet g3(3, 3);
    CHECK_FALSE(tiling::is_tileable(tiling::make_holey(g3, PointSet(g3, {{2, 0, 0}, {1, 1, 0}, {1, 0, 1}}))));

    GroundSet g1(1, 3);
    HoleyTriangle all_hole = tiling::make_holey(g1, PointSet(g1, {{0, 0, 0}}));
    CHECK(tiling::is_tileable(all_hole));
    auto t = tiling::find_tiling(all_hole);
    REQUIRE(t.has_value());
    CHECK(t->tiles.empty());

    CHECK_THROWS_AS(tiling::make_holey(g3, PointSet(g3, {{2, 0, 0}})), UsageError);
}

TEST_CASE("three single-rhombus tilings at n = 2") {
    GroundSet g(2, 3);
    int tileable = 0;
    std::set<std::vector<tiling::Tile>> distinct;
    for (const auto& holes : all_hole_sets(g)) {
        auto h = tiling::make_holey(g, holes);
        auto t = tiling::find_tiling(h);
        if (t) {
            ++tileable;
            CHECK(t->tiles.size() == 1);
            CHECK(tiling::tiling_covers(h, *t));
            distinct.insert(t->tiles);
        }
    }
    CHECK(tileable == 3);
    CHECK(distinct.size() == 3);
}

TEST_CASE("tileable iff basis, and produced tilings cover (n <= 4)") {
    for (int n = 2; n <= 4; ++n) {
        GroundSet g(n, 3);
        for (const auto& holes : all_hole_sets(g)) {
            auto h = tiling::make_holey(g, holes);
            const bool basis = core::is_basis(g, holes);
            CHECK(tiling::is_tileable(h) == basis);
            auto t = tiling::find_tiling(h);
            CHECK(t.has_value() == basis);
            if (t) CHECK(tiling::tiling_covers(h, *t));
        }
    }
}

TEST_CASE("sliding constructor agrees with matching on existence and validates") {
    for (int n = 1; n <= 4; ++n) {
        GroundSet g(n, 3);
        for (const auto& holes : all_hole_sets(g)) {
            auto h = tiling::make_holey(g, holes);
            if (core::is_basis(g, holes)) {
                auto t = tiling::find_tiling_by_sliding(h);
                REQUIRE(t.has_value());
                CHECK(tiling::tiling_covers(h, *t));
            } else {
                CHECK_THROWS_AS(tiling::find_tiling_by_sliding(h), UsageError);
            }
        }
    }
}

TEST_CASE("single bottom hole forces the bottom row") {
    GroundSet g(3, 3);
    // Holes: one in the bottom row, two above it.
    PointSet holes(g, {{0, 1, 1}, {1, 1, 0}, {2, 0, 0}});
    REQUIRE(core::is_basis(g, holes));
    auto t = tiling::find_tiling_by_sliding(tiling::make_holey(g, holes));
    REQUIRE(t.has_value());
    // Bottom row: up(3,1) right-pairs, up(3,3) left-pairs around the hole at (3,2).
    CHECK(std::count(t->tiles.begin(), t->tiles.end(), tiling::Tile{{0, 2, 0}, tiling::DownDir::Right}) == 1);
    CHECK(std::count(t->tiles.begin(), t->tiles.end(), tiling::Tile{{0, 0, 2}, tiling::DownDir::Left}) == 1);
}

TEST_CASE("tiling <-> routing bijection") {
    // n = 2: the three tilings map onto the three routings.
    GroundSet g2(2, 3);
    lgv::PathGraph pg2(2, lgv::WeightMode::RandomInteger, 3);
    for (const auto& holes : all_hole_sets(g2)) {
        auto h = tiling::make_holey(g2, holes);
        auto t = tiling::find_tiling(h);
        if (!t) continue;
        auto routing = tiling::tiling_to_routing(h, *t);
        std::vector<LatticePoint> sources;
        for (const auto& p : routing.paths) sources.push_back(p.front());
        std::sort(sources.begin(), sources.end());
        CHECK(sources == holes.members());
        CHECK(tiling::routing_to_tiling(h.n, routing).tiles == t->tiles);
    }

    // Round-trip on every tiling produced for every basis, n <= 4.
    for (int n = 2; n <= 4; ++n) {
        GroundSet g(n, 3);
        for (const auto& holes : all_hole_sets(g)) {
            if (!core::is_basis(g, holes)) continue;
            auto h = tiling::make_holey(g, holes);
            for (auto t : {tiling::find_tiling(h), tiling::find_tiling_by_sliding(h)}) {
                REQUIRE(t.has_value());
                auto routing = tiling::tiling_to_routing(h, *t);
                std::vector<LatticePoint> sources;
                for (const auto& p : routing.paths) {
                    sources.push_back(p.front());
                    CHECK(p.back()[0] == 0);
                }
                std::sort(sources.begin(), sources.end());
                CHECK(sources == holes.members());
                CHECK(tiling::routing_to_tiling(n, routing).tiles == t->tiles);
            }
        }
    }
}

TEST_CASE("routing -> tiling -> routing closes the loop") {
    GroundSet g(4, 3);
    lgv::PathGraph pg(4, lgv::WeightMode::RandomInteger, 8);
    for (const auto& holes : all_hole_sets(g)) {
        if (!core::is_basis(g, holes)) continue;
        auto routing = lgv::routing_exists(pg, holes);
        REQUIRE(routing.has_value());
        auto t = tiling::routing_to_tiling(4, *routing);
        auto h = tiling::make_holey(g, holes);
        CHECK(tiling::tiling_covers(h, t));
        auto back = tiling::tiling_to_routing(h, t);
        // Same path set (orderings may differ: compare sorted).
        auto norm = [](lgv::Routing r) {
            std::sort(r.paths.begin(), r.paths.end());
            return r.paths;
        };
        CHECK(norm(*routing) == norm(back));
    }
}

TEST_CASE("renderers are deterministic and count elements") {
    GroundSet g(4, 3);
    PointSet holes(g, {{3, 0, 0}, {0, 2, 1}, {0, 1, 2}, {1, 1, 1}});
    REQUIRE(core::is_basis(g, holes));
    auto h = tiling::make_holey(g, holes);
    auto t = tiling::find_tiling(h);
    REQUIRE(t.has_value());

    auto svg = tiling::render_svg(h, t);
    size_t rhombi = 0, hole_polys = 0, pos = 0;
    while ((pos = svg.find("class=\"rhombus\"", pos)) != std::string::npos) { ++rhombi; pos += 10; }
    pos = 0;
    while ((pos = svg.find("class=\"hole\"", pos)) != std::string::npos) { ++hole_polys; pos += 10; }
    CHECK(rhombi == 6);     // n(n-1)/2 downward triangles
    CHECK(hole_polys == 4); // n holes
    CHECK(svg == tiling::render_svg(h, t));

    auto ascii = tiling::render_ascii(h, t);
    CHECK(ascii == tiling::render_ascii(h, t));
    CHECK(std::count(ascii.begin(), ascii.end(), '#') == 4);
    CHECK(std::count(ascii.begin(), ascii.end(), '\n') == 4);

    // Holes-only SVG: one hatched triangle at n = 1.
    GroundSet g1(1, 3);
    auto h1 = tiling::make_holey(g1, PointSet(g1, {{0, 0, 0}}));
    auto svg1 = tiling::render_svg(h1, std::nullopt);
    CHECK(svg1.find("class=\"hole\"") != std::string::npos);
    CHECK(svg1.find("hatch") != std::string::npos);
}
