#include "linemat/tiling.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>

#include "linemat/matroid.hpp"

namespace linemat::tiling {

core::LatticePoint up_to_point(int n, int r, int j) {
    return {n - r, r - j, j - 1};
}

std::pair<int, int> point_to_up(int n, const core::LatticePoint& p) {
    return {n - p[0], p[2] + 1};
}

namespace {

struct Down {
    int r, j; // r = 2..n, j = 1..r-1
    bool operator<(const Down& o) const { return r != o.r ? r < o.r : j < o.j; }
    bool operator==(const Down& o) const { return r == o.r && j == o.j; }
};

// Canonical order: top to bottom, left to right.
std::vector<Down> all_downs(int n) {
    std::vector<Down> out;
    for (int r = 2; r <= n; ++r)
        for (int j = 1; j <= r - 1; ++j) out.push_back({r, j});
    return out;
}

Down down_of(const Tile& t, int n) {
    auto [r, j] = point_to_up(n, t.up);
    switch (t.dir) {
        case DownDir::Left: return {r, j - 1};
        case DownDir::Right: return {r, j};
        case DownDir::Bottom: return {r + 1, j};
    }
    throw UsageError("tile: bad direction");
}

bool tile_in_range(const Tile& t, int n) {
    if (static_cast<int>(t.up.size()) != 3 || t.up[0] < 0 || t.up[1] < 0 || t.up[2] < 0 ||
        t.up[0] + t.up[1] + t.up[2] != n - 1)
        return false;
    auto [r, j] = point_to_up(n, t.up);
    Down d = down_of(t, n);
    return d.r >= 2 && d.r <= n && d.j >= 1 && d.j <= d.r - 1 && r >= 1 && r <= n;
}

} // namespace

HoleyTriangle make_holey(const core::GroundSet& g, const core::PointSet& holes, bool require_n_holes) {
    if (g.d() != 3) throw UsageError("holey triangle: ground set must have d = 3");
    if (require_n_holes && holes.size() != g.n())
        throw UsageError("holey triangle: need exactly n holes, got " + std::to_string(holes.size()));
    return HoleyTriangle{g.n(), holes};
}

bool tiling_covers(const HoleyTriangle& h, const RhombusTiling& t) {
    const int n = h.n;
    if (t.n != n) return false;
    std::map<core::LatticePoint, int> up_cover;
    std::map<Down, int> down_cover;
    for (const Tile& tile : t.tiles) {
        if (!tile_in_range(tile, n)) return false;
        up_cover[tile.up]++;
        down_cover[down_of(tile, n)]++;
    }
    for (int r = 1; r <= n; ++r)
        for (int j = 1; j <= r; ++j) {
            const auto p = up_to_point(n, r, j);
            const int want = h.holes.contains(p) ? 0 : 1;
            if ((up_cover.count(p) ? up_cover[p] : 0) != want) return false;
        }
    for (const Down& d : all_downs(n))
        if ((down_cover.count(d) ? down_cover[d] : 0) != 1) return false;
    return true;
}

namespace {

// Kuhn augmenting-path matching between downward triangles and non-hole
// upward triangles, with the fixed adjacency order (above, left, right).
struct Matching {
    int n;
    const HoleyTriangle& h;
    std::vector<Down> downs;
    std::vector<std::vector<core::LatticePoint>> adj;
    std::map<core::LatticePoint, int> up_match; // up -> down index
    std::vector<int> down_match;                // down index -> 1 if matched

    explicit Matching(const HoleyTriangle& holey) : n(holey.n), h(holey), downs(all_downs(holey.n)) {
        adj.resize(downs.size());
        for (size_t i = 0; i < downs.size(); ++i) {
            const auto [r, j] = downs[i];
            for (auto [ur, uj] : {std::pair{r - 1, j}, std::pair{r, j}, std::pair{r, j + 1}}) {
                auto p = up_to_point(n, ur, uj);
                if (!h.holes.contains(p)) adj[i].push_back(p);
            }
        }
        down_match.assign(downs.size(), 0);
    }

    bool augment(int d, std::set<core::LatticePoint>& seen) {
        for (const auto& up : adj[d]) {
            if (seen.count(up)) continue;
            seen.insert(up);
            auto it = up_match.find(up);
            if (it == up_match.end() || augment(it->second, seen)) {
                up_match[up] = d;
                down_match[d] = 1;
                return true;
            }
        }
        return false;
    }

    int run() {
        int matched = 0;
        for (size_t i = 0; i < downs.size(); ++i) {
            std::set<core::LatticePoint> seen;
            if (augment(static_cast<int>(i), seen)) ++matched;
        }
        return matched;
    }
};

} // namespace

bool is_tileable(const HoleyTriangle& h) {
    Matching m(h);
    return m.run() == static_cast<int>(m.downs.size());
}

std::optional<RhombusTiling> find_tiling(const HoleyTriangle& h) {
    Matching m(h);
    if (m.run() != static_cast<int>(m.downs.size())) return std::nullopt;
    RhombusTiling t;
    t.n = h.n;
    for (const auto& [up, di] : m.up_match) {
        const Down d = m.downs[di];
        const auto [r, j] = point_to_up(h.n, up);
        DownDir dir;
        if (d.r == r + 1)
            dir = DownDir::Bottom;
        else
            dir = (d.j == j) ? DownDir::Right : DownDir::Left;
        t.tiles.push_back({up, dir});
    }
    std::sort(t.tiles.begin(), t.tiles.end(),
              [](const Tile& a, const Tile& b) { return a.up != b.up ? a.up < b.up : a.dir < b.dir; });
    return t;
}

namespace {

struct RJ {
    int r, j;
    bool operator<(const RJ& o) const { return r != o.r ? r < o.r : j < o.j; }
};

// Rows 1..rows of the ambient T(total) form the subproblem triangle; holes is
// its basis. Returns tiles in ambient coordinates.
std::vector<Tile> slide_rec(const core::GroundSet& g, std::set<RJ> holes, int rows) {
    const int total = g.n();
    if (rows == 1) return {};
    std::vector<int> bottom;
    for (const auto& h : holes)
        if (h.r == rows) bottom.push_back(h.j);
    if (bottom.empty()) throw Error("slide: no hole in the bottom row of an independent hole set");
    if (bottom.size() == 1) {
        const int j0 = bottom[0];
        std::vector<Tile> tiles;
        for (int j = 1; j < j0; ++j) tiles.push_back({up_to_point(total, rows, j), DownDir::Right});
        for (int j = j0 + 1; j <= rows; ++j) tiles.push_back({up_to_point(total, rows, j), DownDir::Left});
        holes.erase({rows, j0});
        auto rest = slide_rec(g, std::move(holes), rows - 1);
        rest.insert(rest.end(), tiles.begin(), tiles.end());
        return rest;
    }
    const int jx = bottom[0], jy = bottom[1];
    for (int i = jx; i <= jy - 1; ++i) {
        if (holes.count({rows - 1, i})) continue;
        std::set<RJ> cand = holes;
        cand.erase({rows, jx});
        cand.insert({rows - 1, i});
        std::vector<core::LatticePoint> pts;
        for (const auto& c : cand) pts.push_back(up_to_point(total, c.r, c.j));
        if (!core::is_independent(g, core::PointSet(g, pts))) continue;
        auto tiles = slide_rec(g, std::move(cand), rows);
        // The bottom row left of the leftmost bottom hole is frozen into
        // right-leaning tiles; reverse the stretch from jx to i and park the
        // freed downward triangle under the old exchange hole.
        for (int j = jx; j <= i; ++j) {
            Tile frozen{up_to_point(total, rows, j), DownDir::Right};
            auto it = std::find(tiles.begin(), tiles.end(), frozen);
            if (it == tiles.end()) throw Error("slide: expected frozen bottom-row tile missing");
            tiles.erase(it);
        }
        tiles.push_back({up_to_point(total, rows - 1, i), DownDir::Bottom});
        for (int j = jx; j <= i - 1; ++j) tiles.push_back({up_to_point(total, rows, j + 1), DownDir::Left});
        return tiles;
    }
    throw Error("slide: no feasible exchange triangle; input was not a basis");
}

} // namespace

std::optional<RhombusTiling> find_tiling_by_sliding(const HoleyTriangle& h) {
    core::GroundSet g(h.n, 3);
    if (auto v = core::find_violation(g, h.holes)) {
        std::string anchor;
        for (size_t i = 0; i < v->anchor.size(); ++i) anchor += (i ? "," : "") + std::to_string(v->anchor[i]);
        throw UsageError("sliding: holes are not a basis; translate (" + anchor + ") of size " +
                         std::to_string(v->size) + " holds too many holes");
    }
    std::set<RJ> holes;
    for (const auto& p : h.holes.members()) {
        auto [r, j] = point_to_up(h.n, p);
        holes.insert({r, j});
    }
    RhombusTiling t;
    t.n = h.n;
    t.tiles = slide_rec(g, std::move(holes), h.n);
    std::sort(t.tiles.begin(), t.tiles.end(),
              [](const Tile& a, const Tile& b) { return a.up != b.up ? a.up < b.up : a.dir < b.dir; });
    return t;
}

lgv::Routing tiling_to_routing(const HoleyTriangle& h, const RhombusTiling& t) {
    if (!tiling_covers(h, t)) throw UsageError("tiling_to_routing: tiling does not cover the holey triangle");
    const int n = h.n;
    // Left/right-leaning tiles join the horizontal-edge midpoints they touch.
    std::map<core::LatticePoint, core::LatticePoint> next;
    for (const Tile& tile : t.tiles) {
        auto [r, j] = point_to_up(n, tile.up);
        if (tile.dir == DownDir::Right)
            next[up_to_point(n, r - 1, j)] = tile.up;
        else if (tile.dir == DownDir::Left)
            next[up_to_point(n, r - 1, j - 1)] = tile.up;
    }
    lgv::Routing routing;
    for (const auto& hole : h.holes.members()) {
        std::vector<core::LatticePoint> path{hole};
        auto cur = hole;
        while (next.count(cur)) {
            cur = next[cur];
            path.push_back(cur);
        }
        if (cur[0] != 0) throw Error("tiling_to_routing: path stopped above the bottom row");
        routing.paths.push_back(std::move(path));
    }
    return routing;
}

RhombusTiling routing_to_tiling(int n, const lgv::Routing& r) {
    if (static_cast<int>(r.paths.size()) != n)
        throw UsageError("routing_to_tiling: need n paths ending at all bottom vertices");
    std::set<core::LatticePoint> on_path;
    RhombusTiling t;
    t.n = n;
    std::set<int> endpoints;
    for (const auto& path : r.paths) {
        if (path.empty()) throw UsageError("routing_to_tiling: empty path");
        for (const auto& v : path)
            if (!on_path.insert(v).second) throw UsageError("routing_to_tiling: paths are not vertex-disjoint");
        const auto& last = path.back();
        if (last[0] != 0) throw UsageError("routing_to_tiling: path does not end on the bottom row");
        endpoints.insert(last[2] + 1);
        for (size_t i = 0; i + 1 < path.size(); ++i) {
            const auto& a = path[i];
            const auto& b = path[i + 1];
            if (b[0] != a[0] - 1 || (b[2] != a[2] && b[2] != a[2] + 1))
                throw UsageError("routing_to_tiling: path step is not a graph edge");
            // Down-left step covers the child from the right; down-right from the left.
            t.tiles.push_back({b, b[2] == a[2] ? DownDir::Right : DownDir::Left});
        }
    }
    if (static_cast<int>(endpoints.size()) != n)
        throw UsageError("routing_to_tiling: paths must end at distinct bottom vertices");
    for (int r2 = 1; r2 <= n - 1; ++r2)
        for (int j = 1; j <= r2; ++j) {
            auto p = up_to_point(n, r2, j);
            if (!on_path.count(p)) t.tiles.push_back({p, DownDir::Bottom});
        }
    std::sort(t.tiles.begin(), t.tiles.end(),
              [](const Tile& a, const Tile& b) { return a.up != b.up ? a.up < b.up : a.dir < b.dir; });
    return t;
}

namespace {

const char* kIds = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789";

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    return buf;
}

} // namespace

std::string render_ascii(const HoleyTriangle& h, const std::optional<RhombusTiling>& t) {
    const int n = h.n;
    std::map<core::LatticePoint, char> up_char;
    std::map<Down, char> down_char;
    if (t) {
        if (!tiling_covers(h, *t)) throw UsageError("render: tiling does not cover the holey triangle");
        for (size_t i = 0; i < t->tiles.size(); ++i) {
            const char id = kIds[i % 62];
            up_char[t->tiles[i].up] = id;
            down_char[down_of(t->tiles[i], n)] = id;
        }
    }
    std::string out;
    for (int r = 1; r <= n; ++r) {
        out.append(n - r, ' ');
        for (int j = 1; j <= r; ++j) {
            auto p = up_to_point(n, r, j);
            if (h.holes.contains(p))
                out += '#';
            else if (up_char.count(p))
                out += up_char[p];
            else
                out += '.';
            if (j < r) out += down_char.count({r, j}) ? down_char[{r, j}] : '.';
        }
        out += '\n';
    }
    return out;
}

std::string render_svg(const HoleyTriangle& h, const std::optional<RhombusTiling>& t) {
    const int n = h.n;
    const double hgt = 0.8660254037844386;
    const double scale = 60.0, margin = 10.0;
    auto X = [&](double x) { return fmt(margin + scale * x); };
    auto Y = [&](double y) { return fmt(margin + scale * y); };
    // Corner coordinates of up(r, j); the downward triangle (r, j) reuses them.
    auto up_apex_x = [&](int r, int j) { return (n - r) / 2.0 + (j - 1) + 0.5; };
    auto base_left_x = [&](int r, int j) { return (n - r) / 2.0 + (j - 1); };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(scale * n + 2 * margin) + "\" height=\"" +
           fmt(scale * n * hgt + 2 * margin) + "\">\n";
    svg += "<defs><pattern id=\"hatch\" width=\"6\" height=\"6\" patternTransform=\"rotate(45)\" "
           "patternUnits=\"userSpaceOnUse\"><line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"6\" stroke=\"#555\" "
           "stroke-width=\"2\"/></pattern></defs>\n";

    if (t) {
        if (!tiling_covers(h, *t)) throw UsageError("render: tiling does not cover the holey triangle");
        for (const Tile& tile : t->tiles) {
            auto [r, j] = point_to_up(n, tile.up);
            const double ax = up_apex_x(r, j), ay = (r - 1) * hgt;
            const double blx = base_left_x(r, j), by = r * hgt;
            std::vector<std::pair<double, double>> quad;
            if (tile.dir == DownDir::Right)
                quad = {{blx, by}, {ax, ay}, {ax + 1, ay}, {blx + 1, by}};
            else if (tile.dir == DownDir::Left)
                quad = {{ax - 1, ay}, {ax, ay}, {blx + 1, by}, {blx, by}};
            else
                quad = {{ax, ay}, {blx + 1, by}, {ax, (r + 1) * hgt}, {blx, by}};
            svg += "<polygon class=\"rhombus\" points=\"";
            for (size_t i = 0; i < quad.size(); ++i)
                svg += (i ? " " : "") + X(quad[i].first) + "," + Y(quad[i].second);
            svg += "\" fill=\"#e8f0fe\" stroke=\"#333\" stroke-width=\"1\"/>\n";
        }
    } else {
        // Bare grid so the hole pattern reads without a tiling.
        for (int r = 1; r <= n; ++r)
            for (int j = 1; j <= r; ++j) {
                auto p = up_to_point(n, r, j);
                if (h.holes.contains(p)) continue;
                svg += "<polygon class=\"cell\" points=\"" + X(up_apex_x(r, j)) + "," + Y((r - 1) * hgt) + " " +
                       X(base_left_x(r, j) + 1) + "," + Y(r * hgt) + " " + X(base_left_x(r, j)) + "," + Y(r * hgt) +
                       "\" fill=\"none\" stroke=\"#bbb\" stroke-width=\"0.5\"/>\n";
            }
    }
    for (const auto& p : h.holes.members()) {
        auto [r, j] = point_to_up(n, p);
        svg += "<polygon class=\"hole\" points=\"" + X(up_apex_x(r, j)) + "," + Y((r - 1) * hgt) + " " +
               X(base_left_x(r, j) + 1) + "," + Y(r * hgt) + " " + X(base_left_x(r, j)) + "," + Y(r * hgt) +
               "\" fill=\"url(#hatch)\" stroke=\"#333\" stroke-width=\"1\"/>\n";
    }
    svg += "</svg>\n";
    return svg;
}

} // namespace linemat::tiling
