#pragma once

#include <optional>
#include <string>
#include <vector>

#include "linemat/lattice.hpp"
#include "linemat/pathgraph.hpp"

namespace linemat::tiling {

// Coordinates inside T(n):
//   upward triangle (r, j): row r = 1..n from the top, position j = 1..r.
//   downward triangle (r, j): row r = 2..n, position j = 1..r-1; adjacent to
//   up(r, j) on its left, up(r, j+1) on its right and up(r-1, j) above.
// Upward triangles are identified with T_{n,3} via (r, j) <-> (n-r, r-j, j-1),
// matching the path graph: the bottom row is x1 = 0 labelled left to right.

core::LatticePoint up_to_point(int n, int r, int j);
std::pair<int, int> point_to_up(int n, const core::LatticePoint& p);

enum class DownDir { Left, Right, Bottom };

// One rhombus: an upward triangle plus the adjacent downward triangle in the
// given direction.
struct Tile {
    core::LatticePoint up;
    DownDir dir;
    bool operator==(const Tile& o) const { return up == o.up && dir == o.dir; }
};

struct HoleyTriangle {
    int n;
    core::PointSet holes;
};

struct RhombusTiling {
    int n = 0;
    std::vector<Tile> tiles; // sorted by up point
};

HoleyTriangle make_holey(const core::GroundSet& g, const core::PointSet& holes, bool require_n_holes = true);

// Every downward triangle covered exactly once, every non-hole upward
// triangle covered exactly once, nothing else touched.
bool tiling_covers(const HoleyTriangle& h, const RhombusTiling& t);

// Hall-style answer via maximum bipartite matching between downward triangles
// (canonical order: top to bottom, left to right) and non-hole upward
// triangles.
bool is_tileable(const HoleyTriangle& h);

// Concrete tiling from the matching, or nothing.
std::optional<RhombusTiling> find_tiling(const HoleyTriangle& h);

// Constructive tiling by induction on the bottom row: with one bottom hole the
// bottom row is forced and the top T(n-1) recurses; with several, the leftmost
// bottom hole is exchanged for the first feasible triangle of the row above
// between it and the next hole, and the bottom segment is reversed afterwards.
// Requires the holes to be a basis; reports the violation otherwise.
std::optional<RhombusTiling> find_tiling_by_sliding(const HoleyTriangle& h);

// Tilings of a holey T(n) correspond to routings of the path graph ending at
// all n bottom vertices; holes are the path sources. Mutually inverse.
lgv::Routing tiling_to_routing(const HoleyTriangle& h, const RhombusTiling& t);
RhombusTiling routing_to_tiling(int n, const lgv::Routing& r);

std::string render_ascii(const HoleyTriangle& h, const std::optional<RhombusTiling>& t);
std::string render_svg(const HoleyTriangle& h, const std::optional<RhombusTiling>& t);

} // namespace linemat::tiling
