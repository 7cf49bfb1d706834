#include "linemat/lattice.hpp"

#include <algorithm>
#include <string>

namespace linemat::core {

namespace {

void compositions(int total, int parts, std::vector<int>& cur, std::vector<LatticePoint>& out) {
    if (parts == 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int v = 0; v <= total; ++v) {
        cur.push_back(v);
        compositions(total - v, parts - 1, cur, out);
        cur.pop_back();
    }
}

std::string point_str(const LatticePoint& p) {
    std::string s = "(";
    for (size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + ")";
}

} // namespace

GroundSet::GroundSet(int n, int d, std::uint64_t max_points) : n_(n), d_(d) {
    if (n < 1) throw UsageError("GroundSet: n must be >= 1");
    if (d < 2) throw UsageError("GroundSet: d must be >= 2");
    // binomial(n+d-2, d-1), checked against the cap before enumerating.
    std::uint64_t count = 1;
    for (int i = 1; i <= d - 1; ++i) {
        count = count * static_cast<std::uint64_t>(n - 1 + i) / static_cast<std::uint64_t>(i);
        if (count > max_points)
            throw BudgetExceeded("GroundSet: T_{" + std::to_string(n) + "," + std::to_string(d) +
                                 "} exceeds the configured point cap");
    }
    std::vector<int> cur;
    compositions(n - 1, d, cur, points_);
    // compositions() emits in lexicographic order already; keep the sort as a
    // guard for the canonical-order invariant.
    std::sort(points_.begin(), points_.end());
}

bool GroundSet::contains(const LatticePoint& p) const {
    return index_of(p) >= 0;
}

int GroundSet::index_of(const LatticePoint& p) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), p);
    if (it == points_.end() || *it != p) return -1;
    return static_cast<int>(it - points_.begin());
}

SubSimplex make_subsimplex(const GroundSet& g, const std::vector<int>& anchor) {
    if (static_cast<int>(anchor.size()) != g.d()) throw UsageError("SubSimplex: anchor length != d");
    int sum = 0;
    for (int a : anchor) {
        if (a < 0) throw UsageError("SubSimplex: negative anchor coordinate");
        sum += a;
    }
    return SubSimplex{anchor, g.n() - sum};
}

std::vector<LatticePoint> points_in(const GroundSet& g, const SubSimplex& s) {
    std::vector<LatticePoint> out;
    for (const auto& p : g.points())
        if (s.contains(p)) out.push_back(p);
    return out;
}

PointSet::PointSet(const GroundSet& g, std::vector<LatticePoint> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (const auto& p : members)
        if (!g.contains(p))
            throw UsageError("PointSet: point " + point_str(p) + " outside the ground set");
    members_ = std::move(members);
}

bool PointSet::contains(const LatticePoint& p) const {
    return std::binary_search(members_.begin(), members_.end(), p);
}

} // namespace linemat::core
