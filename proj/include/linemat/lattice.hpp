#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "linemat/errors.hpp"

namespace linemat::core {

// A point of the simplex T_{n,d}: d nonnegative coordinates summing to n-1.
using LatticePoint = std::vector<int>;

// All of T_{n,d}, lexicographically sorted. This order is the canonical
// element order everywhere (greedy rank, basis enumeration, witnesses).
class GroundSet {
public:
    // Throws UsageError on bad parameters, BudgetExceeded past `max_points`.
    GroundSet(int n, int d, std::uint64_t max_points = 10000);

    int n() const { return n_; }
    int d() const { return d_; }
    const std::vector<LatticePoint>& points() const { return points_; }
    int size() const { return static_cast<int>(points_.size()); }

    bool contains(const LatticePoint& p) const;
    int index_of(const LatticePoint& p) const; // -1 if absent

private:
    int n_, d_;
    std::vector<LatticePoint> points_;
};

// The parallel translate T_{a_1..a_d}: points with x_i >= a_i. Its size is
// n - sum(a); sizes below zero mean the translate misses the ground set
// entirely (not even a boundary touch).
struct SubSimplex {
    std::vector<int> anchor;
    int size = 0;

    bool contains(const LatticePoint& p) const {
        for (size_t i = 0; i < anchor.size(); ++i)
            if (p[i] < anchor[i]) return false;
        return true;
    }
    bool operator==(const SubSimplex& o) const { return anchor == o.anchor && size == o.size; }
};

SubSimplex make_subsimplex(const GroundSet& g, const std::vector<int>& anchor);

// Points of the ground set inside the translate, in canonical order.
std::vector<LatticePoint> points_in(const GroundSet& g, const SubSimplex& s);

// A subset of one ground set; stored sorted and deduplicated.
class PointSet {
public:
    PointSet() = default;
    PointSet(const GroundSet& g, std::vector<LatticePoint> members);

    const std::vector<LatticePoint>& members() const { return members_; }
    int size() const { return static_cast<int>(members_.size()); }
    bool contains(const LatticePoint& p) const;

private:
    std::vector<LatticePoint> members_;
};

} // namespace linemat::core
