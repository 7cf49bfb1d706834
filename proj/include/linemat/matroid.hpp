#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>

#include "linemat/lattice.hpp"

namespace linemat::core {

// Oracles for the matroid on T_{n,d} whose independent sets are those meeting
// every size-k translate in at most k points.

// Canonical witness: smallest size k first, then lexicographically least
// anchor. Returns nothing iff S is independent.
std::optional<SubSimplex> find_violation(const GroundSet& g, const PointSet& s);

// Equivalent to !find_violation, but only scans anchors that arise as
// coordinate-wise minima of subsets of S (the min-closure), since a minimal
// violated translate is anchored at the min of the points it traps.
bool is_independent(const GroundSet& g, const PointSet& s);

// Greedy over the canonical point order; the value is order-independent.
int rank(const GroundSet& g, const PointSet& s);

bool is_basis(const GroundSet& g, const PointSet& s);

// Depth-first enumeration in canonical order with violation pruning. Each
// oracle call decrements the budget; throws BudgetExceeded when spent.
// `workers` > 1 splits the top-level branches across threads (results are
// merged back into canonical order).
std::vector<PointSet> enumerate_bases(const GroundSet& g, std::uint64_t budget = 10'000'000,
                                      int workers = 1);

// Meet = coordinate-wise max of anchors, join = coordinate-wise min.
// size(meet) + size(join) = size(t) + size(u) always; throws UsageError when
// the meet has negative size (the translates are disjoint).
std::pair<SubSimplex, SubSimplex> meet_join(const GroundSet& g, const SubSimplex& t, const SubSimplex& u);

} // namespace linemat::core
