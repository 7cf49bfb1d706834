#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "linemat/lattice.hpp"
#include "linemat/setsystem.hpp"
#include "linemat/subspace.hpp"

namespace linemat::flags {

// A complete flag {0} = E_0 < E_1 < ... < E_n = Q^n with dim E_i = i.
struct Flag {
    int n = 0;
    std::vector<linalg::Subspace> subspaces; // indices 0..n
};

struct FlagFamily {
    int n = 0;
    std::vector<Flag> flags; // one per color, size d
};

// Ground point p corresponds to the intersection with indices a_i = n - p_i.
struct LineArrangement {
    int n = 0, d = 0;
    std::map<core::LatticePoint, linalg::Subspace> lines;
};

// d flags from seeded random invertible integer matrices (entries in
// [-10^4, 10^4]); E_i spans the first i columns. Deterministic per seed.
FlagFamily random_flag_family(int n, int d, std::uint64_t seed, int max_retries = 64);

// One-dimensional intersections indexed by the ground set. Checks the whole
// codimension pattern (every index tuple, not only the line-level ones) and
// throws NonGenericError naming the first offending tuple.
LineArrangement line_arrangement(const FlagFamily& f);

struct MatroidCheck {
    bool matches = true;
    std::vector<core::LatticePoint> witness; // first differing subset, canonical order
    int linear_rank = 0, matroid_rank = 0;
};

// Compares linear rank with the combinatorial rank on every subset of size
// <= n (larger subsets add nothing for a rank-n matroid).
MatroidCheck matroid_equals_Tnd(const LineArrangement& l, std::uint64_t budget = 1'000'000);

// Rebuilds d flags by spanning coordinate-threshold slices of the lines.
// When `assume_valid` is false the matroid check runs first.
FlagFamily flags_from_arrangement(const LineArrangement& l, bool assume_valid = false);

struct HyperplaneLines {
    int n = 0, m = 0;
    std::map<std::vector<int>, linalg::Subspace> lines; // key: (n-1)-subset of [m]
    bool matches = true;
    std::vector<std::vector<int>> witness; // first subset where ranks differ
};

// m random hyperplanes through the origin; the lines indexed by (n-1)-subsets
// are compared exhaustively (subsets up to size n) against the combinatorial
// oracle.
HyperplaneLines hyperplane_lines(int n, int m, std::uint64_t seed, int max_retries = 64);

} // namespace linemat::flags
