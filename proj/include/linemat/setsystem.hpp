#pragma once

#include <vector>

#include "linemat/errors.hpp"

namespace linemat::core {

// A family of fixed-size subsets of {1..m}. Blocks are kept sorted (both
// within a block and across blocks) for canonical behavior.
struct SetSystem {
    int m = 0;
    int c = 0;
    std::vector<std::vector<int>> blocks;

    SetSystem() = default;
    SetSystem(int m, int c, std::vector<std::vector<int>> blocks);
};

// Independence in the matroid of lines of m generic hyperplanes in n-space:
// every subcollection S of (n-1)-blocks must satisfy |intersection(S)| <= n - |S|.
bool hm_is_independent(int n, int m, const SetSystem& sys);

// Independence in the Dilworth truncation of the free matroid on [m], taken at
// level k: every subcollection S of k-blocks must satisfy |union(S)| >= |S| + k - 1.
bool dilworth_is_independent(int m, int k, const SetSystem& sys);

// Greedy rank over the blocks in canonical order.
int hm_rank(int n, int m, const SetSystem& sys);

bool hm_is_basis(int n, int m, const SetSystem& sys);
bool dilworth_is_basis(int m, int k, const SetSystem& sys);

// The block-wise complement system {[m] - A : A in sys}. Carries blocks of
// size m - c; it is the bridge between the two oracles above.
SetSystem complement_blocks(const SetSystem& sys);

// All (n-1)-subsets of [m] in canonical order: the ground set both oracles
// live on when comparing against geometry.
std::vector<std::vector<int>> all_subsets(int m, int c);

} // namespace linemat::core
