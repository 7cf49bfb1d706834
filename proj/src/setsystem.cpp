#include "linemat/setsystem.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>

namespace linemat::core {

SetSystem::SetSystem(int m_, int c_, std::vector<std::vector<int>> blocks_) : m(m_), c(c_), blocks(std::move(blocks_)) {
    if (m < 1) throw UsageError("SetSystem: m must be positive");
    for (auto& b : blocks) {
        std::sort(b.begin(), b.end());
        if (std::unique(b.begin(), b.end()) != b.end()) throw UsageError("SetSystem: repeated element in a block");
        if (static_cast<int>(b.size()) != c) throw UsageError("SetSystem: block size != c");
        for (int x : b)
            if (x < 1 || x > m) throw UsageError("SetSystem: element outside [m]");
    }
    std::sort(blocks.begin(), blocks.end());
    if (std::unique(blocks.begin(), blocks.end()) != blocks.end())
        throw UsageError("SetSystem: duplicate block");
}

namespace {

using Mask = std::uint64_t;

Mask to_mask(const std::vector<int>& b) {
    Mask x = 0;
    for (int e : b) x |= Mask(1) << (e - 1);
    return x;
}

// Visits every nonempty subcollection; returns false if any fails `ok`.
template <typename F>
bool all_subcollections(const std::vector<Mask>& blocks, F ok) {
    const size_t nb = blocks.size();
    for (std::uint64_t sel = 1; sel < (std::uint64_t(1) << nb); ++sel)
        if (!ok(sel)) return false;
    return true;
}

} // namespace

bool hm_is_independent(int n, int m, const SetSystem& sys) {
    if (sys.c != n - 1) throw UsageError("hm_is_independent: blocks must have n-1 elements");
    if (m < n - 1) throw UsageError("hm_is_independent: m < n-1");
    if (sys.blocks.size() > 63) throw BudgetExceeded("hm_is_independent: too many blocks");
    std::vector<Mask> masks;
    for (const auto& b : sys.blocks) masks.push_back(to_mask(b));
    return all_subcollections(masks, [&](std::uint64_t sel) {
        Mask inter = ~Mask(0);
        int count = 0;
        for (size_t i = 0; i < masks.size(); ++i)
            if (sel >> i & 1) { inter &= masks[i]; ++count; }
        return __builtin_popcountll(inter & ((Mask(1) << m) - 1)) <= n - count;
    });
}

bool dilworth_is_independent(int m, int k, const SetSystem& sys) {
    if (sys.c != k) throw UsageError("dilworth_is_independent: blocks must have k elements");
    if (sys.blocks.size() > 63) throw BudgetExceeded("dilworth_is_independent: too many blocks");
    std::vector<Mask> masks;
    for (const auto& b : sys.blocks) masks.push_back(to_mask(b));
    return all_subcollections(masks, [&](std::uint64_t sel) {
        Mask uni = 0;
        int count = 0;
        for (size_t i = 0; i < masks.size(); ++i)
            if (sel >> i & 1) { uni |= masks[i]; ++count; }
        return __builtin_popcountll(uni) >= count + k - 1;
    });
}

int hm_rank(int n, int m, const SetSystem& sys) {
    std::vector<std::vector<int>> picked;
    for (const auto& b : sys.blocks) {
        picked.push_back(b);
        if (!hm_is_independent(n, m, SetSystem(m, n - 1, picked))) picked.pop_back();
    }
    return static_cast<int>(picked.size());
}

bool hm_is_basis(int n, int m, const SetSystem& sys) {
    return static_cast<int>(sys.blocks.size()) == n && hm_is_independent(n, m, sys);
}

bool dilworth_is_basis(int m, int k, const SetSystem& sys) {
    // rank of the level-k Dilworth truncation of the free matroid on [m]
    return static_cast<int>(sys.blocks.size()) == m - k + 1 && dilworth_is_independent(m, k, sys);
}

SetSystem complement_blocks(const SetSystem& sys) {
    std::vector<std::vector<int>> out;
    for (const auto& b : sys.blocks) {
        std::vector<int> comp;
        size_t idx = 0;
        for (int x = 1; x <= sys.m; ++x) {
            if (idx < b.size() && b[idx] == x) { ++idx; continue; }
            comp.push_back(x);
        }
        out.push_back(std::move(comp));
    }
    return SetSystem(sys.m, sys.m - sys.c, std::move(out));
}

std::vector<std::vector<int>> all_subsets(int m, int c) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int next) {
        if (static_cast<int>(cur.size()) == c) {
            out.push_back(cur);
            return;
        }
        for (int x = next; x <= m; ++x) {
            cur.push_back(x);
            rec(x + 1);
            cur.pop_back();
        }
    };
    rec(1);
    return out;
}

} // namespace linemat::core
