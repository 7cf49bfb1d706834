#include "linemat/schubert.hpp"

#include <algorithm>
#include <sstream>

namespace linemat::schubert {

Permutation make_permutation(std::vector<int> images) {
    const int n = static_cast<int>(images.size());
    std::vector<char> seen(n + 1, 0);
    for (int x : images) {
        if (x < 1 || x > n || seen[x]) throw UsageError("permutation: images are not a bijection on 1..n");
        seen[x] = 1;
    }
    return Permutation{n, std::move(images)};
}

Permutation parse_permutation(const std::string& digits) {
    std::vector<int> images;
    for (char c : digits) {
        if (c < '1' || c > '9') throw UsageError("permutation: expected a digit string like 53124");
        images.push_back(c - '0');
    }
    return make_permutation(std::move(images));
}

RankArray rank_array(const Permutation& w) {
    const int n = w.n;
    // 1 at (w(i), n-i+1); prefix ranks are prefix dot counts.
    std::vector<std::vector<int>> ones(n + 1, std::vector<int>(n + 1, 0));
    for (int i = 1; i <= n; ++i) ones[w.images[i - 1]][n - i + 1] = 1;
    RankArray out;
    out.n = n;
    out.table.assign(n, std::vector<int>(n, 0));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            int acc = ones[i][j];
            if (i > 1) acc += out.table[i - 2][j - 1];
            if (j > 1) acc += out.table[i - 1][j - 2];
            if (i > 1 && j > 1) acc -= out.table[i - 2][j - 2];
            out.table[i - 1][j - 1] = acc;
        }
    return out;
}

int length(const Permutation& w) {
    int inv = 0;
    for (int i = 0; i < w.n; ++i)
        for (int j = i + 1; j < w.n; ++j) inv += w.images[i] > w.images[j];
    return inv;
}

bool problem_dimension_ok(const std::vector<Permutation>& ws) {
    if (ws.empty()) throw UsageError("problem_dimension_ok: no permutations");
    const int n = ws[0].n;
    int sum = 0;
    for (const auto& w : ws) {
        if (w.n != n) throw UsageError("problem_dimension_ok: mixed sizes");
        sum += length(w);
    }
    return sum == n * (n - 1) / 2;
}

std::vector<std::vector<int>> Floors::floor(int k) const {
    auto it = floors.find(k);
    return it == floors.end() ? std::vector<std::vector<int>>{} : it->second;
}

Floors make_floors(int n, int d, std::map<int, std::vector<std::vector<int>>> floors) {
    if (n < 1 || d < 2) throw UsageError("floors: need n >= 1 and d >= 2");
    for (auto& [k, dots] : floors) {
        if (k < 1 || k > n) throw UsageError("floors: floor index out of range");
        for (auto& dot : dots) {
            if (static_cast<int>(dot.size()) != d) throw UsageError("floors: dot arity != d");
            for (int x : dot)
                if (x < 1 || x > n) throw UsageError("floors: dot coordinate out of range");
        }
        std::sort(dots.begin(), dots.end());
        if (std::adjacent_find(dots.begin(), dots.end()) != dots.end())
            throw UsageError("floors: duplicate dot");
    }
    return Floors{n, d, std::move(floors)};
}

Floors parse_floor_boards(const std::string& text, int n) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::vector<std::string>> rows; // non-blank lines, tokenized
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (!toks.empty()) rows.push_back(std::move(toks));
    }
    if (static_cast<int>(rows.size()) != n * n)
        throw UsageError("boards: expected " + std::to_string(n) + " boards of " + std::to_string(n) + " rows");
    std::map<int, std::vector<std::vector<int>>> floors;
    for (int f = 1; f <= n; ++f)
        for (int i = 1; i <= n; ++i) {
            const auto& toks = rows[(f - 1) * n + (i - 1)];
            if (static_cast<int>(toks.size()) != n) throw UsageError("boards: row has wrong width");
            for (int j = 1; j <= n; ++j) {
                if (toks[j - 1] == ".") continue;
                int k;
                try {
                    k = std::stoi(toks[j - 1]);
                } catch (...) {
                    throw UsageError("boards: bad token '" + toks[j - 1] + "'");
                }
                floors[f].push_back({i, j, k});
            }
        }
    return make_floors(n, 3, std::move(floors));
}

bool is_transversal_floor(const Floors& f, int k) {
    const auto dots = f.floor(k);
    std::uint64_t expected = 1;
    for (int i = 1; i <= f.d - 1; ++i)
        expected = expected * static_cast<std::uint64_t>(f.n - 1 + i) / static_cast<std::uint64_t>(i);
    if (dots.size() != expected) return false;
    const int target = (f.d - 1) * f.n + 1;
    for (const auto& dot : dots) {
        int sum = 0;
        for (int x : dot) sum += x;
        if (sum != target) return false;
    }
    return true; // distinct dots with the right sum and the right count
}

bool is_transversal_floor(const Floors& f) { return is_transversal_floor(f, f.n); }

VanishingVerdict vanishing_check(const Floors& f) {
    VanishingVerdict out;
    if (!is_transversal_floor(f)) {
        out.vanishes = true;
        out.reason = "non-transversal top floor";
        return out;
    }
    core::GroundSet g(f.n, f.d);
    const auto top = f.floor(f.n);
    for (int k = 1; k <= f.n - 1; ++k) {
        std::vector<core::LatticePoint> mapped;
        for (const auto& dot : f.floor(k)) {
            if (!std::binary_search(top.begin(), top.end(), dot)) continue;
            core::LatticePoint p(f.d);
            int sum = 0;
            for (int i = 0; i < f.d; ++i) {
                p[i] = f.n - dot[i];
                sum += p[i];
            }
            if (sum != f.n - 1) throw Error("vanishing_check: mapped dot misses the ground simplex");
            mapped.push_back(std::move(p));
        }
        core::PointSet pts(g, mapped);
        const int r = core::rank(g, pts);
        if (r > k) {
            out.vanishes = true;
            out.reason = "rank";
            out.k = k;
            out.rank = r;
            out.intersection = pts.members();
            // Greedy witness of the rank, plus the trapped translate when the
            // intersection itself is dependent.
            std::vector<core::LatticePoint> picked;
            for (const auto& p : pts.members()) {
                picked.push_back(p);
                if (!core::is_independent(g, core::PointSet(g, picked))) picked.pop_back();
            }
            out.max_independent = picked;
            out.violation = core::find_violation(g, pts);
            return out;
        }
    }
    out.reason = "inconclusive";
    return out;
}

} // namespace linemat::schubert
