#include "linemat/trees.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "linemat/matroid.hpp"
#include "linemat/rng.hpp"

namespace linemat::trees {

bool BipartiteTree::has_edge(int i, int j) const {
    return std::binary_search(edges.begin(), edges.end(), Edge{i, j});
}

int BipartiteTree::deg_v(int i) const {
    int c = 0;
    for (const auto& e : edges) c += e.first == i;
    return c;
}

int BipartiteTree::deg_w(int j) const {
    int c = 0;
    for (const auto& e : edges) c += e.second == j;
    return c;
}

namespace {

bool is_spanning_tree(int n, int d, const std::vector<Edge>& edges, std::string* why = nullptr) {
    if (static_cast<int>(edges.size()) != n + d - 1) {
        if (why) *why = "edge count != n+d-1";
        return false;
    }
    std::vector<int> parent(n + d);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& [i, j] : edges) {
        if (i < 1 || i > n || j < 1 || j > d) {
            if (why) *why = "edge endpoint out of range";
            return false;
        }
        const int a = find(i - 1), b = find(n + j - 1);
        if (a == b) {
            if (why) *why = "edges contain a cycle";
            return false;
        }
        parent[a] = b;
    }
    return true; // n+d-1 acyclic edges on n+d vertices are connected
}

} // namespace

BipartiteTree make_tree(int n, int d, std::vector<Edge> edges) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    std::string why;
    if (!is_spanning_tree(n, d, edges, &why)) throw UsageError("make_tree: " + why);
    return BipartiteTree{n, d, std::move(edges)};
}

std::vector<BipartiteTree> enumerate_spanning_trees(int n, int d, std::uint64_t budget) {
    if (n < 1 || d < 1) throw UsageError("enumerate_spanning_trees: bad parameters");
    double count = std::pow(static_cast<double>(n), d - 1) * std::pow(static_cast<double>(d), n - 1);
    if (count > static_cast<double>(budget))
        throw BudgetExceeded("enumerate_spanning_trees: Cayley count exceeds budget");
    std::vector<Edge> all;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= d; ++j) all.push_back({i, j});
    std::vector<BipartiteTree> out;
    std::vector<Edge> cur;
    const int need = n + d - 1;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == need) {
            if (is_spanning_tree(n, d, cur)) out.push_back(BipartiteTree{n, d, cur});
            return;
        }
        for (int i = start; i <= static_cast<int>(all.size()) - (need - static_cast<int>(cur.size())); ++i) {
            cur.push_back(all[i]);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

std::optional<std::vector<int>> alternating_circuit(const BipartiteTree& a, const BipartiteTree& b) {
    if (a == b) return std::nullopt;
    const int n = a.n, d = a.d;
    // Arcs: v_i -> w_j for edges of a, w_j -> v_i for edges of b. An edge in
    // both trees contributes both arcs; simple cycles of length >= 4 are
    // exactly the alternating circuits.
    std::vector<char> v_used(n + 1, 0), w_used(d + 1, 0);
    std::vector<int> path;
    int start = 0;
    std::function<bool(int)> from_w; // current vertex is w_j
    std::function<bool(int)> from_v = [&](int i) -> bool {
        for (int j = 1; j <= d; ++j) {
            if (!a.has_edge(i, j) || w_used[j]) continue;
            w_used[j] = 1;
            path.push_back(-j);
            if (from_w(j)) return true;
            path.pop_back();
            w_used[j] = 0;
        }
        return false;
    };
    from_w = [&](int j) -> bool {
        for (int i = 1; i <= n; ++i) {
            if (!b.has_edge(i, j)) continue;
            if (i == start && path.size() >= 3) return true; // closes a >=4 cycle
            if (v_used[i]) continue;
            v_used[i] = 1;
            path.push_back(i);
            if (from_v(i)) return true;
            path.pop_back();
            v_used[i] = 0;
        }
        return false;
    };
    for (start = 1; start <= n; ++start) {
        std::fill(v_used.begin(), v_used.end(), 0);
        std::fill(w_used.begin(), w_used.end(), 0);
        path.assign(1, start);
        v_used[start] = 1;
        if (from_v(start)) return path;
    }
    return std::nullopt;
}

TriangulationDiagnostics verify_triangulation(const TreeCollection& c) {
    TriangulationDiagnostics diag;
    if (c.trees.empty()) {
        diag.ok = false;
        diag.failed_condition = 0;
        diag.message = "empty collection";
        return diag;
    }
    for (size_t i = 0; i < c.trees.size(); ++i) {
        const auto& t = c.trees[i];
        std::string why;
        if (t.n != c.n || t.d != c.d) {
            diag.ok = false;
            diag.failed_condition = 0;
            diag.tree_a = static_cast<int>(i);
            diag.message = "tree has mismatched (n, d)";
            return diag;
        }
        if (!is_spanning_tree(t.n, t.d, t.edges, &why)) {
            diag.ok = false;
            diag.failed_condition = 1;
            diag.tree_a = static_cast<int>(i);
            diag.message = "not a spanning tree: " + why;
            return diag;
        }
    }
    for (size_t i = 0; i < c.trees.size(); ++i)
        for (size_t j = i + 1; j < c.trees.size(); ++j)
            if (c.trees[i] == c.trees[j]) {
                diag.ok = false;
                diag.failed_condition = 0;
                diag.tree_a = static_cast<int>(i);
                diag.tree_b = static_cast<int>(j);
                diag.message = "repeated tree";
                return diag;
            }

    // Condition 2: every internal edge flips to another tree in the collection.
    for (size_t i = 0; i < c.trees.size(); ++i) {
        const auto& t = c.trees[i];
        for (const auto& e : t.edges) {
            if (t.deg_v(e.first) < 2 || t.deg_w(e.second) < 2) continue; // adjacent to a leaf
            bool found = false;
            for (size_t j = 0; j < c.trees.size() && !found; ++j) {
                if (j == i) continue;
                const auto& u = c.trees[j];
                std::vector<Edge> only_t;
                std::set_difference(t.edges.begin(), t.edges.end(), u.edges.begin(), u.edges.end(),
                                    std::back_inserter(only_t));
                found = only_t.size() == 1 && only_t[0] == e;
            }
            if (!found) {
                diag.ok = false;
                diag.failed_condition = 2;
                diag.tree_a = static_cast<int>(i);
                diag.edge = e;
                diag.message = "internal edge admits no flip inside the collection";
                return diag;
            }
        }
    }

    // Condition 3: no pair of trees overlaps on an alternating circuit.
    for (size_t i = 0; i < c.trees.size(); ++i)
        for (size_t j = i + 1; j < c.trees.size(); ++j)
            if (auto cyc = alternating_circuit(c.trees[i], c.trees[j])) {
                diag.ok = false;
                diag.failed_condition = 3;
                diag.tree_a = static_cast<int>(i);
                diag.tree_b = static_cast<int>(j);
                diag.cycle = *cyc;
                diag.message = "two trees overlap on an alternating circuit";
                return diag;
            }
    return diag;
}

FineMixedCell cayley_cell(const BipartiteTree& t) {
    FineMixedCell cell;
    cell.summands.assign(t.n, {});
    for (const auto& [i, j] : t.edges) cell.summands[i - 1].push_back(j);
    return cell;
}

core::LatticePoint location(const BipartiteTree& t) {
    core::LatticePoint loc(t.d, 0);
    for (const auto& e : t.edges) loc[e.second - 1] += 1;
    for (int& x : loc) x -= 1;
    return loc;
}

TightResult tight_weighting(const BipartiteTree& t, const WeightMatrix& w) {
    if (w.n != t.n || w.d != t.d) throw UsageError("tight_weighting: weight shape mismatch");
    TightResult res;
    res.u.assign(t.n, 0);
    res.v.assign(t.d, 0);
    std::vector<char> u_set(t.n, 0), v_set(t.d, 0);
    u_set[0] = 1; // u_1 = 0
    // Propagate equalities along tree edges until fixed.
    bool progress = true;
    while (progress) {
        progress = false;
        for (const auto& [i, j] : t.edges) {
            if (u_set[i - 1] && !v_set[j - 1]) {
                res.v[j - 1] = w.w[i - 1][j - 1] - res.u[i - 1];
                v_set[j - 1] = 1;
                progress = true;
            } else if (!u_set[i - 1] && v_set[j - 1]) {
                res.u[i - 1] = w.w[i - 1][j - 1] - res.v[j - 1];
                u_set[i - 1] = 1;
                progress = true;
            }
        }
    }
    res.tight = true;
    for (int i = 1; i <= t.n && res.tight; ++i)
        for (int j = 1; j <= t.d; ++j) {
            if (t.has_edge(i, j)) continue;
            const linalg::Rational slack = res.u[i - 1] + res.v[j - 1] - w.w[i - 1][j - 1];
            if (slack < 0) {
                res.tight = false;
                break;
            }
            if (slack == 0 && !res.degenerate) {
                res.degenerate = true;
                res.tight_nontree_edge = Edge{i, j};
            }
        }
    return res;
}

namespace {

std::uint64_t binomial(int a, int b) {
    if (b < 0 || b > a) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= b; ++i) r = r * static_cast<std::uint64_t>(a - b + i) / static_cast<std::uint64_t>(i);
    return r;
}

} // namespace

TreeCollection regular_triangulation(int n, int d, const WeightMatrix& w, std::uint64_t budget) {
    TreeCollection out;
    out.n = n;
    out.d = d;
    for (const auto& t : enumerate_spanning_trees(n, d, budget)) {
        TightResult res = tight_weighting(t, w);
        if (!res.tight) continue;
        if (res.degenerate) {
            const auto [i, j] = *res.tight_nontree_edge;
            throw NonGenericError("regular_triangulation: weights are not generic; non-tree edge (" +
                                  std::to_string(i) + "," + std::to_string(j) +
                                  ") is tight alongside a whole tree");
        }
        out.trees.push_back(t);
    }
    if (out.trees.size() != binomial(n + d - 2, d - 1))
        throw Error("regular_triangulation: cell count " + std::to_string(out.trees.size()) +
                    " differs from the expected " + std::to_string(binomial(n + d - 2, d - 1)));
    TriangulationDiagnostics diag = verify_triangulation(out);
    if (!diag.ok) throw Error("regular_triangulation: output failed verification: " + diag.message);
    return out;
}

WeightMatrix random_weights(int n, int d, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::set<std::uint64_t> seen;
    WeightMatrix w;
    w.n = n;
    w.d = d;
    w.w.assign(n, std::vector<linalg::Rational>(d, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < d; ++j) {
            std::uint64_t x;
            do {
                x = uniform_below(rng, std::uint64_t(1) << 32);
            } while (!seen.insert(x).second);
            w.w[i][j] = static_cast<unsigned long>(x);
        }
    return w;
}

std::vector<PureTree> pure_trees(const TreeCollection& c) {
    std::vector<PureTree> out;
    for (int i = 1; i <= c.n; ++i) {
        const BipartiteTree* hit = nullptr;
        for (const auto& t : c.trees) {
            if (t.deg_v(i) != c.d) continue;
            if (hit) throw UsageError("pure_trees: duplicated " + std::to_string(i) + "-pure tree; not a triangulation");
            hit = &t;
        }
        if (!hit) throw UsageError("pure_trees: missing " + std::to_string(i) + "-pure tree; not a triangulation");
        out.push_back({i, *hit, location(*hit)});
    }
    return out;
}

bool locations_form_basis(const TreeCollection& c, std::string* message) {
    const auto pure = pure_trees(c);
    core::GroundSet g(c.n, c.d);
    std::vector<core::LatticePoint> pts;
    for (const auto& p : pure) pts.push_back(p.loc);
    const bool ok = core::is_basis(g, core::PointSet(g, pts));
    if (!ok && message)
        *message = "pure-simplex locations are not a basis: this indicates an implementation bug or "
                   "an input that is not a triangulation";
    return ok;
}

EdgeColoring derived_coloring(const TreeCollection& c) {
    const auto pure = pure_trees(c);
    EdgeColoring col;
    col.n = c.n;
    col.d = c.d;
    col.color.assign(c.n, std::vector<int>(c.n, 0));
    for (const auto& p : pure)
        for (int j = 1; j <= c.n; ++j) {
            if (j == p.i) continue;
            for (const auto& e : p.tree.edges)
                if (e.first == j) {
                    col.color[p.i - 1][j - 1] = e.second;
                    break;
                }
        }
    return col;
}

bool check_poset_coloring(const EdgeColoring& col) {
    const int n = col.n;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            if (col.color[u][v] < 1 || col.color[u][v] > col.d) return false;
            if (col.color[u][v] == col.color[v][u]) return false;
        }
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            for (int w = 0; w < n; ++w) {
                if (u == v || v == w || u == w) continue;
                if (col.color[u][v] == col.color[v][w] && col.color[u][w] != col.color[u][v]) return false;
            }
    return true;
}

std::vector<int> outgoing(const EdgeColoring& col, const std::vector<int>& a) {
    if (static_cast<int>(a.size()) != col.d) throw UsageError("outgoing: need one bound per color");
    std::vector<int> out;
    for (int v = 1; v <= col.n; ++v) {
        std::vector<int> cnt(col.d + 1, 0);
        for (int w = 1; w <= col.n; ++w)
            if (w != v) cnt[col.color[v - 1][w - 1]]++;
        bool ok = true;
        for (int i = 1; i <= col.d; ++i)
            if (cnt[i] < a[i - 1]) { ok = false; break; }
        if (ok) out.push_back(v);
    }
    return out;
}

EdgeColoring extremal_coloring(int n, const std::vector<int>& a) {
    const int d = static_cast<int>(a.size());
    if (d < 2) throw UsageError("extremal_coloring: need d >= 2");
    int sum = 0;
    for (int x : a) {
        if (x < 0) throw UsageError("extremal_coloring: negative bound");
        sum += x;
    }
    if (sum > n - 1) throw UsageError("extremal_coloring: bounds sum past n-1");
    // Blocks A_1..A_d of sizes a_1..a_d, then A; all consecutive in [n].
    std::vector<int> block(n + 1, 0); // 0 means the free block A
    int next = 1;
    for (int i = 1; i <= d; ++i)
        for (int k = 0; k < a[i - 1]; ++k) block[next++] = i;
    EdgeColoring col;
    col.n = n;
    col.d = d;
    col.color.assign(n, std::vector<int>(n, 0));
    for (int u = 1; u <= n; ++u)
        for (int v = 1; v <= n; ++v) {
            if (u == v) continue;
            int c;
            if (block[u] == 0 && block[v] == 0)
                c = u < v ? d : 1;
            else if (block[u] == 0)
                c = block[v];
            else if (block[v] == 0)
                c = block[u] == 1 ? d : 1;
            else
                c = u < v ? d : 1; // inside A_1 u ... u A_d, ordered by block
            col.color[u - 1][v - 1] = c;
        }
    return col;
}

std::vector<TreeCollection> all_triangulations(int n, int d, std::uint64_t budget) {
    const auto trees = enumerate_spanning_trees(n, d, budget);
    const int target = static_cast<int>(binomial(n + d - 2, d - 1));
    std::vector<TreeCollection> found;
    std::vector<int> chosen;
    std::uint64_t nodes = 0;
    // Pairwise circuit-freedom is inherited by subsets, so it prunes safely.
    std::function<void(int)> rec = [&](int start) {
        if (++nodes > budget) throw BudgetExceeded("all_triangulations: search budget exceeded");
        if (static_cast<int>(chosen.size()) == target) {
            TreeCollection c;
            c.n = n;
            c.d = d;
            for (int idx : chosen) c.trees.push_back(trees[idx]);
            if (verify_triangulation(c).ok) found.push_back(std::move(c));
            return;
        }
        for (int i = start; i < static_cast<int>(trees.size()); ++i) {
            bool compatible = true;
            for (int idx : chosen)
                if (alternating_circuit(trees[idx], trees[i])) { compatible = false; break; }
            if (!compatible) continue;
            chosen.push_back(i);
            rec(i + 1);
            chosen.pop_back();
        }
    };
    rec(0);
    return found;
}

SurveyReport survey_conjecture(int n, int d, SurveyMode mode, std::uint64_t samples, std::uint64_t seed, int grid,
                               std::uint64_t budget) {
    core::GroundSet g(n, d);
    SurveyReport report;
    report.n = n;
    report.d = d;
    report.mode = mode;
    for (const auto& b : core::enumerate_bases(g, budget)) report.entries.push_back({b, false, {}, {}});

    auto record = [&](const TreeCollection& c, const std::optional<WeightMatrix>& w) {
        ++report.generic_samples;
        std::vector<core::LatticePoint> pts;
        for (const auto& p : pure_trees(c)) pts.push_back(p.loc);
        core::PointSet basis(g, pts);
        for (auto& entry : report.entries) {
            if (entry.basis.members() != basis.members()) continue;
            if (!entry.realized) {
                entry.realized = true;
                entry.witness_weights = w;
                if (!w) entry.witness_trees = c;
            }
            return;
        }
        throw Error("survey: realized locations are not a basis of the ground matroid");
    };

    switch (mode) {
        case SurveyMode::RandomSeeds: {
            for (std::uint64_t s = 0; s < samples; ++s) {
                ++report.samples;
                WeightMatrix w = random_weights(n, d, derive_seed(seed, s));
                try {
                    record(regular_triangulation(n, d, w, budget), w);
                } catch (const NonGenericError&) {
                }
            }
            break;
        }
        case SurveyMode::ExhaustiveWeightsGrid: {
            const int cells = n * d;
            std::vector<int> idx(cells, 0);
            for (;;) {
                if (++report.samples > budget) throw BudgetExceeded("survey: weight grid exceeds budget");
                WeightMatrix w;
                w.n = n;
                w.d = d;
                w.w.assign(n, std::vector<linalg::Rational>(d, 0));
                for (int k = 0; k < cells; ++k) w.w[k / d][k % d] = idx[k];
                try {
                    record(regular_triangulation(n, d, w, budget), w);
                } catch (const NonGenericError&) {
                }
                int k = cells - 1;
                while (k >= 0 && idx[k] == grid - 1) idx[k--] = 0;
                if (k < 0) break;
                ++idx[k];
            }
            break;
        }
        case SurveyMode::TreeSearch: {
            for (const auto& c : all_triangulations(n, d, budget)) {
                ++report.samples;
                record(c, std::nullopt);
            }
            break;
        }
    }
    return report;
}

} // namespace linemat::trees
