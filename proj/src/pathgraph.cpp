#include "linemat/pathgraph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "linemat/rng.hpp"

namespace linemat::lgv {

PathGraph::PathGraph(int n, WeightMode mode, std::uint64_t seed) : n_(n), mode_(mode), seed_(seed) {
    if (n < 1) throw UsageError("PathGraph: n must be >= 1");
    if (mode == WeightMode::Symbolic && n * (n - 1) > 26)
        throw UsageError("PathGraph: symbolic mode runs out of letters past n = 5");
    // Display order: rows bottom-up, left to right within each row.
    for (int x1 = 0; x1 <= n - 1; ++x1)
        for (int x3 = 0; x3 <= n - 1 - x1; ++x3) vertices_.push_back({x1, n - 1 - x1 - x3, x3});
    left_.assign(vertices_.size(), -1);
    right_.assign(vertices_.size(), -1);
    // Edge order doubles as the symbolic letter order: rows top-down, left to
    // right, down-left before down-right.
    for (int x1 = n - 1; x1 >= 1; --x1) {
        for (int x3 = 0; x3 <= n - 1 - x1; ++x3) {
            const int x2 = n - 1 - x1 - x3;
            const int v = index_of({x1, x2, x3});
            int var = static_cast<int>(edges_.size());
            left_[v] = var;
            edges_.push_back({v, index_of({x1 - 1, x2 + 1, x3}), mode == WeightMode::Symbolic ? var : -1});
            var = static_cast<int>(edges_.size());
            right_[v] = var;
            edges_.push_back({v, index_of({x1 - 1, x2, x3 + 1}), mode == WeightMode::Symbolic ? var : -1});
        }
    }
}

int PathGraph::index_of(const core::LatticePoint& p) const {
    if (static_cast<int>(p.size()) != 3) return -1;
    if (p[0] < 0 || p[1] < 0 || p[2] < 0 || p[0] + p[1] + p[2] != n_ - 1) return -1;
    // Row x1 starts after all shorter-to-the-bottom rows.
    int base = 0;
    for (int r = 0; r < p[0]; ++r) base += n_ - r;
    return base + p[2];
}

int PathGraph::bottom_vertex(int label) const {
    if (label < 1 || label > n_) throw UsageError("PathGraph: bottom label out of range");
    return label - 1; // bottom row occupies indices 0..n-1 left to right
}

std::vector<linalg::Integer> PathGraph::integer_weights(int stream) const {
    if (mode_ != WeightMode::RandomInteger) throw UsageError("integer_weights: graph is symbolic");
    std::mt19937_64 rng(derive_seed(seed_, static_cast<std::uint64_t>(stream)));
    std::set<std::uint64_t> seen;
    std::vector<linalg::Integer> w;
    w.reserve(edges_.size());
    while (w.size() < edges_.size()) {
        std::uint64_t x = 2 + uniform_below(rng, (std::uint64_t(1) << 60) - 1);
        if (!seen.insert(x).second) continue;
        linalg::Integer z;
        mpz_set_ui(z.get_mpz_t(), static_cast<unsigned long>(x));
        w.push_back(z);
    }
    return w;
}

namespace {

template <typename Scalar, typename WeightOf, typename MulAdd>
std::vector<Scalar> path_dp(const PathGraph& g, const core::LatticePoint& dot, const Scalar& zero,
                            const Scalar& one, WeightOf weight_of, MulAdd mul_add) {
    const int start = g.index_of(dot);
    if (start < 0) throw UsageError("path_vector: dot is not a vertex of the graph");
    std::vector<Scalar> acc(g.vertex_count(), zero);
    acc[start] = one;
    // Vertices are listed bottom-up, so a reverse sweep visits parents before
    // children.
    for (int v = g.vertex_count() - 1; v >= 0; --v) {
        if (g.left_edge(v) < 0) continue;
        for (int e : {g.left_edge(v), g.right_edge(v)}) {
            const auto& edge = g.edges()[e];
            mul_add(acc[edge.to], acc[edge.from], weight_of(e));
        }
    }
    std::vector<Scalar> out;
    out.reserve(g.n());
    for (int i = 1; i <= g.n(); ++i) out.push_back(acc[g.bottom_vertex(i)]);
    return out;
}

} // namespace

std::vector<Poly> symbolic_path_vector(const PathGraph& g, const core::LatticePoint& dot) {
    if (g.mode() != WeightMode::Symbolic) throw UsageError("symbolic_path_vector: graph is not symbolic");
    const int nv = static_cast<int>(g.edges().size());
    return path_dp<Poly>(
        g, dot, Poly(nv), Poly::constant(nv, 1), [&](int e) { return Poly::variable(nv, g.edges()[e].var); },
        [](Poly& target, const Poly& src, const Poly& w) { target = target + src * w; });
}

std::vector<linalg::Integer> integer_path_vector(const PathGraph& g, const core::LatticePoint& dot, int stream) {
    auto w = g.integer_weights(stream);
    return path_dp<linalg::Integer>(
        g, dot, linalg::Integer(0), linalg::Integer(1), [&](int e) { return w[e]; },
        [](linalg::Integer& target, const linalg::Integer& src, const linalg::Integer& weight) {
            target += src * weight;
        });
}

std::vector<std::vector<Poly>> symbolic_path_matrix(const PathGraph& g,
                                                    const std::vector<core::LatticePoint>& dots) {
    const int nv = static_cast<int>(g.edges().size());
    std::vector<std::vector<Poly>> m(g.n(), std::vector<Poly>(dots.size(), Poly(nv)));
    for (size_t c = 0; c < dots.size(); ++c) {
        auto col = symbolic_path_vector(g, dots[c]);
        for (int r = 0; r < g.n(); ++r) m[r][c] = col[r];
    }
    return m;
}

linalg::Mat integer_path_matrix(const PathGraph& g, const std::vector<core::LatticePoint>& dots, int stream) {
    linalg::Mat m(g.n(), static_cast<int>(dots.size()));
    for (size_t c = 0; c < dots.size(); ++c) {
        auto col = integer_path_vector(g, dots[c], stream);
        for (int r = 0; r < g.n(); ++r) m.at(r, static_cast<int>(c)) = linalg::Rational(col[r]);
    }
    return m;
}

int lgv_rank(const PathGraph& g, const core::PointSet& dots) {
    for (const auto& p : dots.members())
        if (g.index_of(p) < 0) throw UsageError("lgv: dot outside the graph");
    if (dots.size() == 0) return 0;
    if (g.mode() == WeightMode::Symbolic) return poly_rank(symbolic_path_matrix(g, dots.members()));
    int r0 = linalg::rank_of(integer_path_matrix(g, dots.members(), 0));
    for (int stream = 1; stream < 3; ++stream) {
        if (linalg::rank_of(integer_path_matrix(g, dots.members(), stream)) != r0)
            throw CollisionError("lgv: weight streams disagree on rank; resample the seed");
    }
    return r0;
}

bool lgv_independent(const PathGraph& g, const core::PointSet& dots) {
    return lgv_rank(g, dots) == dots.size();
}

namespace {

// Unit-capacity max flow specialized to this DAG: each vertex split into
// in/out halves so paths are vertex-disjoint.
struct Flow {
    struct Arc {
        int to, rev;
        int cap;
    };
    std::vector<std::vector<Arc>> adj;

    explicit Flow(int nodes) : adj(nodes) {}

    void add(int from, int to) {
        adj[from].push_back({to, static_cast<int>(adj[to].size()), 1});
        adj[to].push_back({from, static_cast<int>(adj[from].size()) - 1, 0});
    }

    bool augment(int s, int t) {
        std::vector<std::pair<int, int>> parent(adj.size(), {-1, -1});
        std::queue<int> q;
        q.push(s);
        parent[s] = {s, -1};
        while (!q.empty() && parent[t].first < 0) {
            int v = q.front();
            q.pop();
            for (size_t i = 0; i < adj[v].size(); ++i) {
                const Arc& a = adj[v][i];
                if (a.cap > 0 && parent[a.to].first < 0) {
                    parent[a.to] = {v, static_cast<int>(i)};
                    q.push(a.to);
                }
            }
        }
        if (parent[t].first < 0) return false;
        for (int v = t; v != s;) {
            auto [pv, pi] = parent[v];
            adj[pv][pi].cap -= 1;
            adj[adj[pv][pi].to][adj[pv][pi].rev].cap += 1;
            v = pv;
        }
        return true;
    }
};

// in(v) = 2v, out(v) = 2v+1, source = 2V, sink = 2V+1.
int run_flow(const PathGraph& g, const core::PointSet& sources, Flow& flow) {
    for (const auto& p : sources.members())
        if (g.index_of(p) < 0) throw UsageError("routing: source outside the graph");
    const int V = g.vertex_count();
    const int S = 2 * V, T = 2 * V + 1;
    for (int v = 0; v < V; ++v) flow.add(2 * v, 2 * v + 1);
    for (const auto& p : sources.members()) flow.add(S, 2 * g.index_of(p));
    for (int v = 0; v < V; ++v) {
        if (g.left_edge(v) < 0) continue;
        flow.add(2 * v + 1, 2 * g.edges()[g.left_edge(v)].to);
        flow.add(2 * v + 1, 2 * g.edges()[g.right_edge(v)].to);
    }
    for (int i = 1; i <= g.n(); ++i) flow.add(2 * g.bottom_vertex(i) + 1, T);
    int value = 0;
    while (flow.augment(S, T)) ++value;
    return value;
}

} // namespace

std::optional<Routing> routing_exists(const PathGraph& g, const core::PointSet& sources) {
    const int V = g.vertex_count();
    const auto in = [](int v) { return 2 * v; };
    const auto out = [](int v) { return 2 * v + 1; };
    const int T = 2 * V + 1;
    Flow flow(2 * V + 2);
    if (run_flow(g, sources, flow) < sources.size()) return std::nullopt;

    Routing routing;
    for (const auto& p : sources.members()) {
        std::vector<core::LatticePoint> path{p};
        int v = g.index_of(p);
        for (;;) {
            // Saturated arc out(v) -> in(next); bottom vertices only reach T.
            int next = -1;
            for (const Flow::Arc& a : flow.adj[out(v)]) {
                if (a.cap == 0 && a.to != in(v) && a.to != T && a.to % 2 == 0) {
                    next = a.to / 2;
                    break;
                }
                if (a.cap == 0 && a.to == T) break;
            }
            if (next < 0) break;
            path.push_back(g.vertices()[next]);
            v = next;
        }
        routing.paths.push_back(std::move(path));
    }
    return routing;
}

int routing_rank(const PathGraph& g, const core::PointSet& sources) {
    Flow flow(2 * g.vertex_count() + 2);
    return run_flow(g, sources, flow);
}

} // namespace linemat::lgv
