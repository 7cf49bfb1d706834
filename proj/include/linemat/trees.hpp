#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linemat/lattice.hpp"
#include "linemat/matrix.hpp"

namespace linemat::trees {

using Edge = std::pair<int, int>; // (i, j): v-vertex i in 1..n, w-vertex j in 1..d

// Spanning tree of K_{n,d}, edges sorted.
struct BipartiteTree {
    int n = 0, d = 0;
    std::vector<Edge> edges;

    bool has_edge(int i, int j) const;
    int deg_v(int i) const;
    int deg_w(int j) const;
    bool operator==(const BipartiteTree& o) const { return n == o.n && d == o.d && edges == o.edges; }
    bool operator<(const BipartiteTree& o) const { return edges < o.edges; }
};

BipartiteTree make_tree(int n, int d, std::vector<Edge> edges); // validates spanning-tree shape

struct TreeCollection {
    int n = 0, d = 0;
    std::vector<BipartiteTree> trees;
};

// Minkowski summands: entry i lists the w-vertices adjacent to v_i.
struct FineMixedCell {
    std::vector<std::vector<int>> summands;
};

struct WeightMatrix {
    int n = 0, d = 0;
    std::vector<std::vector<linalg::Rational>> w; // n rows, d cols
};

// Total coloring of the n(n-1) ordered pairs over {1..n} with colors 1..d.
struct EdgeColoring {
    int n = 0, d = 0;
    std::vector<std::vector<int>> color; // color[i-1][j-1], 0 on the diagonal
};

// All spanning trees of K_{n,d} in canonical (lexicographic edge-set) order.
// Refuses when the Cayley count n^(d-1) d^(n-1) exceeds the budget.
std::vector<BipartiteTree> enumerate_spanning_trees(int n, int d, std::uint64_t budget = 1'000'000);

struct TriangulationDiagnostics {
    bool ok = true;
    int failed_condition = 0; // 0 input, 1 trees, 2 flip closure, 3 alternating circuit
    std::string message;
    int tree_a = -1, tree_b = -1;
    std::optional<Edge> edge;
    std::vector<int> cycle; // alternating circuit as vertex ids: +i for v_i, -j for w_j
};

// The three-part characterization: spanning trees, every internal edge
// flippable inside the collection, and no alternating circuit between two
// trees. Shared edges participate in circuits on either side.
TriangulationDiagnostics verify_triangulation(const TreeCollection& c);

// Alternating circuit between two trees, if any (length >= 4, distinct
// vertices). Symmetric in its arguments; empty for equal trees.
std::optional<std::vector<int>> alternating_circuit(const BipartiteTree& a, const BipartiteTree& b);

FineMixedCell cayley_cell(const BipartiteTree& t);
core::LatticePoint location(const BipartiteTree& t); // (deg w_1 - 1, ..., deg w_d - 1)

struct TightResult {
    bool tight = false;               // all non-tree slacks >= 0
    bool degenerate = false;          // some non-tree edge met with equality
    std::optional<Edge> tight_nontree_edge;
    std::vector<linalg::Rational> u, v;
};

// Propagates u_1 = 0 along the tree, then checks u_i + v_j >= w_ij off it.
TightResult tight_weighting(const BipartiteTree& t, const WeightMatrix& w);

// Trees whose weighting is strictly tight. Throws NonGenericError (with the
// witness edge) when a tight tree meets some non-tree edge with equality.
// Output is checked: binomial(n+d-2, d-1) cells and a valid triangulation.
TreeCollection regular_triangulation(int n, int d, const WeightMatrix& w, std::uint64_t budget = 1'000'000);

WeightMatrix random_weights(int n, int d, std::uint64_t seed);

struct PureTree {
    int i = 0; // v-vertex of degree d
    BipartiteTree tree;
    core::LatticePoint loc;
};

// Exactly one i-pure tree per i; anything else means the input was not a
// triangulation.
std::vector<PureTree> pure_trees(const TreeCollection& c);

// Always true on genuine triangulations; false signals a bug or bad input,
// and the message says so.
bool locations_form_basis(const TreeCollection& c, std::string* message = nullptr);

EdgeColoring derived_coloring(const TreeCollection& c);
bool check_poset_coloring(const EdgeColoring& col);
std::vector<int> outgoing(const EdgeColoring& col, const std::vector<int>& a);

// The partition construction attaining the outgoing bound with equality.
EdgeColoring extremal_coloring(int n, const std::vector<int>& a);

enum class SurveyMode { RandomSeeds, ExhaustiveWeightsGrid, TreeSearch };

struct SurveyEntry {
    core::PointSet basis;
    bool realized = false;
    std::optional<WeightMatrix> witness_weights;  // random / grid modes
    std::optional<TreeCollection> witness_trees;  // tree-search mode
};

struct SurveyReport {
    int n = 0, d = 0;
    SurveyMode mode = SurveyMode::RandomSeeds;
    std::uint64_t samples = 0;         // weight matrices tried or collections visited
    std::uint64_t generic_samples = 0; // samples that yielded a triangulation
    std::vector<SurveyEntry> entries;  // one per basis, canonical order
};

// Maps every basis to evidence that some (regular, in the weight modes)
// triangulation realizes it; unrealized bases stay marked open.
SurveyReport survey_conjecture(int n, int d, SurveyMode mode, std::uint64_t samples, std::uint64_t seed,
                               int grid = 3, std::uint64_t budget = 10'000'000);

// Every collection of spanning trees that verifies as a triangulation, by
// exhaustive search over subsets of the given size. Sizes beyond the cell
// count of a triangulation cannot occur; used for ground-truth tests.
std::vector<TreeCollection> all_triangulations(int n, int d, std::uint64_t budget = 10'000'000);

} // namespace linemat::trees
