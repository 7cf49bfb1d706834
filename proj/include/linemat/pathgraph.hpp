#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linemat/lattice.hpp"
#include "linemat/matrix.hpp"
#include "linemat/polynomial.hpp"

namespace linemat::lgv {

enum class WeightMode { RandomInteger, Symbolic };

// The planar DAG on T_{n,3}: every dot with x1 >= 1 points down-left to
// (x1-1, x2+1, x3) and down-right to (x1-1, x2, x3+1). Bottom-row dots
// (x1 = 0) are the sinks, labelled 1..n from left to right.
//
// Vertices are kept in display order: by row from the bottom up, left to
// right within a row. Edge letters in symbolic mode run row by row from the
// top, left to right, down-left edge before down-right.
class PathGraph {
public:
    PathGraph(int n, WeightMode mode, std::uint64_t seed = 0);

    int n() const { return n_; }
    WeightMode mode() const { return mode_; }
    std::uint64_t seed() const { return seed_; }

    const std::vector<core::LatticePoint>& vertices() const { return vertices_; }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int index_of(const core::LatticePoint& p) const; // -1 if absent

    struct Edge {
        int from, to;   // vertex indices
        int var = -1;   // symbolic variable id, or -1
    };
    const std::vector<Edge>& edges() const { return edges_; }

    // Down-left / down-right edge indices per vertex (-1 when on the bottom row).
    int left_edge(int v) const { return left_[v]; }
    int right_edge(int v) const { return right_[v]; }

    // Bottom-row vertex index for label i in 1..n.
    int bottom_vertex(int label) const;

    std::string variable_letter(int var) const { return std::string(1, static_cast<char>('a' + var)); }

    // Integer edge weights for one of the agreement streams (0..2). Distinct
    // values in [2, 2^60]; stream 0 is the graph's nominal weighting.
    std::vector<linalg::Integer> integer_weights(int stream) const;

private:
    int n_;
    WeightMode mode_;
    std::uint64_t seed_;
    std::vector<core::LatticePoint> vertices_;
    std::vector<Edge> edges_;
    std::vector<int> left_, right_;
};

// Component i = weighted sum over all monotone paths from `dot` to bottom
// label i; computed by dynamic programming down the rows.
std::vector<Poly> symbolic_path_vector(const PathGraph& g, const core::LatticePoint& dot);
std::vector<linalg::Integer> integer_path_vector(const PathGraph& g, const core::LatticePoint& dot, int stream);

// Path-vector matrix with one column per vertex in display order (the whole
// graph) or per requested dot.
std::vector<std::vector<Poly>> symbolic_path_matrix(const PathGraph& g, const std::vector<core::LatticePoint>& dots);
linalg::Mat integer_path_matrix(const PathGraph& g, const std::vector<core::LatticePoint>& dots, int stream);

// Independence of the path vectors of `dots`. Random mode runs all three
// weight streams and insists they agree (CollisionError otherwise); symbolic
// mode decides exactly via polynomial minors.
bool lgv_independent(const PathGraph& g, const core::PointSet& dots);

// Rank of the set of path vectors, with the same agreement protocol.
int lgv_rank(const PathGraph& g, const core::PointSet& dots);

// Vertex-disjoint directed paths, each listed source-to-sink as vertex points.
struct Routing {
    std::vector<std::vector<core::LatticePoint>> paths;
};

// Max-flow on the vertex-split DAG; a full routing onto distinct bottom
// vertices exists iff the flow saturates all sources.
std::optional<Routing> routing_exists(const PathGraph& g, const core::PointSet& sources);

// Number of vertex-disjoint paths from `sources` onto distinct bottom
// vertices (the cotransversal rank of the set).
int routing_rank(const PathGraph& g, const core::PointSet& sources);

} // namespace linemat::lgv
