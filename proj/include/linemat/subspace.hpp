#pragma once

#include <vector>

#include "linemat/matrix.hpp"

namespace linemat::linalg {

// Linear subspace of Q^n. The stored basis is the reduced row echelon form of
// any generating set, so equal subspaces compare equal and serialize
// identically.
class Subspace {
public:
    Subspace() = default;
    static Subspace zero(int ambient) { return Subspace(ambient, Mat(0, ambient)); }

    // Span of the given vectors (each of length `ambient`).
    static Subspace span(int ambient, const std::vector<std::vector<Rational>>& vectors);

    // Span of the first `k` columns of `m`.
    static Subspace column_prefix_span(const Mat& m, int k);

    int ambient() const { return ambient_; }
    int dim() const { return basis_.rows(); }

    // Canonical generators, one per row.
    const Mat& basis_rows() const { return basis_; }
    std::vector<Rational> generator(int i) const { return basis_.row(i); }

    bool contains(const std::vector<Rational>& v) const;
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }

private:
    Subspace(int ambient, Mat basis) : ambient_(ambient), basis_(std::move(basis)) {}

    int ambient_ = 0;
    Mat basis_; // dim x ambient, canonical RREF
};

Subspace intersect(const Subspace& u, const Subspace& v);
Subspace sum(const Subspace& u, const Subspace& v);

} // namespace linemat::linalg
