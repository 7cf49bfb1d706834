#include "linemat/subspace.hpp"

namespace linemat::linalg {

namespace {

// Drops the zero rows of an RREF matrix.
Mat nonzero_rows(const Mat& r) {
    std::vector<std::vector<Rational>> rows;
    for (int i = 0; i < r.rows(); ++i) {
        bool nz = false;
        for (int c = 0; c < r.cols(); ++c)
            if (r.at(i, c) != 0) { nz = true; break; }
        if (nz) rows.push_back(r.row(i));
    }
    Mat out(static_cast<int>(rows.size()), r.cols());
    for (size_t i = 0; i < rows.size(); ++i)
        for (int c = 0; c < r.cols(); ++c) out.at(static_cast<int>(i), c) = rows[i][c];
    return out;
}

} // namespace

Subspace Subspace::span(int ambient, const std::vector<std::vector<Rational>>& vectors) {
    Mat gens(static_cast<int>(vectors.size()), ambient);
    for (size_t i = 0; i < vectors.size(); ++i) {
        if (static_cast<int>(vectors[i].size()) != ambient) throw UsageError("span: vector length != ambient");
        for (int c = 0; c < ambient; ++c) gens.at(static_cast<int>(i), c) = vectors[i][c];
    }
    return Subspace(ambient, nonzero_rows(rref(gens)));
}

Subspace Subspace::column_prefix_span(const Mat& m, int k) {
    std::vector<std::vector<Rational>> cols;
    for (int c = 0; c < k; ++c) cols.push_back(m.col(c));
    return span(m.rows(), cols);
}

bool Subspace::contains(const std::vector<Rational>& v) const {
    Mat stacked(dim() + 1, ambient_);
    for (int r = 0; r < dim(); ++r)
        for (int c = 0; c < ambient_; ++c) stacked.at(r, c) = basis_.at(r, c);
    if (static_cast<int>(v.size()) != ambient_) throw UsageError("contains: vector length != ambient");
    for (int c = 0; c < ambient_; ++c) stacked.at(dim(), c) = v[c];
    return rank_of(stacked) == dim();
}

bool Subspace::contains(const Subspace& other) const {
    for (int i = 0; i < other.dim(); ++i)
        if (!contains(other.generator(i))) return false;
    return true;
}

Subspace intersect(const Subspace& u, const Subspace& v) {
    if (u.ambient() != v.ambient()) throw UsageError("intersect: ambient mismatch");
    const int n = u.ambient();
    if (u.dim() == 0 || v.dim() == 0) return Subspace::zero(n);
    // Solve B_u^T x = B_v^T y: kernel of [B_u^T | -B_v^T].
    Mat bu = u.basis_rows().transposed();
    Mat bv = v.basis_rows().transposed();
    Mat neg(n, bv.cols());
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < bv.cols(); ++c) neg.at(r, c) = -bv.at(r, c);
    Mat ker = nullspace(hstack(bu, neg));
    std::vector<std::vector<Rational>> gens;
    for (int k = 0; k < ker.cols(); ++k) {
        std::vector<Rational> vec(n, Rational(0));
        for (int c = 0; c < bu.cols(); ++c)
            for (int r = 0; r < n; ++r) vec[r] += bu.at(r, c) * ker.at(c, k);
        gens.push_back(std::move(vec));
    }
    return Subspace::span(n, gens);
}

Subspace sum(const Subspace& u, const Subspace& v) {
    if (u.ambient() != v.ambient()) throw UsageError("sum: ambient mismatch");
    std::vector<std::vector<Rational>> gens;
    for (int i = 0; i < u.dim(); ++i) gens.push_back(u.generator(i));
    for (int i = 0; i < v.dim(); ++i) gens.push_back(v.generator(i));
    return Subspace::span(u.ambient(), gens);
}

} // namespace linemat::linalg
