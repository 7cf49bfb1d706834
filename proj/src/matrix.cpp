#include "linemat/matrix.hpp"

#include <utility>

namespace linemat::linalg {

Mat::Mat(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
    e_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_) throw UsageError("ragged matrix literal");
        for (const auto& x : r) e_.push_back(x);
    }
}

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::transposed() const {
    Mat t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

std::vector<Rational> Mat::col(int c) const {
    std::vector<Rational> v(rows_);
    for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

std::vector<Rational> Mat::row(int r) const {
    std::vector<Rational> v(cols_);
    for (int c = 0; c < cols_; ++c) v[c] = at(r, c);
    return v;
}

Mat from_columns(const std::vector<std::vector<Rational>>& cols) {
    if (cols.empty()) return Mat();
    Mat m(static_cast<int>(cols[0].size()), static_cast<int>(cols.size()));
    for (size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != cols[0].size()) throw UsageError("ragged column list");
        for (size_t r = 0; r < cols[c].size(); ++r) m.at(static_cast<int>(r), static_cast<int>(c)) = cols[c][r];
    }
    return m;
}

Mat hstack(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) throw UsageError("hstack: row mismatch");
    Mat m(a.rows(), a.cols() + b.cols());
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) m.at(r, c) = a.at(r, c);
        for (int c = 0; c < b.cols(); ++c) m.at(r, a.cols() + c) = b.at(r, c);
    }
    return m;
}

namespace {

// Clears denominators row by row; rank is unchanged, det picks up the product
// of the row scales.
struct IntegerForm {
    std::vector<std::vector<Integer>> a;
    Integer scale = 1; // product of per-row multipliers
};

IntegerForm clear_denominators(const Mat& m) {
    IntegerForm f;
    f.a.assign(m.rows(), std::vector<Integer>(m.cols()));
    for (int r = 0; r < m.rows(); ++r) {
        Integer l = 1;
        for (int c = 0; c < m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(r, c).get_den_mpz_t());
        for (int c = 0; c < m.cols(); ++c) {
            const Rational& q = m.at(r, c);
            f.a[r][c] = q.get_num() * (l / q.get_den());
        }
        f.scale *= l;
    }
    return f;
}

// Fraction-free elimination; returns (rank, sign-adjusted last pivot).
// After step k the entries are the k+1 minors of the original matrix, so all
// divisions below are exact.
std::pair<int, Integer> bareiss(std::vector<std::vector<Integer>>& a) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    Integer prev = 1;
    Integer last_pivot = 1;
    int sign = 1;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (a[r][c] != 0) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != rank) { std::swap(a[piv], a[rank]); sign = -sign; }
        for (int r = rank + 1; r < rows; ++r) {
            for (int cc = c + 1; cc < cols; ++cc) {
                Integer t = a[rank][c] * a[r][cc] - a[r][c] * a[rank][cc];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a[r][cc] = std::move(t);
            }
            a[r][c] = 0;
        }
        prev = a[rank][c];
        last_pivot = sign * prev;
        ++rank;
    }
    return {rank, last_pivot};
}

} // namespace

int rank_of(const Mat& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    IntegerForm f = clear_denominators(m);
    return bareiss(f.a).first;
}

Rational det(const Mat& m) {
    if (m.rows() != m.cols()) throw UsageError("det: matrix not square");
    if (m.rows() == 0) return 1;
    IntegerForm f = clear_denominators(m);
    auto [rank, pivot] = bareiss(f.a);
    if (rank < m.rows()) return 0;
    Rational r(pivot, f.scale);
    r.canonicalize();
    return r;
}

Mat rref(const Mat& m) {
    Mat a = m;
    int lead = 0;
    for (int c = 0; c < a.cols() && lead < a.rows(); ++c) {
        int piv = -1;
        for (int r = lead; r < a.rows(); ++r)
            if (a.at(r, c) != 0) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != lead)
            for (int cc = 0; cc < a.cols(); ++cc) std::swap(a.at(piv, cc), a.at(lead, cc));
        Rational inv = a.at(lead, c);
        for (int cc = 0; cc < a.cols(); ++cc) a.at(lead, cc) /= inv;
        for (int r = 0; r < a.rows(); ++r) {
            if (r == lead || a.at(r, c) == 0) continue;
            Rational f = a.at(r, c);
            for (int cc = 0; cc < a.cols(); ++cc) a.at(r, cc) -= f * a.at(lead, cc);
        }
        ++lead;
    }
    return a;
}

Mat nullspace(const Mat& m) {
    const int n = m.cols();
    Mat r = rref(m);
    std::vector<int> pivot_col;
    std::vector<bool> is_pivot(n, false);
    for (int row = 0; row < r.rows(); ++row) {
        for (int c = 0; c < n; ++c) {
            if (r.at(row, c) != 0) {
                pivot_col.push_back(c);
                is_pivot[c] = true;
                break;
            }
        }
    }
    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(n, Rational(0));
        v[free] = 1;
        for (size_t row = 0; row < pivot_col.size(); ++row) v[pivot_col[row]] = -r.at(static_cast<int>(row), free);
        basis.push_back(std::move(v));
    }
    if (basis.empty()) return Mat(n, 0);
    return from_columns(basis);
}

} // namespace linemat::linalg
