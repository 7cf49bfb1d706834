#pragma once

#include <initializer_list>
#include <vector>

#include "linemat/rational.hpp"

namespace linemat::linalg {

// Dense matrix of exact rationals, row-major.
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, Rational(0)) {}
    Mat(std::initializer_list<std::initializer_list<Rational>> rows);

    static Mat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
    const Rational& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }

    Mat transposed() const;
    std::vector<Rational> col(int c) const;
    std::vector<Rational> row(int r) const;

    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rational> e_;
};

Mat from_columns(const std::vector<std::vector<Rational>>& cols);
Mat hstack(const Mat& a, const Mat& b);

// Exact rank via fraction-free (Bareiss) elimination on the denominator-cleared
// integer matrix. Pivot: first row with a nonzero entry in column order.
int rank_of(const Mat& m);

// Exact determinant, same elimination scheme. Throws UsageError on non-square input.
Rational det(const Mat& m);

// Reduced row echelon form. Deterministic (first-nonzero pivots), hence usable
// as a canonical form.
Mat rref(const Mat& m);

// Columns span the kernel {x : m x = 0}; each free variable set to 1 in turn.
Mat nullspace(const Mat& m);

} // namespace linemat::linalg
