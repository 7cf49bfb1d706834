#pragma once

#include <map>
#include <string>
#include <vector>

#include "linemat/rational.hpp"

namespace linemat::lgv {

// Multivariate polynomial with integer coefficients over a fixed set of
// variables 0..nvars-1. Monomials are exponent vectors; the map keeps them in
// lexicographic order, which is also the printing order. Built for tiny
// instances, so clarity beats speed.
class Poly {
public:
    using Monomial = std::vector<int>;

    Poly() = default;
    explicit Poly(int nvars) : nvars_(nvars) {}

    static Poly constant(int nvars, const linalg::Integer& c);
    static Poly variable(int nvars, int index);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    const std::map<Monomial, linalg::Integer>& terms() const { return terms_; }

    // Monomials as words: exponent e of variable i prints the i-th letter e
    // times, so x0*x2^2 over letters is "acc". Terms joined with +/-.
    std::string str() const;

private:
    void add_term(const Monomial& m, const linalg::Integer& c);

    int nvars_ = 0;
    std::map<Monomial, linalg::Integer> terms_;
};

// Laplace-expansion determinant of a square polynomial matrix (row-major).
Poly poly_det(const std::vector<std::vector<Poly>>& m);

// Largest r such that some r x r minor has nonzero determinant; with
// algebraically independent indeterminates this is the matrix rank over the
// function field.
int poly_rank(const std::vector<std::vector<Poly>>& m);

} // namespace linemat::lgv
