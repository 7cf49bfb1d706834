#include "linemat/polynomial.hpp"

#include <algorithm>
#include <functional>

namespace linemat::lgv {

Poly Poly::constant(int nvars, const linalg::Integer& c) {
    Poly p(nvars);
    if (c != 0) p.terms_[Monomial(nvars, 0)] = c;
    return p;
}

Poly Poly::variable(int nvars, int index) {
    Poly p(nvars);
    Monomial m(nvars, 0);
    m[index] = 1;
    p.terms_[m] = 1;
    return p;
}

void Poly::add_term(const Monomial& m, const linalg::Integer& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (c != 0) terms_[m] = c;
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Poly Poly::operator-() const {
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r(nvars_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) {
            Monomial m(nvars_);
            for (int i = 0; i < nvars_; ++i) m[i] = m1[i] + m2[i];
            r.add_term(m, c1 * c2);
        }
    return r;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        linalg::Integer a = c;
        if (a < 0) {
            out += "-";
            a = -a;
        } else if (!first) {
            out += "+";
        }
        std::string word;
        for (int i = 0; i < nvars_; ++i)
            for (int e = 0; e < m[i]; ++e) word += static_cast<char>('a' + i);
        if (word.empty()) {
            out += a.get_str();
        } else {
            if (a != 1) out += a.get_str();
            out += word;
        }
        first = false;
    }
    return out;
}

Poly poly_det(const std::vector<std::vector<Poly>>& m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) throw UsageError("poly_det: empty matrix");
    const int nv = m[0][0].nvars();
    if (n == 1) return m[0][0];
    Poly acc(nv);
    std::vector<std::vector<Poly>> minor(n - 1, std::vector<Poly>(n - 1, Poly(nv)));
    for (int c = 0; c < n; ++c) {
        if (m[0][c].is_zero()) continue;
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c2 = 0; c2 < n; ++c2) {
                if (c2 == c) continue;
                minor[r - 1][cc++] = m[r][c2];
            }
        }
        Poly term = m[0][c] * poly_det(minor);
        acc = (c % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

namespace {

bool has_nonzero_minor(const std::vector<std::vector<Poly>>& m, int r) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    std::vector<int> ri(r), ci(r);
    std::vector<std::vector<Poly>> sub(r, std::vector<Poly>(r, Poly(rows ? m[0][0].nvars() : 0)));
    std::function<bool(int, int)> pick_rows = [&](int pos, int next) -> bool {
        if (pos == r) {
            std::function<bool(int, int)> pick_cols = [&](int cpos, int cnext) -> bool {
                if (cpos == r) {
                    for (int i = 0; i < r; ++i)
                        for (int j = 0; j < r; ++j) sub[i][j] = m[ri[i]][ci[j]];
                    return !poly_det(sub).is_zero();
                }
                for (int c = cnext; c <= cols - (r - cpos); ++c) {
                    ci[cpos] = c;
                    if (pick_cols(cpos + 1, c + 1)) return true;
                }
                return false;
            };
            return pick_cols(0, 0);
        }
        for (int row = next; row <= rows - (r - pos); ++row) {
            ri[pos] = row;
            if (pick_rows(pos + 1, row + 1)) return true;
        }
        return false;
    };
    return pick_rows(0, 0);
}

} // namespace

int poly_rank(const std::vector<std::vector<Poly>>& m) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    for (int r = std::min(rows, cols); r >= 1; --r)
        if (has_nonzero_minor(m, r)) return r;
    return 0;
}

} // namespace linemat::lgv
