#include "linemat/flags.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "linemat/matroid.hpp"
#include "linemat/rng.hpp"

namespace linemat::flags {

namespace {

using linalg::Mat;
using linalg::Rational;
using linalg::Subspace;

std::string tuple_str(const std::vector<int>& a) {
    std::string s = "(";
    for (size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
    return s + ")";
}

Mat random_int_matrix(std::mt19937_64& rng, int rows, int cols, long long lo, long long hi) {
    Mat m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.at(r, c) = Rational(static_cast<long>(uniform_int(rng, lo, hi)));
    return m;
}

} // namespace

FlagFamily random_flag_family(int n, int d, std::uint64_t seed, int max_retries) {
    if (n < 1 || d < 2) throw UsageError("random_flag_family: need n >= 1, d >= 2");
    FlagFamily fam;
    fam.n = n;
    std::mt19937_64 rng(seed);
    for (int k = 0; k < d; ++k) {
        Mat m;
        bool ok = false;
        for (int attempt = 0; attempt < max_retries; ++attempt) {
            m = random_int_matrix(rng, n, n, -10000, 10000);
            if (linalg::rank_of(m) == n) { ok = true; break; }
        }
        if (!ok) throw NonGenericError("random_flag_family: could not sample an invertible matrix");
        Flag flag;
        flag.n = n;
        for (int i = 0; i <= n; ++i) flag.subspaces.push_back(Subspace::column_prefix_span(m, i));
        fam.flags.push_back(std::move(flag));
    }
    return fam;
}

LineArrangement line_arrangement(const FlagFamily& f) {
    const int n = f.n;
    const int d = static_cast<int>(f.flags.size());
    if (d < 2) throw UsageError("line_arrangement: need at least two flags");
    for (const Flag& flag : f.flags) {
        if (flag.n != n || static_cast<int>(flag.subspaces.size()) != n + 1)
            throw UsageError("line_arrangement: flags do not share the ambient space");
        for (int i = 0; i <= n; ++i)
            if (flag.subspaces[i].dim() != i) throw UsageError("line_arrangement: flag is not complete");
    }
    // Genericity means every intersection has the expected dimension
    // max(0, n - sum(n - a_i)), not just the line-level ones.
    LineArrangement arr;
    arr.n = n;
    arr.d = d;
    std::vector<int> a(d, 1);
    std::function<void(int, const Subspace&)> sweep = [&](int i, const Subspace& cur) {
        if (i == d) {
            int codim = 0;
            for (int x : a) codim += n - x;
            const int expected = std::max(0, n - codim);
            if (cur.dim() != expected)
                throw NonGenericError("non-generic family: intersection at indices " + tuple_str(a) +
                                      " has dimension " + std::to_string(cur.dim()) + ", expected " +
                                      std::to_string(expected));
            if (expected == 1 && codim == n - 1) {
                core::LatticePoint p(d);
                for (int k = 0; k < d; ++k) p[k] = n - a[k];
                arr.lines[p] = cur;
            }
            return;
        }
        for (a[i] = 1; a[i] <= n; ++a[i]) sweep(i + 1, intersect(cur, f.flags[i].subspaces[a[i]]));
    };
    Mat id = Mat::identity(n);
    std::vector<std::vector<Rational>> id_rows;
    for (int r = 0; r < n; ++r) id_rows.push_back(id.row(r));
    sweep(0, Subspace::span(n, id_rows));
    return arr;
}

MatroidCheck matroid_equals_Tnd(const LineArrangement& l, std::uint64_t budget) {
    core::GroundSet g(l.n, l.d);
    for (const auto& p : g.points())
        if (!l.lines.count(p)) throw UsageError("matroid_equals_Tnd: arrangement misses a ground point");
    MatroidCheck out;
    std::vector<core::LatticePoint> subset;
    std::uint64_t used = 0;
    std::function<bool(int)> sweep = [&](int start) -> bool {
        if (!subset.empty()) {
            if (++used > budget) throw BudgetExceeded("matroid_equals_Tnd: subset budget exceeded");
            std::vector<std::vector<Rational>> vecs;
            for (const auto& p : subset) vecs.push_back(l.lines.at(p).generator(0));
            const int lin = linalg::rank_of(linalg::from_columns(vecs));
            const int mat = core::rank(g, core::PointSet(g, subset));
            if (lin != mat) {
                out.matches = false;
                out.witness = subset;
                out.linear_rank = lin;
                out.matroid_rank = mat;
                return false;
            }
        }
        if (static_cast<int>(subset.size()) == l.n) return true;
        for (int i = start; i < g.size(); ++i) {
            subset.push_back(g.points()[i]);
            const bool keep = sweep(i + 1);
            subset.pop_back();
            if (!keep) return false;
        }
        return true;
    };
    sweep(0);
    return out;
}

FlagFamily flags_from_arrangement(const LineArrangement& l, bool assume_valid) {
    if (!assume_valid) {
        MatroidCheck chk = matroid_equals_Tnd(l);
        if (!chk.matches) throw UsageError("flags_from_arrangement: arrangement matroid differs from the expected one");
    }
    FlagFamily fam;
    fam.n = l.n;
    for (int k = 0; k < l.d; ++k) {
        Flag flag;
        flag.n = l.n;
        for (int i = 0; i <= l.n; ++i) {
            std::vector<std::vector<linalg::Rational>> gens;
            for (const auto& [p, line] : l.lines)
                if (l.n - p[k] <= i) gens.push_back(line.generator(0));
            linalg::Subspace s = linalg::Subspace::span(l.n, gens);
            if (s.dim() != i)
                throw UsageError("flags_from_arrangement: slice " + std::to_string(i) + " of flag " +
                                 std::to_string(k + 1) + " has rank " + std::to_string(s.dim()) +
                                 "; input is not a valid line arrangement");
            flag.subspaces.push_back(std::move(s));
        }
        fam.flags.push_back(std::move(flag));
    }
    return fam;
}

HyperplaneLines hyperplane_lines(int n, int m, std::uint64_t seed, int max_retries) {
    if (n < 2 || m < n) throw UsageError("hyperplane_lines: need 2 <= n <= m");
    std::mt19937_64 rng(seed);
    HyperplaneLines out;
    out.n = n;
    out.m = m;
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        // Row i is the normal functional of hyperplane i+1.
        Mat normals = random_int_matrix(rng, m, n, -10000, 10000);
        out.lines.clear();
        bool good = true;
        for (const auto& subset : core::all_subsets(m, n - 1)) {
            Mat sys(n - 1, n);
            for (int r = 0; r < n - 1; ++r)
                for (int c = 0; c < n; ++c) sys.at(r, c) = normals.at(subset[r] - 1, c);
            Mat ker = linalg::nullspace(sys);
            if (ker.cols() != 1) { good = false; break; }
            out.lines[subset] = Subspace::span(n, {ker.col(0)});
        }
        if (!good) continue;
        // Exhaustive rank comparison over subsets of blocks up to size n.
        const auto ground = core::all_subsets(m, n - 1);
        std::vector<std::vector<int>> chosen;
        std::function<bool(size_t)> sweep = [&](size_t start) -> bool {
            if (!chosen.empty()) {
                std::vector<std::vector<Rational>> vecs;
                for (const auto& b : chosen) vecs.push_back(out.lines.at(b).generator(0));
                const int lin = linalg::rank_of(linalg::from_columns(vecs));
                const int comb = core::hm_rank(n, m, core::SetSystem(m, n - 1, chosen));
                if (lin != comb) {
                    out.matches = false;
                    out.witness = chosen;
                    return false;
                }
            }
            if (static_cast<int>(chosen.size()) == n) return true;
            for (size_t i = start; i < ground.size(); ++i) {
                chosen.push_back(ground[i]);
                const bool keep = sweep(i + 1);
                chosen.pop_back();
                if (!keep) return false;
            }
            return true;
        };
        out.matches = true;
        out.witness.clear();
        sweep(0);
        return out;
    }
    throw NonGenericError("hyperplane_lines: sampling kept producing degenerate intersections");
}

} // namespace linemat::flags
