#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "linemat/lattice.hpp"
#include "linemat/matroid.hpp"

namespace linemat::schubert {

struct Permutation {
    int n = 0;
    std::vector<int> images; // w(1..n)
};

Permutation make_permutation(std::vector<int> images);
Permutation parse_permutation(const std::string& digits); // "53124" -> images

struct RankArray {
    int n = 0;
    std::vector<std::vector<int>> table; // n x n
};

// Permutation matrix convention: a 1 in row w(i) of column n-i+1; entry (i,j)
// of the table is the number of 1s in the leading i x j submatrix.
RankArray rank_array(const Permutation& w);

int length(const Permutation& w); // inversion count

// The Schubert problem for these permutations is zero-dimensional exactly
// when the lengths sum to n choose 2.
bool problem_dimension_ok(const std::vector<Permutation>& ws);

// Floors of a (d+1)-dimensional dot array: floor k holds the dots whose last
// coordinate is k. Dots live in [n]^d.
struct Floors {
    int n = 0, d = 0;
    std::map<int, std::vector<std::vector<int>>> floors; // k -> sorted dots

    std::vector<std::vector<int>> floor(int k) const; // empty when absent
};

Floors make_floors(int n, int d, std::map<int, std::vector<std::vector<int>>> floors);

// Text boards, d = 3 only: n boards of n lines each (blank-line separated),
// tokens "." or the digit k meaning a dot (i, j, k) on that floor.
Floors parse_floor_boards(const std::string& text, int n);

// Floor k as a set must equal {x in [n]^d : sum(x) = (d-1)n + 1}.
bool is_transversal_floor(const Floors& f, int k);
bool is_transversal_floor(const Floors& f); // k = n

struct VanishingVerdict {
    bool vanishes = false;
    std::string reason;                 // "non-transversal top floor" or "rank"
    std::optional<int> k;               // witnessing floor for the rank reason
    int rank = 0;                       // rank of the mapped intersection
    std::vector<core::LatticePoint> intersection;     // mapped points
    std::vector<core::LatticePoint> max_independent;  // greedy witness of the rank
    std::optional<core::SubSimplex> violation;        // only when the set itself is dependent
};

// Applies the top-floor test first, then for k = 1..n-1 maps the dots of
// floor(k) that also lie on floor(n) through x -> (n-x_1, ..., n-x_d) and
// compares the matroid rank with k. One-sided: a miss is inconclusive, never
// a nonzero claim.
VanishingVerdict vanishing_check(const Floors& f);

} // namespace linemat::schubert
