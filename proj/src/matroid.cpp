#include "linemat/matroid.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

namespace linemat::core {

namespace {

void check_members(const GroundSet& g, const PointSet& s) {
    for (const auto& p : s.members())
        if (!g.contains(p)) throw UsageError("point outside the ground set");
}

int count_inside(const SubSimplex& t, const PointSet& s) {
    int c = 0;
    for (const auto& p : s.members())
        if (t.contains(p)) ++c;
    return c;
}

// All anchors with coordinate sum `total`, lexicographically.
void anchors_of_sum(int total, int d, std::vector<int>& cur, const std::function<bool(const std::vector<int>&)>& visit,
                    bool& stop) {
    if (stop) return;
    if (static_cast<int>(cur.size()) == d - 1) {
        cur.push_back(total);
        if (visit(cur)) stop = true;
        cur.pop_back();
        return;
    }
    for (int v = 0; v <= total && !stop; ++v) {
        cur.push_back(v);
        anchors_of_sum(total - v, d, cur, visit, stop);
        cur.pop_back();
    }
}

} // namespace

std::optional<SubSimplex> find_violation(const GroundSet& g, const PointSet& s) {
    check_members(g, s);
    const int n = g.n(), d = g.d();
    std::optional<SubSimplex> found;
    // A size-k translate can only be violated when k < |S|.
    const int kmax = std::min(n, s.size() - 1);
    for (int k = 1; k <= kmax && !found; ++k) {
        std::vector<int> cur;
        bool stop = false;
        anchors_of_sum(n - k, d, cur,
                       [&](const std::vector<int>& anchor) {
                           SubSimplex t{anchor, k};
                           if (count_inside(t, s) > k) {
                               found = t;
                               return true;
                           }
                           return false;
                       },
                       stop);
    }
    return found;
}

bool is_independent(const GroundSet& g, const PointSet& s) {
    check_members(g, s);
    if (s.size() <= 1) return true;
    const int n = g.n(), d = g.d();
    // Min-closure of S under coordinate-wise minimum.
    std::set<std::vector<int>> closure(s.members().begin(), s.members().end());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<int>> fresh;
        for (auto it = closure.begin(); it != closure.end(); ++it)
            for (auto jt = std::next(it); jt != closure.end(); ++jt) {
                std::vector<int> m(d);
                for (int i = 0; i < d; ++i) m[i] = std::min((*it)[i], (*jt)[i]);
                if (!closure.count(m)) fresh.push_back(std::move(m));
            }
        for (auto& m : fresh)
            if (closure.insert(std::move(m)).second) grew = true;
    }
    for (const auto& anchor : closure) {
        int sum = 0;
        for (int a : anchor) sum += a;
        const int k = n - sum;
        if (k < 1 || k > n) continue;
        SubSimplex t{anchor, k};
        if (count_inside(t, s) > k) return false;
    }
    return true;
}

int rank(const GroundSet& g, const PointSet& s) {
    check_members(g, s);
    std::vector<LatticePoint> picked;
    for (const auto& p : s.members()) { // members are in canonical order
        picked.push_back(p);
        if (!is_independent(g, PointSet(g, picked))) picked.pop_back();
    }
    return static_cast<int>(picked.size());
}

bool is_basis(const GroundSet& g, const PointSet& s) {
    return s.size() == g.n() && is_independent(g, s);
}

namespace {

struct BasisSearch {
    const GroundSet& g;
    std::atomic<std::uint64_t>& budget;

    bool spend() {
        // fetch_sub on 0 would wrap; check-and-decrement instead.
        std::uint64_t cur = budget.load();
        while (cur > 0)
            if (budget.compare_exchange_weak(cur, cur - 1)) return true;
        return false;
    }

    void extend(std::vector<LatticePoint>& prefix, int next_index, std::vector<PointSet>& out) {
        if (static_cast<int>(prefix.size()) == g.n()) {
            out.emplace_back(g, prefix);
            return;
        }
        const int need = g.n() - static_cast<int>(prefix.size());
        for (int i = next_index; i + need <= g.size(); ++i) {
            prefix.push_back(g.points()[i]);
            if (!spend()) throw BudgetExceeded("enumerate_bases: oracle budget exceeded");
            if (is_independent(g, PointSet(g, prefix))) extend(prefix, i + 1, out);
            prefix.pop_back();
        }
    }
};

} // namespace

std::vector<PointSet> enumerate_bases(const GroundSet& g, std::uint64_t budget, int workers) {
    std::atomic<std::uint64_t> shared_budget{budget};
    BasisSearch search{g, shared_budget};
    const int top = g.size() - g.n() + 1;
    if (workers <= 1 || top <= 1) {
        std::vector<PointSet> out;
        std::vector<LatticePoint> prefix;
        search.extend(prefix, 0, out);
        return out;
    }
    // Workers own disjoint ranges of first elements; concatenation in range
    // order restores the canonical order.
    std::vector<std::vector<PointSet>> partial(top);
    std::vector<std::thread> threads;
    std::atomic<int> cursor{0};
    std::atomic<bool> exceeded{false};
    const int nthreads = std::min(workers, top);
    for (int t = 0; t < nthreads; ++t) {
        threads.emplace_back([&] {
            for (;;) {
                int i = cursor.fetch_add(1);
                if (i >= top || exceeded.load()) return;
                std::vector<LatticePoint> prefix{g.points()[i]};
                try {
                    if (!search.spend()) throw BudgetExceeded("enumerate_bases: oracle budget exceeded");
                    if (is_independent(g, PointSet(g, prefix))) search.extend(prefix, i + 1, partial[i]);
                } catch (const BudgetExceeded&) {
                    exceeded.store(true);
                    return;
                }
            }
        });
    }
    for (auto& th : threads) th.join();
    if (exceeded.load()) throw BudgetExceeded("enumerate_bases: oracle budget exceeded");
    std::vector<PointSet> out;
    for (auto& part : partial)
        for (auto& b : part) out.push_back(std::move(b));
    return out;
}

std::pair<SubSimplex, SubSimplex> meet_join(const GroundSet& g, const SubSimplex& t, const SubSimplex& u) {
    const int d = g.d();
    if (static_cast<int>(t.anchor.size()) != d || static_cast<int>(u.anchor.size()) != d)
        throw UsageError("meet_join: anchor dimension mismatch");
    std::vector<int> lo(d), hi(d);
    for (int i = 0; i < d; ++i) {
        hi[i] = std::max(t.anchor[i], u.anchor[i]);
        lo[i] = std::min(t.anchor[i], u.anchor[i]);
    }
    SubSimplex meet = make_subsimplex(g, hi);
    SubSimplex join = make_subsimplex(g, lo);
    if (meet.size < 0) throw UsageError("meet_join: disjoint simplices (meet would have negative size)");
    return {meet, join};
}

} // namespace linemat::core
