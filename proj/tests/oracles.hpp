#pragma once

// Independent reference computations used by the tests. Nothing here calls
// into the library beyond plain data types, so a bug in the library cannot
// leak into its own oracle.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <unordered_map>
#include <vector>

namespace oracle {

struct Tab {
    int x, y, z, t;
    bool operator==(const Tab&) const = default;
    auto operator<=>(const Tab&) const = default;
};

inline std::vector<Tab> ordered_tables(int n) {
    std::vector<Tab> out;
    for (int x = 0; x <= n; ++x)
        for (int y = 0; x + y <= n; ++y)
            for (int z = 0; x + y + z <= n; ++z) out.push_back({x, y, z, n - x - y - z});
    return out;
}

inline std::vector<Tab> canonical_tables(int n) {
    std::vector<Tab> out;
    for (const auto& T : ordered_tables(n))
        if (T.y >= T.z) out.push_back(T);
    return out;
}

// S sits above T: S is reached from T by moving votes toward x.
inline bool above_ordered(const Tab& T, const Tab& S) {
    return S.x >= T.x && S.t <= T.t && S.x + S.y >= T.x + T.y && S.x + S.z >= T.x + T.z;
}

inline bool leq_canonical(const Tab& T, const Tab& S) {
    return above_ordered(T, S) || above_ordered(T, Tab{S.x, S.z, S.y, S.t});
}

// (rho, alpha) <= (rho', alpha') iff rho' - rho >= |alpha' - alpha|.
inline bool leq_class(int r1, int a1, int r2, int a2) { return r2 - r1 >= std::abs(a2 - a1); }

// Full relation matrix from a generating relation by Warshall closure.
inline std::vector<std::vector<bool>> closure(std::size_t m, const std::vector<std::pair<std::size_t, std::size_t>>& gen) {
    std::vector<std::vector<bool>> R(m, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < m; ++i) R[i][i] = true;
    for (auto [a, b] : gen) R[a][b] = true;
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t i = 0; i < m; ++i)
            if (R[i][k])
                for (std::size_t j = 0; j < m; ++j)
                    if (R[k][j]) R[i][j] = true;
    return R;
}

// Pairs (i, j), i < j strictly, with nothing strictly between.
inline std::vector<std::pair<std::size_t, std::size_t>> transitive_reduction(const std::vector<std::vector<bool>>& R) {
    const std::size_t m = R.size();
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (i == j || !R[i][j]) continue;
            bool direct = true;
            for (std::size_t k = 0; k < m && direct; ++k)
                if (k != i && k != j && R[i][k] && R[k][j]) direct = false;
            if (direct) out.emplace_back(i, j);
        }
    std::sort(out.begin(), out.end());
    return out;
}

// Number of upper sets of a finite order given as a relation matrix, by the
// recursion N(P) = N(P \ down(m)) + N(P \ up(m)) with memoisation on the
// remaining node set.
class UpperSetCounter {
public:
    explicit UpperSetCounter(const std::vector<std::vector<bool>>& R) : R_(R) {}

    std::uint64_t count() {
        std::vector<bool> all(R_.size(), true);
        return go(all);
    }

private:
    std::uint64_t go(const std::vector<bool>& alive) {
        std::size_t pick = R_.size();
        std::size_t best = 0;
        for (std::size_t i = 0; i < R_.size(); ++i) {
            if (!alive[i]) continue;
            std::size_t deg = 0;
            for (std::size_t j = 0; j < R_.size(); ++j)
                if (alive[j] && (R_[i][j] || R_[j][i])) ++deg;
            if (pick == R_.size() || deg > best) pick = i, best = deg;
        }
        if (pick == R_.size()) return 1;
        auto it = memo_.find(alive);
        if (it != memo_.end()) return it->second;
        auto without_down = alive;
        auto without_up = alive;
        for (std::size_t j = 0; j < R_.size(); ++j) {
            if (R_[j][pick]) without_down[j] = false;
            if (R_[pick][j]) without_up[j] = false;
        }
        const std::uint64_t r = go(without_down) + go(without_up);
        memo_.emplace(alive, r);
        return r;
    }

    const std::vector<std::vector<bool>>& R_;
    std::map<std::vector<bool>, std::uint64_t> memo_;
};

// Every upper set, as membership vectors. Nodes are visited from the top of a
// linear extension down; a node may join only when everything above it has.
inline std::vector<std::vector<bool>> upper_sets(const std::vector<std::vector<bool>>& R) {
    const std::size_t m = R.size();
    std::vector<std::size_t> order(m);
    for (std::size_t i = 0; i < m; ++i) order[i] = i;
    std::vector<std::size_t> height(m, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (R[j][i]) ++height[i];
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return height[a] > height[b]; });
    std::vector<std::vector<bool>> out;
    std::vector<bool> in(m, false);
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == m) {
            out.push_back(in);
            return;
        }
        const std::size_t i = order[k];
        rec(k + 1);
        for (std::size_t j = 0; j < m; ++j)
            if (j != i && R[i][j] && !in[j]) return;
        in[i] = true;
        rec(k + 1);
        in[i] = false;
    };
    rec(0);
    return out;
}

// Largest pairwise-incomparable subset by branch and bound.
inline std::size_t max_antichain(const std::vector<std::vector<bool>>& R) {
    const std::size_t m = R.size();
    std::size_t best = 0;
    std::vector<std::size_t> chosen;
    std::function<void(std::size_t, std::vector<bool>&)> rec = [&](std::size_t start, std::vector<bool>& ok) {
        best = std::max(best, chosen.size());
        std::size_t remaining = 0;
        for (std::size_t i = start; i < m; ++i) remaining += ok[i];
        if (chosen.size() + remaining <= best) return;
        for (std::size_t i = start; i < m; ++i) {
            if (!ok[i]) continue;
            std::vector<bool> next = ok;
            for (std::size_t j = 0; j < m; ++j)
                if (R[i][j] || R[j][i]) next[j] = false;
            chosen.push_back(i);
            rec(i + 1, next);
            chosen.pop_back();
        }
    };
    std::vector<bool> ok(m, true);
    rec(0, ok);
    return best;
}

// Per-voter vote distribution: P and Q are judged independently, each
// correctly with probability theta.
inline std::array<double, 4> vote_law(bool P, bool Q, double theta) {
    const double pP = P ? theta : 1.0 - theta;
    const double pQ = Q ? theta : 1.0 - theta;
    return {pP * pQ, pP * (1 - pQ), (1 - pP) * pQ, (1 - pP) * (1 - pQ)};
}

// Exact table law by summing over all 4^n individual vote assignments.
inline std::map<Tab, double> brute_law(bool P, bool Q, const std::vector<double>& thetas) {
    const int n = static_cast<int>(thetas.size());
    std::map<Tab, double> out;
    std::vector<int> choice(n, 0);
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) total *= 4;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        int k[4] = {0, 0, 0, 0};
        double p = 1.0;
        for (int i = 0; i < n; ++i) {
            const int v = static_cast<int>(c % 4);
            c /= 4;
            ++k[v];
            p *= vote_law(P, Q, thetas[i])[v];
        }
        out[Tab{k[0], k[1], k[2], k[3]}] += p;
    }
    return out;
}

inline double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

// Closed-form homogeneous laws written out term by term.
inline double closed_law(const Tab& T, bool P, bool Q, double th) {
    const double c = factorial(T.x + T.y + T.z + T.t) / (factorial(T.x) * factorial(T.y) * factorial(T.z) * factorial(T.t));
    const double u = 1.0 - th;
    int a = 0, b = 0;
    if (P && Q) a = 2 * T.x + T.y + T.z, b = T.y + T.z + 2 * T.t;
    if (P && !Q) a = T.x + 2 * T.y + T.t, b = T.x + 2 * T.z + T.t;
    if (!P && Q) a = T.x + 2 * T.z + T.t, b = T.x + 2 * T.y + T.t;
    if (!P && !Q) a = T.y + T.z + 2 * T.t, b = 2 * T.x + T.y + T.z;
    return c * std::pow(th, a) * std::pow(u, b);
}

// Loss of a rule given as a predicate on ordered tables.
inline double brute_loss(int n, double w, double theta, const std::function<bool(const Tab&)>& positive) {
    double fp = 0.0, fn = 0.0;
    for (const auto& T : ordered_tables(n)) {
        if (positive(T)) fp += closed_law(T, true, false, theta);
        else fn += closed_law(T, true, true, theta);
    }
    return w * fp + (1 - w) * fn;
}

inline double g(int rho, int alpha, double eta) { return std::pow(eta, -rho - alpha) + std::pow(eta, -rho + alpha); }

}  // namespace oracle
