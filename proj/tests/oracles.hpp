// Brute-force reference computations for tests. Nothing here calls into the
// library's algorithms; each oracle works from definitions on small inputs.
#ifndef NHEIGHT_TESTS_ORACLES_HPP
#define NHEIGHT_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

inline std::int64_t euclid_gcd(std::int64_t a, std::int64_t b) {
    while (b != 0) {
        const std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline std::vector<std::int64_t> units(std::int64_t n) {
    std::vector<std::int64_t> u;
    for (std::int64_t k = 1; k < n; ++k) {
        if (euclid_gcd(n, k) == 1) u.push_back(k);
    }
    return u;
}

// Search for u with k u = 1 mod n; 0 when none exists.
inline std::int64_t inverse_by_search(std::int64_t k, std::int64_t n) {
    for (std::int64_t u = 1; u < n; ++u) {
        if ((k * u) % n == 1) return u;
    }
    return 0;
}

inline std::int64_t height(const std::vector<std::int64_t>& a, std::int64_t n) {
    std::int64_t best = -1;
    for (std::int64_t k : units(n)) {
        std::int64_t s = 0;
        for (std::int64_t x : a) s += (k * x) % n;
        if (best < 0 || s < best) best = s;
    }
    return best;
}

using EdgeList = std::vector<std::pair<int, int>>;

inline EdgeList circulant_edges(std::int64_t n, const std::vector<std::int64_t>& conn) {
    EdgeList e;
    for (std::int64_t x = 0; x < n; ++x) {
        for (std::int64_t a : conn) e.emplace_back(static_cast<int>(x), static_cast<int>((x + a) % n));
    }
    return e;
}

// Does some closed walk of exactly l edges exist? Enumerates every walk.
inline bool has_closed_walk(int n, const EdgeList& edges, int l) {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(n));
    for (auto [u, v] : edges) out[static_cast<std::size_t>(u)].push_back(v);
    for (int start = 0; start < n; ++start) {
        std::vector<std::pair<int, int>> stack{{start, 0}};
        while (!stack.empty()) {
            auto [v, len] = stack.back();
            stack.pop_back();
            if (len == l) {
                if (v == start) return true;
                continue;
            }
            for (int w : out[static_cast<std::size_t>(v)]) stack.emplace_back(w, len + 1);
        }
    }
    return false;
}

inline std::int64_t nonadjacent_pairs(int n, const EdgeList& edges) {
    std::set<std::pair<int, int>> adj;
    for (auto [u, v] : edges) adj.emplace(std::min(u, v), std::max(u, v));
    std::int64_t count = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) count += adj.count({u, v}) == 0;
    }
    return count;
}

// Minimum number of edges to delete so the rest is acyclic, by trying every
// edge subset in increasing size and testing acyclicity with DFS colouring.
// Only for tiny edge counts.
inline bool acyclic_dfs(int n, const EdgeList& edges) {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(n));
    for (auto [u, v] : edges) out[static_cast<std::size_t>(u)].push_back(v);
    std::vector<int> colour(static_cast<std::size_t>(n), 0);
    auto visit = [&](auto&& self, int v) -> bool {
        colour[static_cast<std::size_t>(v)] = 1;
        for (int w : out[static_cast<std::size_t>(v)]) {
            if (colour[static_cast<std::size_t>(w)] == 1) return false;
            if (colour[static_cast<std::size_t>(w)] == 0 && !self(self, w)) return false;
        }
        colour[static_cast<std::size_t>(v)] = 2;
        return true;
    };
    for (int v = 0; v < n; ++v) {
        if (colour[static_cast<std::size_t>(v)] == 0 && !visit(visit, v)) return false;
    }
    return true;
}

inline std::int64_t min_fas_by_edge_subsets(int n, const EdgeList& edges) {
    const std::size_t m = edges.size();
    for (std::size_t k = 0; k <= m; ++k) {
        std::vector<bool> pick(m, false);
        std::fill(pick.end() - static_cast<std::ptrdiff_t>(k), pick.end(), true);
        do {
            EdgeList kept;
            for (std::size_t i = 0; i < m; ++i) {
                if (!pick[i]) kept.push_back(edges[i]);
            }
            if (acyclic_dfs(n, kept)) return static_cast<std::int64_t>(k);
        } while (std::next_permutation(pick.begin(), pick.end()));
    }
    return static_cast<std::int64_t>(m);
}

// Random simple digraph (no parallel edges), loops only if allowed.
inline EdgeList random_digraph(std::mt19937_64& rng, int n, double p, bool loops) {
    std::bernoulli_distribution coin(p);
    EdgeList e;
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (u == v && !loops) continue;
            if (coin(rng)) e.emplace_back(u, v);
        }
    }
    return e;
}

}  // namespace oracle

#endif  // NHEIGHT_TESTS_ORACLES_HPP
