#include "nheight/cayley.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "nheight/errors.hpp"

namespace nheight {

namespace {

void check_cap(std::int64_t n, int cap, const char* what) {
    if (n > cap) {
        throw resource_error(std::string(what) + " materializes all edges; N = " +
                             std::to_string(n) + " exceeds the cap " + std::to_string(cap));
    }
}

void check_unit(const CirculantGraph& g, std::int64_t k) {
    if (k < 1 || k >= g.n() || !g.modulus().is_unit(k)) {
        throw domain_error("ordering multiplier " + std::to_string(k) + " is not a unit mod " +
                           std::to_string(g.n()));
    }
}

}  // namespace

CirculantGraph::CirculantGraph(Modulus m, std::vector<std::int64_t> conn)
    : modulus_(std::move(m)), conn_(std::move(conn)) {
    if (conn_.empty()) {
        throw domain_error("connection set must be nonempty");
    }
    std::sort(conn_.begin(), conn_.end());
    for (std::size_t i = 0; i < conn_.size(); ++i) {
        const std::int64_t a = conn_[i];
        if (a < 1 || a >= modulus_.n()) {
            throw domain_error("connection element " + std::to_string(a) + " is not in [1, " +
                               std::to_string(modulus_.n() - 1) + "]");
        }
        if (i > 0 && conn_[i - 1] == a) {
            throw domain_error("connection element " + std::to_string(a) + " is repeated");
        }
    }
}

ProjectiveTuple CirculantGraph::tuple() const { return canonicalize(conn_, modulus_); }

std::vector<std::int64_t> sumset(std::span<const std::int64_t> a, int l, const Modulus& m) {
    if (l < 1) {
        throw domain_error("sumset length must be at least 1, got " + std::to_string(l));
    }
    if (a.empty()) {
        throw domain_error("sumset of an empty set");
    }
    const std::int64_t n = m.n();
    std::vector<char> cur(static_cast<std::size_t>(n), 0);
    for (std::int64_t x : a) {
        cur[static_cast<std::size_t>(mod_reduce(x, n))] = 1;
    }
    std::vector<char> next(cur.size());
    for (int step = 1; step < l; ++step) {
        std::fill(next.begin(), next.end(), 0);
        for (std::int64_t s = 0; s < n; ++s) {
            if (!cur[static_cast<std::size_t>(s)]) continue;
            for (std::int64_t x : a) {
                next[static_cast<std::size_t>(mod_reduce(s + x, n))] = 1;
            }
        }
        cur.swap(next);
    }
    std::vector<std::int64_t> out;
    for (std::int64_t s = 0; s < n; ++s) {
        if (cur[static_cast<std::size_t>(s)]) out.push_back(s);
    }
    return out;
}

std::optional<std::vector<std::int64_t>> zero_sum_certificate(const CirculantGraph& g, int l) {
    if (l < 1) {
        throw domain_error("cycle length must be at least 1, got " + std::to_string(l));
    }
    const std::int64_t n = g.n();
    const auto conn = g.conn();
    // reach[step][s] holds the index of the last summand used to reach s, or -1.
    // Summand indices are nondecreasing along a path, so the certificate is sorted.
    std::vector<std::vector<int>> reach(static_cast<std::size_t>(l),
                                        std::vector<int>(static_cast<std::size_t>(n), -1));
    for (std::size_t j = 0; j < conn.size(); ++j) {
        auto& slot = reach[0][static_cast<std::size_t>(conn[j])];
        if (slot < 0) slot = static_cast<int>(j);
    }
    for (int step = 1; step < l; ++step) {
        for (std::int64_t s = 0; s < n; ++s) {
            const int last = reach[step - 1][static_cast<std::size_t>(s)];
            if (last < 0) continue;
            for (std::size_t j = static_cast<std::size_t>(last); j < conn.size(); ++j) {
                auto& slot = reach[step][static_cast<std::size_t>((s + conn[j]) % n)];
                if (slot < 0 || static_cast<std::size_t>(slot) > j) slot = static_cast<int>(j);
            }
        }
    }
    if (reach[static_cast<std::size_t>(l - 1)][0] < 0) {
        return std::nullopt;
    }
    // Walk back from 0, peeling the last summand at each step.
    std::vector<std::int64_t> parts;
    std::int64_t s = 0;
    for (int step = l - 1; step >= 0; --step) {
        const int j = reach[static_cast<std::size_t>(step)][static_cast<std::size_t>(s)];
        parts.push_back(conn[static_cast<std::size_t>(j)]);
        s = mod_reduce(s - conn[static_cast<std::size_t>(j)], n);
    }
    std::reverse(parts.begin(), parts.end());
    return parts;
}

bool has_cycle_of_length(const CirculantGraph& g, int l) {
    const auto s = sumset(g.conn(), l, g.modulus());
    return !s.empty() && s.front() == 0;
}

bool is_triangle_free(const CirculantGraph& g) {
    return !has_cycle_of_length(g, 1) && !has_cycle_of_length(g, 2) && !has_cycle_of_length(g, 3);
}

std::int64_t gamma(const CirculantGraph& g) {
    if (has_cycle_of_length(g, 1) || has_cycle_of_length(g, 2)) {
        throw domain_error("closed-form gamma needs a graph without loops or digons; "
                           "use gamma_oracle for this connection set");
    }
    return g.n() * (g.n() - 1 - 2 * g.d()) / 2;
}

std::vector<Edge> edges(const CirculantGraph& g, int cap) {
    check_cap(g.n(), cap, "edge listing");
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(g.edge_count()));
    for (std::int64_t x = 0; x < g.n(); ++x) {
        for (std::int64_t a : g.conn()) {
            out.push_back({static_cast<int>(x), static_cast<int>((x + a) % g.n())});
        }
    }
    return out;
}

std::int64_t gamma_oracle(const CirculantGraph& g, int cap) {
    check_cap(g.n(), cap, "gamma_oracle");
    const auto n = static_cast<std::size_t>(g.n());
    std::vector<char> adjacent(n * n, 0);
    for (const Edge& e : edges(g, cap)) {
        adjacent[static_cast<std::size_t>(e.from) * n + static_cast<std::size_t>(e.to)] = 1;
        adjacent[static_cast<std::size_t>(e.to) * n + static_cast<std::size_t>(e.from)] = 1;
    }
    std::int64_t count = 0;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            if (!adjacent[u * n + v]) ++count;
        }
    }
    return count;
}

std::int64_t b_sigma_k(const CirculantGraph& g, std::int64_t k) {
    check_unit(g, k);
    const std::int64_t u = inv(Residue(k, g.n()), g.modulus()).value();
    std::int64_t total = 0;
    for (std::int64_t a : g.conn()) {
        total += (u * a) % g.n();
    }
    return total;
}

BSigmaSplit materialize_b_sigma_k(const CirculantGraph& g, std::int64_t k, int cap) {
    check_unit(g, k);
    check_cap(g.n(), cap, "B_sigma materialization");
    const std::int64_t n = g.n();
    // position[v] = r such that sigma_k(r) = k r = v
    std::vector<std::int64_t> position(static_cast<std::size_t>(n), -1);
    for (std::int64_t r = 0; r < n; ++r) {
        position[static_cast<std::size_t>((k * r) % n)] = r;
    }
    BSigmaSplit split;
    for (const Edge& e : edges(g, cap)) {
        const bool back = position[static_cast<std::size_t>(e.from)] >
                          position[static_cast<std::size_t>(e.to)];
        (back ? split.backward : split.remaining).push_back(e);
    }
    return split;
}

std::int64_t beta_height_bound(const CirculantGraph& g) {
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (std::int64_t k : g.modulus().units()) {
        best = std::min(best, b_sigma_k(g, k));
    }
    return best;
}

bool is_acyclic(std::span<const Edge> edge_list, int n) {
    std::vector<int> out_degree(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<int>> in_from(static_cast<std::size_t>(n));
    for (const Edge& e : edge_list) {
        ++out_degree[static_cast<std::size_t>(e.from)];
        in_from[static_cast<std::size_t>(e.to)].push_back(e.from);
    }
    std::vector<int> sinks;
    for (int v = 0; v < n; ++v) {
        if (out_degree[static_cast<std::size_t>(v)] == 0) sinks.push_back(v);
    }
    int removed = 0;
    while (!sinks.empty()) {
        const int v = sinks.back();
        sinks.pop_back();
        ++removed;
        for (int u : in_from[static_cast<std::size_t>(v)]) {
            if (--out_degree[static_cast<std::size_t>(u)] == 0) sinks.push_back(u);
        }
    }
    return removed == n;
}

GraphReport make_report(const CirculantGraph& g) {
    GraphReport r;
    r.n = g.n();
    r.d = g.d();
    r.has_loop = has_cycle_of_length(g, 1);
    r.has_digon = has_cycle_of_length(g, 2);
    r.has_triangle = has_cycle_of_length(g, 3);
    if (!r.has_loop && !r.has_digon) {
        r.gamma = gamma(g);
    }
    r.height_bound_beta = height_value(g.conn(), g.modulus());
    r.css_fast_path = 4 * r.d <= r.n - 1;
    return r;
}

}  // namespace nheight
