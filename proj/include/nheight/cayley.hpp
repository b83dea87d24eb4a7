#ifndef NHEIGHT_CAYLEY_HPP
#define NHEIGHT_CAYLEY_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nheight/heights.hpp"
#include "nheight/residue.hpp"

namespace nheight {

// Graphs with more vertices than this are never materialized edge by edge.
inline constexpr int kDefaultMaterializeCap = 22;

struct Edge {
    int from = 0;
    int to = 0;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Cay(Z/NZ, E_A): vertices are residues, edges (x, x + a) for a in A.
///
/// The connection set is stored strictly ascending. Construction rejects 0,
/// values outside [1, N-1], and duplicates; callers that want forgiving input
/// should reduce and deduplicate first.
class CirculantGraph {
public:
    CirculantGraph(Modulus m, std::vector<std::int64_t> conn);

    const Modulus& modulus() const noexcept { return modulus_; }
    std::int64_t n() const noexcept { return modulus_.n(); }
    std::int64_t d() const noexcept { return static_cast<std::int64_t>(conn_.size()); }
    std::span<const std::int64_t> conn() const noexcept { return conn_; }
    std::int64_t edge_count() const noexcept { return d() * n(); }

    // The connection set read as the tuple <a_1, ..., a_d> in ascending order.
    ProjectiveTuple tuple() const;

private:
    Modulus modulus_;
    std::vector<std::int64_t> conn_;
};

struct GraphReport {
    std::int64_t n = 0;
    std::int64_t d = 0;
    bool has_loop = false;
    bool has_digon = false;
    bool has_triangle = false;
    std::optional<std::int64_t> gamma;   // present iff loop- and digon-free
    std::int64_t height_bound_beta = 0;  // h_N of the connection tuple
    bool css_fast_path = false;          // 4d <= N - 1

    bool triangle_free() const noexcept { return !(has_loop || has_digon || has_triangle); }
};

// { (a_1 + ... + a_l) mod N : a_i in A }, by l - 1 pairwise sumset steps.
std::vector<std::int64_t> sumset(std::span<const std::int64_t> a, int l, const Modulus& m);

// l elements of A (with repetition, nondecreasing) summing to 0 mod N, if any.
std::optional<std::vector<std::int64_t>> zero_sum_certificate(const CirculantGraph& g, int l);

bool has_cycle_of_length(const CirculantGraph& g, int l);
bool is_triangle_free(const CirculantGraph& g);

// N(N-1-2d)/2. Throws domain_error if the graph has a loop or digon.
std::int64_t gamma(const CirculantGraph& g);
// Direct count of nonadjacent unordered pairs on the materialized graph.
std::int64_t gamma_oracle(const CirculantGraph& g, int cap = kDefaultMaterializeCap);

// Every edge (x, x + a), grouped by x then a. Throws resource_error above cap.
std::vector<Edge> edges(const CirculantGraph& g, int cap = kDefaultMaterializeCap);

// |B_{sigma_k}| for the ordering sigma_k(i) = k i, via the closed form
// sum_j (u_k a_j mod N) with u_k the inverse of k.
std::int64_t b_sigma_k(const CirculantGraph& g, std::int64_t k);

struct BSigmaSplit {
    std::vector<Edge> backward;   // B_{sigma_k}
    std::vector<Edge> remaining;  // E_A minus B_{sigma_k}
};

// Materializes the split by placing vertex k i at position i and classifying
// every edge directly; independent of the closed form above.
BSigmaSplit materialize_b_sigma_k(const CirculantGraph& g, std::int64_t k,
                                  int cap = kDefaultMaterializeCap);

// min over units k of b_sigma_k(g, k), which equals the height of g.tuple().
std::int64_t beta_height_bound(const CirculantGraph& g);

// Repeatedly strips vertices of out-degree zero; acyclic iff all vertices go.
bool is_acyclic(std::span<const Edge> edge_list, int n);

GraphReport make_report(const CirculantGraph& g);

}  // namespace nheight

#endif  // NHEIGHT_CAYLEY_HPP
