#ifndef NHEIGHT_FAS_HPP
#define NHEIGHT_FAS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "nheight/cayley.hpp"

namespace nheight {

// Default vertex cap for the subset DP: 2^22 states, about 12 MB of tables.
inline constexpr int kDefaultExactCap = 22;
// Hard ceiling for overrides of the cap.
inline constexpr int kMaxExactCap = 26;
inline constexpr int kBruteForceCap = 8;

/// A digraph on at most 32 vertices as out-neighbour bitsets.
///
/// Loops are kept apart in `loop_mask`; `out_adj[v]` never has bit v set.
/// Parallel edges collapse.
class FasInstance {
public:
    static FasInstance from_edges(int n, std::span<const Edge> edge_list);
    static FasInstance from_circulant(const CirculantGraph& g, int cap = kDefaultExactCap);

    int n() const noexcept { return n_; }
    std::span<const std::uint32_t> out_adj() const noexcept { return out_adj_; }
    std::uint32_t loop_mask() const noexcept { return loop_mask_; }
    std::int64_t loop_count() const noexcept;
    std::int64_t edge_count() const noexcept;
    std::vector<Edge> edge_list() const;

private:
    FasInstance(int n, std::vector<std::uint32_t> out, std::uint32_t loops)
        : n_(n), out_adj_(std::move(out)), loop_mask_(loops) {}

    int n_;
    std::vector<std::uint32_t> out_adj_;
    std::uint32_t loop_mask_;
};

struct FasResult {
    std::int64_t beta = 0;
    std::vector<int> ordering;   // vertex placed at each position
    std::vector<Edge> removed;   // loops plus edges pointing backwards in `ordering`
};

/// Minimum feedback arc set by dynamic programming over vertex subsets.
///
/// f(S) is the fewest backward edges inside S over orderings of S; the last
/// vertex v of S contributes |out(v) & (S - v)|. Ties go to the smallest v.
/// Throws resource_error when n exceeds cap.
FasResult beta_exact(const FasInstance& inst, int cap = kDefaultExactCap);

// Edges (u, v) with position(u) >= position(v), loops included.
std::int64_t beta_upper_by_ordering(const FasInstance& inst, std::span<const int> ordering);

// Minimum of beta_upper_by_ordering over all n! orderings; n <= 8.
std::int64_t brute_force_beta(const FasInstance& inst);

}  // namespace nheight

#endif  // NHEIGHT_FAS_HPP
