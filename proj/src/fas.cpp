#include "nheight/fas.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <string>

#include "nheight/errors.hpp"

namespace nheight {

namespace {

constexpr int kBitsetWidth = 32;

std::vector<int> positions_of(std::span<const int> ordering, int n) {
    if (static_cast<int>(ordering.size()) != n) {
        throw domain_error("ordering has " + std::to_string(ordering.size()) +
                           " entries for a graph on " + std::to_string(n) + " vertices");
    }
    std::vector<int> pos(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        const int v = ordering[static_cast<std::size_t>(i)];
        if (v < 0 || v >= n || pos[static_cast<std::size_t>(v)] >= 0) {
            throw domain_error("ordering is not a permutation of [0, " + std::to_string(n) + ")");
        }
        pos[static_cast<std::size_t>(v)] = i;
    }
    return pos;
}

}  // namespace

FasInstance FasInstance::from_edges(int n, std::span<const Edge> edge_list) {
    if (n < 0 || n > kBitsetWidth) {
        throw resource_error("FAS instances are limited to " + std::to_string(kBitsetWidth) +
                             " vertices, got " + std::to_string(n));
    }
    std::vector<std::uint32_t> out(static_cast<std::size_t>(n), 0);
    std::uint32_t loops = 0;
    for (const Edge& e : edge_list) {
        if (e.from < 0 || e.from >= n || e.to < 0 || e.to >= n) {
            throw domain_error("edge (" + std::to_string(e.from) + ", " + std::to_string(e.to) +
                               ") has a vertex outside [0, " + std::to_string(n) + ")");
        }
        if (e.from == e.to) {
            loops |= std::uint32_t{1} << e.from;
        } else {
            out[static_cast<std::size_t>(e.from)] |= std::uint32_t{1} << e.to;
        }
    }
    return FasInstance(n, std::move(out), loops);
}

FasInstance FasInstance::from_circulant(const CirculantGraph& g, int cap) {
    const auto list = edges(g, std::min(cap, kBitsetWidth));
    return from_edges(static_cast<int>(g.n()), list);
}

std::int64_t FasInstance::loop_count() const noexcept { return std::popcount(loop_mask_); }

std::int64_t FasInstance::edge_count() const noexcept {
    std::int64_t total = loop_count();
    for (std::uint32_t row : out_adj_) total += std::popcount(row);
    return total;
}

std::vector<Edge> FasInstance::edge_list() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u) {
        if (loop_mask_ >> u & 1U) out.push_back({u, u});
        for (std::uint32_t row = out_adj_[static_cast<std::size_t>(u)]; row; row &= row - 1) {
            out.push_back({u, std::countr_zero(row)});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

FasResult beta_exact(const FasInstance& inst, int cap) {
    const int n = inst.n();
    if (n > cap || n > kMaxExactCap) {
        const std::uint64_t bytes = (std::uint64_t{1} << std::min(n, 62)) * 2;
        throw resource_error("exact beta on " + std::to_string(n) + " vertices needs 2^" +
                             std::to_string(n) + " DP states (~" +
                             std::to_string(bytes >> 20) + " MiB); cap is " +
                             std::to_string(std::min(cap, kMaxExactCap)));
    }
    const auto out = inst.out_adj();
    const std::size_t states = std::size_t{1} << n;
    // Backward edges inside a subset never exceed n(n-1)/2 <= 325, so 16 bits suffice.
    std::vector<std::uint16_t> best(states, 0);
    for (std::size_t s = 1; s < states; ++s) {
        const auto set = static_cast<std::uint32_t>(s);
        std::uint32_t lo = std::numeric_limits<std::uint32_t>::max();
        for (std::uint32_t rest = set; rest; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            lo = std::min(lo, best[set & ~(std::uint32_t{1} << v)] +
                                  static_cast<std::uint32_t>(std::popcount(out[static_cast<std::size_t>(v)] & set)));
        }
        best[s] = static_cast<std::uint16_t>(lo);
    }

    // Backtrack: at each level the last vertex is the smallest v attaining f(S).
    FasResult result;
    result.ordering.resize(static_cast<std::size_t>(n));
    std::uint32_t set = static_cast<std::uint32_t>(states - 1);
    for (int slot = n - 1; slot >= 0; --slot) {
        for (std::uint32_t rest = set; rest; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            const std::uint32_t without = set & ~(std::uint32_t{1} << v);
            if (best[without] + std::popcount(out[static_cast<std::size_t>(v)] & set) == best[set]) {
                result.ordering[static_cast<std::size_t>(slot)] = v;
                set = without;
                break;
            }
        }
    }
    const auto pos = positions_of(result.ordering, n);
    for (const Edge& e : inst.edge_list()) {
        if (pos[static_cast<std::size_t>(e.from)] >= pos[static_cast<std::size_t>(e.to)]) {
            result.removed.push_back(e);
        }
    }
    result.beta = best[states - 1] + inst.loop_count();
    return result;
}

std::int64_t beta_upper_by_ordering(const FasInstance& inst, std::span<const int> ordering) {
    const auto pos = positions_of(ordering, inst.n());
    std::int64_t count = inst.loop_count();
    for (int u = 0; u < inst.n(); ++u) {
        for (std::uint32_t row = inst.out_adj()[static_cast<std::size_t>(u)]; row; row &= row - 1) {
            const int v = std::countr_zero(row);
            if (pos[static_cast<std::size_t>(u)] > pos[static_cast<std::size_t>(v)]) ++count;
        }
    }
    return count;
}

std::int64_t brute_force_beta(const FasInstance& inst) {
    if (inst.n() > kBruteForceCap) {
        throw resource_error("brute-force beta enumerates n! orderings; n = " +
                             std::to_string(inst.n()) + " exceeds " +
                             std::to_string(kBruteForceCap));
    }
    std::vector<int> ordering(static_cast<std::size_t>(inst.n()));
    std::iota(ordering.begin(), ordering.end(), 0);
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    do {
        best = std::min(best, beta_upper_by_ordering(inst, ordering));
    } while (std::next_permutation(ordering.begin(), ordering.end()));
    return best;
}

}  // namespace nheight
