#include "nheight/heights.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "nheight/errors.hpp"

namespace nheight {

ProjectiveTuple canonicalize(std::span<const std::int64_t> coords, const Modulus& m) {
    if (coords.empty()) {
        throw domain_error("projective tuple needs at least one coordinate");
    }
    bool any_nonzero = false;
    for (std::int64_t c : coords) {
        if (c < 0 || c >= m.n()) {
            throw domain_error("coordinate " + std::to_string(c) + " is not reduced mod " +
                               std::to_string(m.n()));
        }
        any_nonzero = any_nonzero || c != 0;
    }
    if (!any_nonzero) {
        throw domain_error("projective tuple must be a nonzero d-tuple");
    }

    std::vector<std::int64_t> best(coords.begin(), coords.end());
    std::int64_t best_scale = 1;
    std::vector<std::int64_t> scaled(coords.size());
    for (std::int64_t k : m.units()) {
        for (std::size_t i = 0; i < coords.size(); ++i) {
            scaled[i] = (k * coords[i]) % m.n();
        }
        if (scaled < best) {
            best = scaled;
            best_scale = k;
        }
    }
    return ProjectiveTuple(m, std::vector<std::int64_t>(coords.begin(), coords.end()),
                           std::move(best), best_scale);
}

std::int64_t d_star(const ProjectiveTuple& a) {
    const auto c = a.coords();
    return std::count_if(c.begin(), c.end(), [](std::int64_t x) { return x != 0; });
}

HeightResult height(const ProjectiveTuple& a) {
    const auto coords = a.coords();
    const std::int64_t n = a.modulus().n();
    HeightResult out;
    out.value = std::numeric_limits<std::int64_t>::max();
    for (std::int64_t k : a.modulus().units()) {
        std::int64_t sum = 0;
        for (std::int64_t c : coords) {
            sum += (k * c) % n;
        }
        if (sum < out.value) {
            out.value = sum;
            out.witness = k;
        }
    }
    out.per_term.reserve(coords.size());
    for (std::int64_t c : coords) {
        out.per_term.push_back((out.witness * c) % n);
    }
    return out;
}

std::int64_t height_bound(const ProjectiveTuple& a) { return d_star(a) * a.modulus().n() / 2; }

std::int64_t height_value(std::span<const std::int64_t> coords, const Modulus& m) {
    const std::int64_t n = m.n();
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (std::int64_t k : m.units()) {
        std::int64_t sum = 0;
        for (std::int64_t c : coords) {
            sum += (k * c) % n;
        }
        best = std::min(best, sum);
    }
    return best;
}

}  // namespace nheight
