#ifndef NHEIGHT_HEIGHTS_HPP
#define NHEIGHT_HEIGHTS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "nheight/residue.hpp"

namespace nheight {

/// A nonzero d-tuple over Z/NZ, viewed as a point of projective space under
/// scaling by units.
///
/// `coords` keeps the tuple as given; `canonical` is the lexicographically
/// smallest member of its class and `scale` the smallest unit mapping coords
/// onto it. Repeated coordinates are allowed.
class ProjectiveTuple {
public:
    const Modulus& modulus() const noexcept { return modulus_; }
    std::span<const std::int64_t> coords() const noexcept { return coords_; }
    std::span<const std::int64_t> canonical() const noexcept { return canonical_; }
    std::int64_t scale() const noexcept { return scale_; }
    std::size_t size() const noexcept { return coords_.size(); }

    // Same projective class.
    bool equivalent(const ProjectiveTuple& other) const noexcept {
        return modulus_ == other.modulus_ && canonical_ == other.canonical_;
    }

private:
    friend ProjectiveTuple canonicalize(std::span<const std::int64_t>, const Modulus&);
    ProjectiveTuple(Modulus m, std::vector<std::int64_t> coords, std::vector<std::int64_t> canonical,
                    std::int64_t scale)
        : modulus_(std::move(m)), coords_(std::move(coords)), canonical_(std::move(canonical)),
          scale_(scale) {}

    Modulus modulus_;
    std::vector<std::int64_t> coords_;
    std::vector<std::int64_t> canonical_;
    std::int64_t scale_;
};

struct HeightResult {
    std::int64_t value = 0;
    std::int64_t witness = 0;              // smallest unit attaining the minimum
    std::vector<std::int64_t> per_term;    // (witness * a_i) mod N
};

// Coordinates must lie in [0, N) and not all be zero.
ProjectiveTuple canonicalize(std::span<const std::int64_t> coords, const Modulus& m);

std::int64_t d_star(const ProjectiveTuple& a);

// Exhaustive minimum of sum_i (k a_i mod N) over every unit k.
HeightResult height(const ProjectiveTuple& a);

// floor(d*(a) * N / 2)
std::int64_t height_bound(const ProjectiveTuple& a);

// Height value on raw least-nonnegative coordinates, no validation or
// canonicalization. Used in hot loops where the caller already checked input.
std::int64_t height_value(std::span<const std::int64_t> coords, const Modulus& m);

}  // namespace nheight

#endif  // NHEIGHT_HEIGHTS_HPP
