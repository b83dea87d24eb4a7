#ifndef NHEIGHT_RESIDUE_HPP
#define NHEIGHT_RESIDUE_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace nheight {

// Largest modulus accepted anywhere; keeps every product k*a below 2^40.
inline constexpr std::int64_t kMaxModulus = std::int64_t{1} << 20;

// Least nonnegative representative of v modulo n (n > 0).
constexpr std::int64_t mod_reduce(std::int64_t v, std::int64_t n) noexcept {
    std::int64_t r = v % n;
    return r < 0 ? r + n : r;
}

class Residue;

/// The ring parameter N >= 2 together with its unit group.
///
/// Copies are cheap: the unit list is shared and immutable, so a Modulus can
/// be handed to any number of workers after construction.
class Modulus {
public:
    explicit Modulus(std::int64_t n);

    std::int64_t n() const noexcept { return n_; }
    std::int64_t phi() const noexcept { return static_cast<std::int64_t>(units_->size()); }
    // Ascending list of k in [1, n) with gcd(k, n) = 1.
    std::span<const std::int64_t> units() const noexcept { return *units_; }

    bool is_unit(std::int64_t k) const noexcept;
    Residue reduce(std::int64_t v) const noexcept;

    friend bool operator==(const Modulus& a, const Modulus& b) noexcept { return a.n_ == b.n_; }

private:
    std::int64_t n_;
    std::shared_ptr<const std::vector<std::int64_t>> units_;
};

Modulus make_modulus(std::int64_t n);

/// An element of Z/nZ stored by its least nonnegative representative.
class Residue {
public:
    // Throws domain_error unless 0 <= value < n.
    Residue(std::int64_t value, std::int64_t n);

    std::int64_t value() const noexcept { return value_; }
    std::int64_t modulus() const noexcept { return n_; }
    bool is_zero() const noexcept { return value_ == 0; }

    friend bool operator==(const Residue&, const Residue&) = default;

private:
    std::int64_t value_;
    std::int64_t n_;
};

// u with (k * u) mod n = 1. Throws domain_error naming gcd(k, n) for non-units.
Residue inv(const Residue& k, const Modulus& m);

// Sum over all units k of ((k * a) mod n), computed term by term. a must be nonzero.
std::int64_t unit_weighted_sum(const Residue& a, const Modulus& m);

}  // namespace nheight

#endif  // NHEIGHT_RESIDUE_HPP
