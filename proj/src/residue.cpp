#include "nheight/residue.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "nheight/errors.hpp"

namespace nheight {

namespace {

void check_same_modulus(const Residue& r, const Modulus& m) {
    if (r.modulus() != m.n()) {
        throw domain_error("residue mod " + std::to_string(r.modulus()) +
                           " used with modulus " + std::to_string(m.n()));
    }
}

}  // namespace

Modulus::Modulus(std::int64_t n) : n_(n) {
    if (n < 2) {
        throw domain_error("modulus must be at least 2, got " + std::to_string(n));
    }
    if (n > kMaxModulus) {
        throw domain_error("modulus " + std::to_string(n) + " exceeds the supported cap " +
                           std::to_string(kMaxModulus));
    }
    auto units = std::make_shared<std::vector<std::int64_t>>();
    for (std::int64_t k = 1; k < n; ++k) {
        if (std::gcd(k, n) == 1) {
            units->push_back(k);
        }
    }
    units_ = std::move(units);
}

bool Modulus::is_unit(std::int64_t k) const noexcept {
    return std::gcd(mod_reduce(k, n_), n_) == 1;
}

Residue Modulus::reduce(std::int64_t v) const noexcept {
    return Residue(mod_reduce(v, n_), n_);
}

Modulus make_modulus(std::int64_t n) { return Modulus(n); }

Residue::Residue(std::int64_t value, std::int64_t n) : value_(value), n_(n) {
    if (n < 2 || value < 0 || value >= n) {
        throw domain_error("residue " + std::to_string(value) + " is not a least nonnegative "
                           "representative mod " + std::to_string(n));
    }
}

Residue inv(const Residue& k, const Modulus& m) {
    check_same_modulus(k, m);
    const std::int64_t n = m.n();
    // extended Euclid on (k, n), tracking only the coefficient of k
    std::int64_t r0 = n, r1 = k.value();
    std::int64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        r0 = std::exchange(r1, r0 - q * r1);
        s0 = std::exchange(s1, s0 - q * s1);
    }
    if (r0 != 1) {
        throw domain_error(std::to_string(k.value()) + " is not a unit mod " + std::to_string(n) +
                           " (gcd = " + std::to_string(r0) + ")");
    }
    return m.reduce(s0);
}

std::int64_t unit_weighted_sum(const Residue& a, const Modulus& m) {
    check_same_modulus(a, m);
    if (a.is_zero()) {
        throw domain_error("unit-weighted sum requires a nonzero residue");
    }
    std::int64_t total = 0;
    for (std::int64_t k : m.units()) {
        total += (k * a.value()) % m.n();
    }
    return total;
}

}  // namespace nheight
