#include <doctest.h>

#include <algorithm>
#include <random>

#include "nheight/errors.hpp"
#include "nheight/heights.hpp"
#include "oracles.hpp"

using namespace nheight;

namespace {

ProjectiveTuple tup(std::vector<std::int64_t> c, std::int64_t n) { return canonicalize(c, Modulus(n)); }

std::vector<std::int64_t> vec(std::span<const std::int64_t> s) { return {s.begin(), s.end()}; }

}  // namespace

TEST_CASE("d_star counts nonzero components") {
    CHECK(d_star(tup({1, 2}, 7)) == 2);
    CHECK(d_star(tup({1, 0, 3}, 10)) == 2);
    CHECK(d_star(tup({5}, 10)) == 1);
}

TEST_CASE("height reproduces tabulated values") {
    CHECK(height(tup({1, 2}, 7)).value == 3);
    CHECK(height(tup({1, 5}, 8)).value == 6);
    CHECK(height(tup({1, 5, 9}, 12)).value == 15);
    CHECK(height(tup({1, 2, 8, 9}, 14)).value == 20);
}

TEST_CASE("height witness is the smallest minimizing unit") {
    const auto h = height(tup({1, 2, 8, 9}, 14));
    std::int64_t first = 0;
    for (std::int64_t k : oracle::units(14)) {
        std::int64_t s = 0;
        for (std::int64_t a : {1, 2, 8, 9}) s += (k * a) % 14;
        if (s == 20) {
            first = k;
            break;
        }
    }
    CHECK(h.witness == first);
    std::int64_t sum = 0;
    for (auto t : h.per_term) sum += t;
    CHECK(sum == h.value);
    CHECK(h.per_term.size() == 4);
}

TEST_CASE("height of a single unit coordinate is 1") {
    for (std::int64_t n = 2; n <= 80; ++n) {
        for (std::int64_t a : oracle::units(n)) CHECK(height(tup({a}, n)).value == 1);
    }
}

TEST_CASE("height_bound") {
    CHECK(height_bound(tup({1, 2}, 7)) == 7);
    CHECK(height_bound(tup({1, 2, 8, 9}, 14)) == 28);
    CHECK(height_bound(tup({1}, 9)) == 4);
    CHECK(height_bound(tup({0, 3, 0}, 9)) == 4);
}

TEST_CASE("canonicalize examples") {
    CHECK(vec(tup({2, 4}, 7).canonical()) == std::vector<std::int64_t>{1, 2});
    CHECK(tup({2, 4}, 7).scale() == 4);
    CHECK(vec(tup({1, 2}, 7).canonical()) == std::vector<std::int64_t>{1, 2});
    CHECK(vec(tup({3, 0}, 9).canonical()) == std::vector<std::int64_t>{3, 0});
}

TEST_CASE("canonicalize rejects bad input") {
    CHECK_THROWS_AS(tup({0, 0, 0}, 7), domain_error);
    CHECK_THROWS_AS(tup({}, 7), domain_error);
    CHECK_THROWS_AS(tup({7, 1}, 7), domain_error);
    CHECK_THROWS_AS(tup({-1, 1}, 7), domain_error);
}

TEST_CASE("repeated coordinates are allowed") {
    CHECK(height(tup({3, 3}, 7)).value == 2);
}

TEST_CASE("scale invariance and canonical fixed point") {
    std::mt19937_64 rng(20261014);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::int64_t n = std::uniform_int_distribution<std::int64_t>(2, 40)(rng);
        const int d = std::uniform_int_distribution<int>(1, 4)(rng);
        std::vector<std::int64_t> a(static_cast<std::size_t>(d));
        do {
            for (auto& x : a) x = std::uniform_int_distribution<std::int64_t>(0, n - 1)(rng);
        } while (std::all_of(a.begin(), a.end(), [](auto x) { return x == 0; }));
        const Modulus m(n);
        const auto base = canonicalize(a, m);
        const auto expect_h = oracle::height(a, n);
        CHECK(height(base).value == expect_h);
        CHECK(height_value(a, m) == expect_h);

        // canonical is one unit scaling away
        std::vector<std::int64_t> via(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) via[i] = (base.scale() * a[i]) % n;
        CHECK(via == vec(base.canonical()));
        CHECK(vec(canonicalize(base.canonical(), m).canonical()) == vec(base.canonical()));
        CHECK(d_star(canonicalize(base.canonical(), m)) == d_star(base));

        for (std::int64_t lambda : m.units()) {
            std::vector<std::int64_t> b(a.size());
            for (std::size_t i = 0; i < a.size(); ++i) b[i] = (lambda * a[i]) % n;
            const auto scaled = canonicalize(b, m);
            CHECK(scaled.equivalent(base));
            CHECK(height(scaled).value == expect_h);
        }

        auto perm = a;
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(height(canonicalize(perm, m)).value == expect_h);
    }
}

TEST_CASE("projective equivalence matches orbit membership") {
    const std::int64_t n = 12;
    const Modulus m(n);
    for (std::int64_t a = 0; a < n; ++a) {
        for (std::int64_t b = 0; b < n; ++b) {
            if (a == 0 && b == 0) continue;
            for (std::int64_t c = 0; c < n; ++c) {
                for (std::int64_t e = 0; e < n; ++e) {
                    if (c == 0 && e == 0) continue;
                    bool orbit = false;
                    for (std::int64_t k : oracle::units(n)) {
                        orbit = orbit || ((k * a) % n == c && (k * b) % n == e);
                    }
                    const std::vector<std::int64_t> x{a, b}, y{c, e};
                    CHECK(canonicalize(x, m).equivalent(canonicalize(y, m)) == orbit);
                }
            }
        }
    }
}

TEST_CASE("averaging bound holds term by term for small moduli") {
    for (std::int64_t n = 2; n <= 30; ++n) {
        const Modulus m(n);
        for (std::int64_t a = 0; a < n; ++a) {
            for (std::int64_t b = 0; b < n; ++b) {
                if (a == 0 && b == 0) continue;
                const std::vector<std::int64_t> t{a, b};
                const auto p = canonicalize(t, m);
                std::int64_t avg_num = 0;  // phi(N) times the average over units
                for (std::int64_t x : t) {
                    if (x != 0) avg_num += unit_weighted_sum(Residue(x, n), m);
                }
                CHECK(avg_num * 2 == d_star(p) * n * m.phi());
                CHECK(height(p).value * m.phi() <= avg_num);
            }
        }
    }
}

TEST_CASE("modulus 2 height equals d_star") {
    const Modulus m(2);
    for (int mask = 1; mask < 32; ++mask) {
        std::vector<std::int64_t> t;
        for (int i = 0; i < 5; ++i) t.push_back((mask >> i) & 1);
        const auto p = canonicalize(t, m);
        CHECK(height(p).value == d_star(p));
    }
}
