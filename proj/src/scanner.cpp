#include "nheight/scanner.hpp"

#include <bit>
#include <map>
#include <set>
#include <string>

#include "nheight/errors.hpp"
#include "nheight/parallel.hpp"

namespace nheight {

namespace {

bool css_fast_path(std::int64_t n, std::int64_t d) { return 4 * d <= n - 1; }

std::int64_t gamma_numerator(std::int64_t n, std::int64_t d) { return n * (n - 1 - 2 * d); }

// All d-subsets of [1, n-1] in lexicographic order.
void append_subsets(std::int64_t n, std::int64_t d, std::vector<std::vector<std::int64_t>>& out) {
    if (d < 1 || d > n - 1) return;
    std::vector<std::int64_t> c(static_cast<std::size_t>(d));
    for (std::int64_t i = 0; i < d; ++i) c[static_cast<std::size_t>(i)] = i + 1;
    for (;;) {
        out.push_back(c);
        std::int64_t i = d - 1;
        while (i >= 0 && c[static_cast<std::size_t>(i)] == n - d + i) --i;
        if (i < 0) return;
        ++c[static_cast<std::size_t>(i)];
        for (std::int64_t j = i + 1; j < d; ++j) {
            c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
}

}  // namespace

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::fast_pass: return "fast-pass";
        case Verdict::height_pass: return "height-pass";
        case Verdict::exact_pass: return "exact-pass";
        case Verdict::exact_fail: return "exact-fail";
        case Verdict::skipped_not_triangle_free: return "skipped-not-triangle-free";
        case Verdict::beta_uncomputed: return "beta-uncomputed";
    }
    return "unknown";
}

void validate(const ScanConfig& cfg) {
    if (cfg.d < 1) {
        throw config_error("--d must be at least 1, got " + std::to_string(cfg.d));
    }
    if (cfg.n_lo < 2) {
        throw config_error("N range must start at 2 or above, got " + std::to_string(cfg.n_lo));
    }
    if (cfg.n_hi < cfg.n_lo) {
        throw config_error("N range " + std::to_string(cfg.n_lo) + ":" + std::to_string(cfg.n_hi) +
                           " is empty");
    }
    if (cfg.n_hi > kMaxModulus) {
        throw config_error("N range upper bound exceeds " + std::to_string(kMaxModulus));
    }
    if (cfg.exact_cap < 1 || cfg.exact_cap > kMaxExactCap) {
        throw config_error("exact cap must lie in [1, " + std::to_string(kMaxExactCap) + "], got " +
                           std::to_string(cfg.exact_cap));
    }
    if (cfg.mode == ScanMode::exact && cfg.n_hi > cfg.exact_cap) {
        throw config_error("exact mode needs N <= exact cap " + std::to_string(cfg.exact_cap) +
                           ", but the range reaches " + std::to_string(cfg.n_hi));
    }
}

std::vector<ScanRecord> scan(const ScanConfig& cfg) {
    validate(cfg);

    struct Item {
        std::int64_t n;
        std::vector<std::int64_t> conn;
    };
    std::vector<Item> items;
    for (std::int64_t n = cfg.n_lo; n <= cfg.n_hi; ++n) {
        std::vector<std::vector<std::int64_t>> subsets;
        append_subsets(n, cfg.d, subsets);
        for (auto& a : subsets) items.push_back({n, std::move(a)});
    }

    std::map<std::int64_t, Modulus> moduli;
    for (std::int64_t n = cfg.n_lo; n <= cfg.n_hi; ++n) moduli.emplace(n, Modulus(n));

    std::vector<ScanRecord> records(items.size());
    parallel_for_index(items.size(), cfg.jobs, [&](std::size_t i) {
        const Item& item = items[i];
        const CirculantGraph g(moduli.at(item.n), item.conn);
        const GraphReport report = make_report(g);
        ScanRecord& r = records[i];
        r.n = item.n;
        r.d = g.d();
        r.conn = item.conn;
        const auto tuple = g.tuple();
        r.canonical.assign(tuple.canonical().begin(), tuple.canonical().end());
        r.triangle_free = report.triangle_free();
        r.height = report.height_bound_beta;
        r.gamma_num = gamma_numerator(r.n, r.d);
        r.fast_path = report.css_fast_path;
        if (!r.triangle_free) {
            r.verdict = Verdict::skipped_not_triangle_free;
        } else if (r.fast_path) {
            r.verdict = Verdict::fast_pass;
        } else if (cfg.mode == ScanMode::exact) {
            r.beta = beta_exact(FasInstance::from_circulant(g, cfg.exact_cap), cfg.exact_cap).beta;
            r.verdict = 4 * *r.beta <= r.gamma_num ? Verdict::exact_pass : Verdict::exact_fail;
        } else if (4 * r.height <= r.gamma_num) {
            r.verdict = Verdict::height_pass;
        } else {
            r.verdict = Verdict::beta_uncomputed;
        }
    });

    if (cfg.dedupe) {
        std::set<std::pair<std::int64_t, std::vector<std::int64_t>>> seen;
        std::vector<ScanRecord> kept;
        for (auto& r : records) {
            if (seen.emplace(r.n, r.canonical).second) kept.push_back(std::move(r));
        }
        records = std::move(kept);
    }
    return records;
}

Verdict derive_verdict(const ScanRecord& r) {
    if (!r.triangle_free) return Verdict::skipped_not_triangle_free;
    if (css_fast_path(r.n, r.d)) return Verdict::fast_pass;
    const std::int64_t gn = gamma_numerator(r.n, r.d);
    if (r.beta) return 4 * *r.beta <= gn ? Verdict::exact_pass : Verdict::exact_fail;
    if (4 * r.height <= gn) return Verdict::height_pass;
    return Verdict::beta_uncomputed;
}

ScanSummary summarize(const std::vector<ScanRecord>& records) {
    ScanSummary s;
    for (const auto& r : records) {
        ++s.records;
        if (r.triangle_free) ++s.triangle_free;
        switch (r.verdict) {
            case Verdict::fast_pass: ++s.fast_pass; break;
            case Verdict::height_pass: ++s.height_pass; break;
            case Verdict::exact_pass: ++s.exact_pass; break;
            case Verdict::exact_fail: ++s.exact_fail; break;
            case Verdict::skipped_not_triangle_free: ++s.skipped; break;
            case Verdict::beta_uncomputed: ++s.beta_uncomputed; break;
        }
    }
    return s;
}

VerifySummary verify_css_up_to(int n_max, int exact_cap, unsigned jobs) {
    if (n_max < 2) {
        throw config_error("--n-max must be at least 2, got " + std::to_string(n_max));
    }
    if (exact_cap > kMaxExactCap) {
        throw config_error("exact cap must not exceed " + std::to_string(kMaxExactCap));
    }
    if (n_max > exact_cap) {
        throw config_error("verification computes exact beta; --n-max " + std::to_string(n_max) +
                           " exceeds the exact cap " + std::to_string(exact_cap));
    }

    struct Item {
        std::int64_t n;
        std::uint32_t mask;  // bit a-1 set for each a in A
    };
    struct Outcome {
        bool triangle_free = false;
        std::int64_t beta = 0;
        std::optional<FasResult> failure;
    };
    std::vector<Item> items;
    for (std::int64_t n = 2; n <= n_max; ++n) {
        const std::uint32_t limit = std::uint32_t{1} << (n - 1);
        for (std::uint32_t mask = 1; mask < limit; ++mask) items.push_back({n, mask});
    }
    std::vector<Modulus> moduli;
    for (std::int64_t n = 0; n <= n_max; ++n) moduli.emplace_back(std::max<std::int64_t>(n, 2));

    auto conn_of = [](std::uint32_t mask) {
        std::vector<std::int64_t> conn;
        for (std::uint32_t m = mask; m; m &= m - 1) conn.push_back(std::countr_zero(m) + 1);
        return conn;
    };

    std::vector<Outcome> outcomes(items.size());
    parallel_for_index(items.size(), jobs, [&](std::size_t i) {
        const Item& item = items[i];
        const CirculantGraph g(moduli[static_cast<std::size_t>(item.n)], conn_of(item.mask));
        Outcome& o = outcomes[i];
        o.triangle_free = is_triangle_free(g);
        if (!o.triangle_free) return;
        FasResult res = beta_exact(FasInstance::from_circulant(g, exact_cap), exact_cap);
        o.beta = res.beta;
        if (4 * res.beta > gamma_numerator(g.n(), g.d())) o.failure = std::move(res);
    });

    VerifySummary s;
    s.n_max = n_max;
    std::map<std::pair<std::int64_t, std::int64_t>, VerifyCell> cells;
    for (std::size_t i = 0; i < items.size(); ++i) {
        const Item& item = items[i];
        const Outcome& o = outcomes[i];
        const std::int64_t d = std::popcount(item.mask);
        VerifyCell& c = cells[{item.n, d}];
        c.n = item.n;
        c.d = d;
        ++c.instances;
        ++s.instances;
        if (!o.triangle_free) continue;
        ++c.triangle_free;
        ++s.triangle_free;
        if (3 * d >= item.n) ++s.hamidoune_violations;
        c.max_beta = std::max(c.max_beta, o.beta);
        if (o.failure) {
            ++c.exact_fail;
            ++s.failures;
            s.counterexamples.push_back({item.n, conn_of(item.mask), *o.failure});
        } else {
            ++c.exact_pass;
        }
        const std::int64_t num = 4 * o.beta;
        const std::int64_t den = gamma_numerator(item.n, d);
        if (s.max_ratio_conn.empty() || num * s.max_ratio_den > s.max_ratio_num * den) {
            s.max_ratio_num = num;
            s.max_ratio_den = den;
            s.max_ratio_n = item.n;
            s.max_ratio_conn = conn_of(item.mask);
        }
    }
    for (auto& [key, cell] : cells) s.cells.push_back(cell);
    return s;
}

}  // namespace nheight
