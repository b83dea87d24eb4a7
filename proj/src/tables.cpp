#include <algorithm>
#include <string>

#include "nheight/cayley.hpp"
#include "nheight/heights.hpp"
#include "nheight/scanner.hpp"

namespace nheight {

namespace {

// Transcribed row by row; a star marks a triangle-free connection set.
const std::vector<GoldenRow> kPairs = {
    {7, {1, 2}, 3, true},  {7, {1, 3}, 4, false}, {7, {1, 4}, 3, true},
    {7, {1, 5}, 4, false}, {7, {1, 6}, 7, false},
    {8, {1, 2}, 3, true},  {8, {1, 3}, 4, true},  {8, {1, 4}, 5, false},
    {8, {1, 5}, 6, true},  {8, {1, 6}, 5, false}, {8, {1, 7}, 8, false},
    {8, {2, 3}, 5, false}, {8, {2, 4}, 6, false}, {8, {2, 5}, 3, true},
    {8, {2, 6}, 8, false}, {8, {4, 5}, 5, false}, {8, {4, 6}, 6, false},
};

// Only triangle-free classes were tabulated for triples.
const std::vector<GoldenRow> kTriples = {
    {10, {1, 2, 3}, 6, true},  {10, {1, 4, 7}, 6, true},
    {11, {1, 2, 3}, 6, true},  {11, {1, 2, 4}, 7, true},  {11, {1, 2, 6}, 7, true},
    {11, {1, 3, 6}, 7, true},  {11, {1, 4, 8}, 6, true},  {11, {1, 6, 7}, 6, true},
    {12, {1, 2, 3}, 6, true},  {12, {1, 2, 7}, 10, true}, {12, {1, 3, 5}, 9, true},
    {12, {1, 3, 7}, 11, true}, {12, {1, 5, 9}, 15, true}, {12, {1, 7, 9}, 11, true},
};

bool strictly_ascending(const std::vector<std::int64_t>& t) {
    if (t.empty() || t.front() < 1) return false;
    return std::adjacent_find(t.begin(), t.end(), std::greater_equal<>()) == t.end();
}

std::vector<std::int64_t> scaled(const std::vector<std::int64_t>& t, std::int64_t k, std::int64_t n) {
    std::vector<std::int64_t> out(t.size());
    std::transform(t.begin(), t.end(), out.begin(), [&](std::int64_t a) { return (k * a) % n; });
    return out;
}

std::string show(std::int64_t n, const std::vector<std::int64_t>& rep) {
    std::string s = "N=" + std::to_string(n) + " <";
    for (std::size_t i = 0; i < rep.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(rep[i]);
    }
    return s + ">";
}

}  // namespace

const std::vector<GoldenRow>& golden_pairs() { return kPairs; }
const std::vector<GoldenRow>& golden_triples() { return kTriples; }

HeightTable build_height_table(int d, const std::vector<int>& moduli, bool triangle_free_only,
                               const std::vector<GoldenRow>& golden) {
    HeightTable table;
    table.d = d;
    table.moduli = moduli;
    table.triangle_free_only = triangle_free_only;

    for (int n : moduli) {
        if (d > n - 1) continue;
        const Modulus m(n);
        std::vector<TableRow> rows;
        std::vector<std::int64_t> t(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) t[static_cast<std::size_t>(i)] = i + 1;
        for (;;) {
            bool representative = true;
            for (std::int64_t k : m.units()) {
                const auto u = scaled(t, k, n);
                if (strictly_ascending(u) && u < t) {
                    representative = false;
                    break;
                }
            }
            if (representative) {
                const CirculantGraph g(m, t);
                TableRow row;
                row.n = n;
                row.rep = t;
                row.height = height(canonicalize(t, m)).value;
                row.triangle_free = is_triangle_free(g);
                row.listed = std::any_of(golden.begin(), golden.end(), [&](const GoldenRow& r) {
                    return r.n == n && r.rep == t;
                });
                if (!triangle_free_only || row.triangle_free) rows.push_back(std::move(row));
            }
            // next strictly ascending tuple in [1, n-1]
            int i = d - 1;
            while (i >= 0 && t[static_cast<std::size_t>(i)] == n - d + i) --i;
            if (i < 0) break;
            ++t[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < d; ++j) t[static_cast<std::size_t>(j)] = t[static_cast<std::size_t>(j - 1)] + 1;
        }

        for (TableRow& row : rows) {
            if (row.listed) continue;
            for (std::int64_t k : m.units()) {
                auto u = scaled(row.rep, k, n);
                std::sort(u.begin(), u.end());
                const auto hit = std::find_if(rows.begin(), rows.end(), [&](const TableRow& r) {
                    return r.listed && r.rep == u;
                });
                if (hit != rows.end()) {
                    row.set_equivalent_to = hit->rep;
                    break;
                }
            }
        }
        for (auto& row : rows) table.rows.push_back(std::move(row));
    }
    return table;
}

std::vector<std::string> diff_table(const HeightTable& table, const std::vector<GoldenRow>& golden) {
    std::vector<std::string> out;
    for (const GoldenRow& g : golden) {
        const auto it = std::find_if(table.rows.begin(), table.rows.end(), [&](const TableRow& r) {
            return r.n == g.n && r.rep == g.rep;
        });
        if (it == table.rows.end()) {
            out.push_back(show(g.n, g.rep) + ": tabulated row not regenerated");
            continue;
        }
        if (it->height != g.height) {
            out.push_back(show(g.n, g.rep) + ": height " + std::to_string(it->height) +
                          ", table says " + std::to_string(g.height));
        }
        if (it->triangle_free != g.starred) {
            out.push_back(show(g.n, g.rep) + ": triangle-free " + (it->triangle_free ? "yes" : "no") +
                          ", table star " + (g.starred ? "yes" : "no"));
        }
    }
    return out;
}

TableSet reproduce_tables() {
    TableSet set;
    set.pairs = build_height_table(2, {7, 8}, false, kPairs);
    set.triples = build_height_table(3, {10, 11, 12}, true, kTriples);

    set.mismatches = diff_table(set.pairs, kPairs);
    for (auto& m : diff_table(set.triples, kTriples)) set.mismatches.push_back(std::move(m));
    return set;
}

}  // namespace nheight
