#include <doctest.h>

#include <set>
#include <sstream>

#include "nheight/errors.hpp"
#include "nheight/scanner.hpp"
#include "oracles.hpp"

using namespace nheight;

namespace {

ScanConfig config(int d, int lo, int hi, ScanMode mode) {
    ScanConfig c;
    c.d = d;
    c.n_lo = lo;
    c.n_hi = hi;
    c.mode = mode;
    c.jobs = 1;
    return c;
}

const ScanRecord* find(const std::vector<ScanRecord>& rs, std::int64_t n, std::vector<std::int64_t> a) {
    for (const auto& r : rs) {
        if (r.n == n && r.conn == a) return &r;
    }
    return nullptr;
}

}  // namespace

TEST_CASE("scan d=2, N=7 exact") {
    const auto rs = scan(config(2, 7, 7, ScanMode::exact));
    CHECK(rs.size() == 15);
    std::set<std::vector<std::int64_t>> classes;
    for (const auto& r : rs) {
        if (!r.triangle_free) continue;
        classes.insert(r.canonical);
        CHECK((r.verdict == Verdict::exact_pass || r.verdict == Verdict::fast_pass));
    }
    CHECK(classes == std::set<std::vector<std::int64_t>>{{1, 2}, {1, 4}});
}

TEST_CASE("scan d=1, N=4 exact") {
    const auto rs = scan(config(1, 4, 4, ScanMode::exact));
    REQUIRE(rs.size() == 3);
    for (std::int64_t a : {1, 3}) {
        const auto* r = find(rs, 4, {a});
        REQUIRE(r);
        CHECK(r->triangle_free);
        CHECK(r->verdict == Verdict::exact_pass);
        REQUIRE(r->beta);
        CHECK(*r->beta == 1);
    }
    CHECK(find(rs, 4, {2})->verdict == Verdict::skipped_not_triangle_free);
}

TEST_CASE("scan the N=14 example in both modes") {
    const auto bound = scan(config(4, 14, 14, ScanMode::bound_only));
    const auto* r = find(bound, 14, {1, 2, 8, 9});
    REQUIRE(r);
    CHECK(r->triangle_free);
    CHECK(r->height == 20);
    CHECK(r->gamma_num == 70);
    CHECK(r->verdict == Verdict::beta_uncomputed);
    CHECK_FALSE(r->beta);

    auto cfg = config(4, 14, 14, ScanMode::exact);
    const auto exact = scan(cfg);
    const auto* e = find(exact, 14, {1, 2, 8, 9});
    REQUIRE(e);
    REQUIRE(e->beta);
    CHECK(e->verdict == (4 * *e->beta <= 70 ? Verdict::exact_pass : Verdict::exact_fail));
}

TEST_CASE("scan config validation runs before any work") {
    CHECK_THROWS_AS(scan(config(2, 20, 30, ScanMode::exact)), config_error);
    CHECK_THROWS_AS(scan(config(0, 5, 6, ScanMode::bound_only)), config_error);
    CHECK_THROWS_AS(scan(config(2, 1, 6, ScanMode::bound_only)), config_error);
    CHECK_THROWS_AS(scan(config(2, 9, 6, ScanMode::bound_only)), config_error);
    auto c = config(2, 5, 6, ScanMode::exact);
    c.exact_cap = 40;
    CHECK_THROWS_AS(scan(c), config_error);
    CHECK_NOTHROW(scan(config(2, 20, 30, ScanMode::bound_only)));
}

TEST_CASE("records are self-certifying and respect the height bounds") {
    for (int d = 1; d <= 4; ++d) {
        const auto rs = scan(config(d, 2, 18, ScanMode::exact));
        for (const auto& r : rs) {
            CHECK(derive_verdict(r) == r.verdict);
            CHECK(r.verdict != Verdict::exact_fail);
            CHECK(r.gamma_num == r.n * (r.n - 1 - 2 * r.d));
            if (r.verdict == Verdict::fast_pass) CHECK(4 * r.d <= r.n - 1);
            if (r.verdict == Verdict::height_pass) CHECK(4 * r.height <= r.gamma_num);
            if (r.verdict == Verdict::exact_pass) CHECK(4 * *r.beta <= r.gamma_num);
            if (r.triangle_free) {
                CHECK(3 * r.d < r.n);
                if (r.n >= 4 * r.d + 1) {
                    CHECK((r.verdict == Verdict::fast_pass || r.verdict == Verdict::height_pass));
                }
                CHECK(r.height == oracle::height(r.conn, r.n));
            }
        }
    }
    // bound-only never computes beta
    for (const auto& r : scan(config(3, 10, 14, ScanMode::bound_only))) {
        CHECK_FALSE(r.beta);
        CHECK(derive_verdict(r) == r.verdict);
    }
}

TEST_CASE("scan ordering is N ascending then lexicographic") {
    const auto rs = scan(config(2, 5, 8, ScanMode::bound_only));
    for (std::size_t i = 1; i < rs.size(); ++i) {
        CHECK(std::tie(rs[i - 1].n, rs[i - 1].conn) < std::tie(rs[i].n, rs[i].conn));
    }
}

TEST_CASE("dedupe keeps one record per projective class") {
    auto c = config(2, 7, 8, ScanMode::bound_only);
    c.dedupe = true;
    const auto rs = scan(c);
    std::set<std::pair<std::int64_t, std::vector<std::int64_t>>> keys;
    for (const auto& r : rs) CHECK(keys.emplace(r.n, r.canonical).second);
    const auto all = scan(config(2, 7, 8, ScanMode::bound_only));
    std::set<std::pair<std::int64_t, std::vector<std::int64_t>>> all_keys;
    for (const auto& r : all) all_keys.emplace(r.n, r.canonical);
    CHECK(keys == all_keys);
}

TEST_CASE("parallel scan output equals sequential output") {
    auto seq = config(3, 10, 13, ScanMode::exact);
    auto par = seq;
    par.jobs = 4;
    std::ostringstream a, b;
    write_csv(scan(seq), a);
    write_csv(scan(par), b);
    CHECK(a.str() == b.str());
}

TEST_CASE("csv layout") {
    std::ostringstream os;
    write_csv(scan(config(4, 14, 14, ScanMode::bound_only)), os);
    const std::string s = os.str();
    CHECK(s.rfind("n,d,conn,canonical,triangle_free,height,gamma_num,fast_path,beta,verdict\n", 0) == 0);
    CHECK(s.find("\n14,4,1|2|8|9,") != std::string::npos);
    CHECK(s.find(",true,20,70,false,,beta-uncomputed\n") != std::string::npos);
    CHECK(s.find("# summary: records=715 ") != std::string::npos);
    CHECK(s.find('\r') == std::string::npos);
}

TEST_CASE("json layout") {
    std::ostringstream os;
    write_json(scan(config(1, 4, 4, ScanMode::exact)), os);
    const std::string s = os.str();
    CHECK(s.find("\"verdict\": \"exact-pass\"") != std::string::npos);
    CHECK(s.find("\"summary\"") != std::string::npos);
    CHECK(s.find("\"beta\": null") != std::string::npos);
}

TEST_CASE("reproduce_tables matches every tabulated row") {
    const TableSet t = reproduce_tables();
    CHECK(t.ok());
    for (const auto& m : t.mismatches) MESSAGE(m);
    CHECK(t.pairs.rows.size() == 17);
    for (const auto& r : t.pairs.rows) CHECK(r.listed);

    auto row = [](const HeightTable& table, std::int64_t n, std::vector<std::int64_t> rep) -> const TableRow* {
        for (const auto& r : table.rows) {
            if (r.n == n && r.rep == rep) return &r;
        }
        return nullptr;
    };
    const auto* r25 = row(t.pairs, 8, {2, 5});
    REQUIRE(r25);
    CHECK(r25->height == 3);
    CHECK(r25->triangle_free);

    std::int64_t n10 = 0;
    for (const auto& r : t.triples.rows) n10 += r.n == 10;
    CHECK(n10 == 2);
    CHECK(row(t.triples, 10, {1, 2, 3})->height == 6);
    CHECK(row(t.triples, 10, {1, 4, 7})->height == 6);
    CHECK(row(t.triples, 11, {1, 6, 7})->height == 6);
    CHECK(row(t.triples, 12, {1, 5, 9})->height == 15);
}

TEST_CASE("untabulated triple classes are unit multiples of tabulated sets with equal height") {
    const TableSet t = reproduce_tables();
    std::int64_t unlisted = 0;
    for (const auto& r : t.triples.rows) {
        CHECK(r.triangle_free);
        if (r.listed) continue;
        ++unlisted;
        REQUIRE(r.set_equivalent_to);
        CHECK(oracle::height(*r.set_equivalent_to, r.n) == r.height);
    }
    // (2,5,8) (3,7,9) (4,5,8) (5,8,10) mod 11 and six more mod 12
    CHECK(unlisted == 10);
}

TEST_CASE("golden diff reports corrupted rows") {
    auto golden = golden_pairs();
    golden[0].height += 1;       // N=7 <1,2>
    golden[3].starred = true;    // N=7 <1,5>
    golden.push_back({7, {2, 3}, 4, false});  // not a class representative
    const auto table = build_height_table(2, {7, 8}, false, golden);
    const auto msgs = diff_table(table, golden);
    REQUIRE(msgs.size() == 3);
    CHECK(msgs[0].find("N=7 <1,2>: height 3") != std::string::npos);
    CHECK(msgs[1].find("N=7 <1,5>: triangle-free no") != std::string::npos);
    CHECK(msgs[2].find("N=7 <2,3>: tabulated row not regenerated") != std::string::npos);
    CHECK(diff_table(table, golden_pairs()).empty());
}

TEST_CASE("verify_css_up_to small cases") {
    const auto s4 = verify_css_up_to(4, kDefaultExactCap, 1);
    CHECK(s4.failures == 0);
    CHECK(s4.triangle_free == 2);  // {1} and {3} mod 4

    const auto s8 = verify_css_up_to(8, kDefaultExactCap, 1);
    CHECK(s8.failures == 0);
    CHECK(s8.hamidoune_violations == 0);
    CHECK(s8.instances == (1 + 3 + 7 + 15 + 31 + 63 + 127));

    // C3 = {1,2} mod 3 is never counted as triangle-free
    for (const auto& c : s8.cells) {
        if (c.n == 3) CHECK(c.triangle_free == 0);
    }
    CHECK_THROWS_AS(verify_css_up_to(30), config_error);
    CHECK_THROWS_AS(verify_css_up_to(1), config_error);
}
