#ifndef NHEIGHT_SCANNER_HPP
#define NHEIGHT_SCANNER_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "nheight/fas.hpp"

namespace nheight {

enum class Verdict {
    fast_pass,                  // 4d <= N - 1, so dN/2 <= gamma/2 and the height bound suffices
    height_pass,                // 4h <= N(N-1-2d)
    exact_pass,                 // 4 beta <= N(N-1-2d)
    exact_fail,                 // CSS counterexample
    skipped_not_triangle_free,
    beta_uncomputed,            // height bound too weak and exact beta not requested
};

std::string_view to_string(Verdict v);

enum class ScanMode { bound_only, exact };

struct ScanConfig {
    int d = 1;
    int n_lo = 2;
    int n_hi = 2;
    ScanMode mode = ScanMode::bound_only;
    int exact_cap = kDefaultExactCap;
    bool dedupe = false;  // keep one connection set per projective class
    unsigned jobs = 0;    // 0 = hardware concurrency
};

struct ScanRecord {
    std::int64_t n = 0;
    std::int64_t d = 0;
    std::vector<std::int64_t> conn;
    std::vector<std::int64_t> canonical;
    bool triangle_free = false;
    std::int64_t height = 0;
    std::int64_t gamma_num = 0;   // N(N-1-2d); gamma/2 = gamma_num / 4
    bool fast_path = false;
    std::optional<std::int64_t> beta;
    Verdict verdict = Verdict::skipped_not_triangle_free;
};

struct ScanSummary {
    std::int64_t records = 0;
    std::int64_t triangle_free = 0;
    std::int64_t fast_pass = 0;
    std::int64_t height_pass = 0;
    std::int64_t exact_pass = 0;
    std::int64_t exact_fail = 0;
    std::int64_t skipped = 0;
    std::int64_t beta_uncomputed = 0;
};

// Throws config_error for an invalid config, including exact mode above the cap.
void validate(const ScanConfig& cfg);

// One record per (N, A) with |A| = d, N ascending then A lexicographic.
std::vector<ScanRecord> scan(const ScanConfig& cfg);

// Recomputes a record's verdict from its stored numbers alone.
Verdict derive_verdict(const ScanRecord& r);

ScanSummary summarize(const std::vector<ScanRecord>& records);

void write_csv(const std::vector<ScanRecord>& records, std::ostream& os);
void write_json(const std::vector<ScanRecord>& records, std::ostream& os);
void write_text(const std::vector<ScanRecord>& records, std::ostream& os);

// --- exhaustive verification -------------------------------------------

struct VerifyCell {
    std::int64_t n = 0;
    std::int64_t d = 0;
    std::int64_t instances = 0;
    std::int64_t triangle_free = 0;
    std::int64_t exact_pass = 0;
    std::int64_t exact_fail = 0;
    std::int64_t max_beta = 0;
};

struct Counterexample {
    std::int64_t n = 0;
    std::vector<std::int64_t> conn;
    FasResult certificate;
};

struct VerifySummary {
    std::int64_t n_max = 0;
    std::vector<VerifyCell> cells;          // (N, d) ascending; only cells with instances
    std::int64_t instances = 0;
    std::int64_t triangle_free = 0;
    std::int64_t failures = 0;
    // Triangle-free instances with 3d >= N; a sumset growth bound rules these out.
    std::int64_t hamidoune_violations = 0;
    // Largest beta / (gamma/2) seen, kept as the exact fraction 4 beta / gamma_num.
    std::int64_t max_ratio_num = 0;
    std::int64_t max_ratio_den = 1;
    std::int64_t max_ratio_n = 0;
    std::vector<std::int64_t> max_ratio_conn;
    std::vector<Counterexample> counterexamples;
};

// Every nonempty A in [1, N-1] for 2 <= N <= n_max; exact beta on each
// triangle-free graph.
VerifySummary verify_css_up_to(int n_max, int exact_cap = kDefaultExactCap, unsigned jobs = 0);

void write_json(const VerifySummary& s, std::ostream& os);
void write_csv(const VerifySummary& s, std::ostream& os);
void write_text(const VerifySummary& s, std::ostream& os);

// --- height tables ------------------------------------------------------

// A row as printed in the source tables: representative, height, star.
struct GoldenRow {
    int n;
    std::vector<std::int64_t> rep;
    std::int64_t height;
    bool starred;
};

struct TableRow {
    std::int64_t n = 0;
    std::vector<std::int64_t> rep;  // smallest strictly ascending member of the class
    std::int64_t height = 0;
    bool triangle_free = false;
    bool listed = false;            // appears among the golden rows
    // For unlisted rows: a listed row of the same N whose connection set is a
    // unit multiple of this one (as a set), if any.
    std::optional<std::vector<std::int64_t>> set_equivalent_to;
};

struct HeightTable {
    int d = 0;
    std::vector<int> moduli;
    bool triangle_free_only = false;
    std::vector<TableRow> rows;
};

struct TableSet {
    HeightTable pairs;     // d = 2, N = 7, 8, all classes
    HeightTable triples;   // d = 3, N = 10..12, triangle-free classes
    std::vector<std::string> mismatches;
    bool ok() const noexcept { return mismatches.empty(); }
};

const std::vector<GoldenRow>& golden_pairs();
const std::vector<GoldenRow>& golden_triples();

// Projective classes of d-tuples that have a strictly ascending member with
// positive first entry, keyed by the smallest such member.
HeightTable build_height_table(int d, const std::vector<int>& moduli, bool triangle_free_only,
                               const std::vector<GoldenRow>& golden);

// One message per golden row that is missing or differs in height or star.
std::vector<std::string> diff_table(const HeightTable& table, const std::vector<GoldenRow>& golden);

TableSet reproduce_tables();

void write_text(const TableSet& t, std::ostream& os);
void write_json(const TableSet& t, std::ostream& os);
void write_csv(const TableSet& t, std::ostream& os);

}  // namespace nheight

#endif  // NHEIGHT_SCANNER_HPP
