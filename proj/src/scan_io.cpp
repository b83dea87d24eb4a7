#include <iomanip>
#include <sstream>
#include <string>

#include <json.hpp>

#include "nheight/scanner.hpp"

namespace nheight {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string join(const std::vector<std::int64_t>& v, char sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

ordered_json to_json(const ScanRecord& r) {
    ordered_json j;
    j["n"] = r.n;
    j["d"] = r.d;
    j["conn"] = r.conn;
    j["canonical"] = r.canonical;
    j["triangle_free"] = r.triangle_free;
    j["height"] = r.height;
    j["gamma_num"] = r.gamma_num;
    j["fast_path"] = r.fast_path;
    j["beta"] = r.beta ? ordered_json(*r.beta) : ordered_json(nullptr);
    j["verdict"] = std::string(to_string(r.verdict));
    return j;
}

ordered_json to_json(const ScanSummary& s) {
    ordered_json j;
    j["records"] = s.records;
    j["triangle_free"] = s.triangle_free;
    j["fast-pass"] = s.fast_pass;
    j["height-pass"] = s.height_pass;
    j["exact-pass"] = s.exact_pass;
    j["exact-fail"] = s.exact_fail;
    j["skipped-not-triangle-free"] = s.skipped;
    j["beta-uncomputed"] = s.beta_uncomputed;
    return j;
}

ordered_json to_json(const FasResult& r) {
    ordered_json j;
    j["beta"] = r.beta;
    j["ordering"] = r.ordering;
    ordered_json removed = ordered_json::array();
    for (const Edge& e : r.removed) removed.push_back({e.from, e.to});
    j["removed"] = removed;
    return j;
}

ordered_json to_json(const TableRow& r) {
    ordered_json j;
    j["n"] = r.n;
    j["rep"] = r.rep;
    j["height"] = r.height;
    j["triangle_free"] = r.triangle_free;
    j["listed"] = r.listed;
    j["set_equivalent_to"] = r.set_equivalent_to ? ordered_json(*r.set_equivalent_to) : ordered_json(nullptr);
    return j;
}

ordered_json to_json(const HeightTable& t) {
    ordered_json j;
    j["d"] = t.d;
    j["moduli"] = t.moduli;
    j["triangle_free_only"] = t.triangle_free_only;
    ordered_json rows = ordered_json::array();
    for (const auto& r : t.rows) rows.push_back(to_json(r));
    j["rows"] = rows;
    return j;
}

void write_table_text(const HeightTable& t, std::ostream& os) {
    os << "d = " << t.d << (t.triangle_free_only ? " (triangle-free classes only)" : "") << "\n";
    os << "   N  class            h   listed\n";
    for (const auto& r : t.rows) {
        std::string cls = "<" + join(r.rep, ',') + ">" + (r.triangle_free ? "*" : "");
        os << std::setw(4) << r.n << "  " << std::left << std::setw(15) << cls << std::right
           << std::setw(4) << r.height << "   " << (r.listed ? "yes" : "no");
        if (r.set_equivalent_to) {
            os << "  (as a set, a unit multiple of <" << join(*r.set_equivalent_to, ',') << ">)";
        }
        os << "\n";
    }
}

}  // namespace

void write_csv(const std::vector<ScanRecord>& records, std::ostream& os) {
    os << "n,d,conn,canonical,triangle_free,height,gamma_num,fast_path,beta,verdict\n";
    for (const auto& r : records) {
        os << r.n << ',' << r.d << ',' << join(r.conn, '|') << ',' << join(r.canonical, '|') << ','
           << yes_no(r.triangle_free) << ',' << r.height << ',' << r.gamma_num << ','
           << yes_no(r.fast_path) << ',';
        if (r.beta) os << *r.beta;
        os << ',' << to_string(r.verdict) << '\n';
    }
    const ScanSummary s = summarize(records);
    os << "# summary: records=" << s.records << " triangle_free=" << s.triangle_free
       << " fast-pass=" << s.fast_pass << " height-pass=" << s.height_pass
       << " exact-pass=" << s.exact_pass << " exact-fail=" << s.exact_fail
       << " skipped-not-triangle-free=" << s.skipped << " beta-uncomputed=" << s.beta_uncomputed
       << '\n';
}

void write_json(const std::vector<ScanRecord>& records, std::ostream& os) {
    ordered_json out = ordered_json::array();
    for (const auto& r : records) out.push_back(to_json(r));
    out.push_back(ordered_json{{"summary", to_json(summarize(records))}});
    os << out.dump(2) << '\n';
}

void write_text(const std::vector<ScanRecord>& records, std::ostream& os) {
    os << "   N  d  A                    h  gamma/2  beta  verdict\n";
    for (const auto& r : records) {
        std::ostringstream half;
        half << r.gamma_num / 4;
        if (r.gamma_num % 4 != 0) half << "+" << r.gamma_num % 4 << "/4";
        os << std::setw(4) << r.n << std::setw(3) << r.d << "  " << std::left << std::setw(18)
           << ("{" + join(r.conn, ',') + "}") << std::right << std::setw(4) << r.height
           << std::setw(9) << half.str() << std::setw(6) << (r.beta ? std::to_string(*r.beta) : "-")
           << "  " << to_string(r.verdict) << '\n';
    }
    const ScanSummary s = summarize(records);
    os << "records " << s.records << ", triangle-free " << s.triangle_free << ", fast-pass "
       << s.fast_pass << ", height-pass " << s.height_pass << ", exact-pass " << s.exact_pass
       << ", exact-fail " << s.exact_fail << ", beta-uncomputed " << s.beta_uncomputed << '\n';
}

void write_json(const VerifySummary& s, std::ostream& os) {
    ordered_json j;
    j["n_max"] = s.n_max;
    ordered_json cells = ordered_json::array();
    for (const auto& c : s.cells) {
        cells.push_back(ordered_json{{"n", c.n},
                                     {"d", c.d},
                                     {"instances", c.instances},
                                     {"triangle_free", c.triangle_free},
                                     {"exact_pass", c.exact_pass},
                                     {"exact_fail", c.exact_fail},
                                     {"max_beta", c.max_beta}});
    }
    j["cells"] = cells;
    ordered_json summary;
    summary["instances"] = s.instances;
    summary["triangle_free"] = s.triangle_free;
    summary["failures"] = s.failures;
    summary["hamidoune_violations"] = s.hamidoune_violations;
    summary["max_ratio_num"] = s.max_ratio_num;
    summary["max_ratio_den"] = s.max_ratio_den;
    summary["max_ratio_n"] = s.max_ratio_n;
    summary["max_ratio_conn"] = s.max_ratio_conn;
    ordered_json cex = ordered_json::array();
    for (const auto& c : s.counterexamples) {
        cex.push_back(ordered_json{{"n", c.n}, {"conn", c.conn}, {"certificate", to_json(c.certificate)}});
    }
    summary["counterexamples"] = cex;
    j["summary"] = summary;
    os << j.dump(2) << '\n';
}

void write_csv(const VerifySummary& s, std::ostream& os) {
    os << "n,d,instances,triangle_free,exact_pass,exact_fail,max_beta\n";
    for (const auto& c : s.cells) {
        os << c.n << ',' << c.d << ',' << c.instances << ',' << c.triangle_free << ','
           << c.exact_pass << ',' << c.exact_fail << ',' << c.max_beta << '\n';
    }
    os << "# summary: instances=" << s.instances << " triangle_free=" << s.triangle_free
       << " failures=" << s.failures << " hamidoune_violations=" << s.hamidoune_violations
       << " max_ratio=" << s.max_ratio_num << "/" << s.max_ratio_den << " at N=" << s.max_ratio_n
       << " A=" << join(s.max_ratio_conn, '|') << '\n';
}

void write_text(const VerifySummary& s, std::ostream& os) {
    os << "   N  d  instances  triangle-free  pass  fail  max beta\n";
    for (const auto& c : s.cells) {
        if (c.triangle_free == 0) continue;
        os << std::setw(4) << c.n << std::setw(3) << c.d << std::setw(11) << c.instances
           << std::setw(15) << c.triangle_free << std::setw(6) << c.exact_pass << std::setw(6)
           << c.exact_fail << std::setw(10) << c.max_beta << '\n';
    }
    os << "checked " << s.instances << " connection sets with N <= " << s.n_max << ", "
       << s.triangle_free << " triangle-free, " << s.failures << " failures\n";
    os << "largest beta/(gamma/2) = " << s.max_ratio_num << "/" << s.max_ratio_den << " at N="
       << s.max_ratio_n << " A={" << join(s.max_ratio_conn, ',') << "}\n";
    os << "triangle-free sets with 3d >= N: " << s.hamidoune_violations << '\n';
}

void write_text(const TableSet& t, std::ostream& os) {
    write_table_text(t.pairs, os);
    os << '\n';
    write_table_text(t.triples, os);
    os << '\n';
    if (t.ok()) {
        os << "all tabulated heights and triangle-free marks reproduced\n";
    } else {
        for (const auto& m : t.mismatches) os << "MISMATCH " << m << '\n';
    }
}

void write_json(const TableSet& t, std::ostream& os) {
    ordered_json j;
    j["pairs"] = to_json(t.pairs);
    j["triples"] = to_json(t.triples);
    j["mismatches"] = t.mismatches;
    j["ok"] = t.ok();
    os << j.dump(2) << '\n';
}

void write_csv(const TableSet& t, std::ostream& os) {
    os << "d,n,rep,height,triangle_free,listed,set_equivalent_to\n";
    for (const HeightTable* table : {&t.pairs, &t.triples}) {
        for (const auto& r : table->rows) {
            os << table->d << ',' << r.n << ',' << join(r.rep, '|') << ',' << r.height << ','
               << yes_no(r.triangle_free) << ',' << yes_no(r.listed) << ','
               << (r.set_equivalent_to ? join(*r.set_equivalent_to, '|') : "") << '\n';
        }
    }
    os << "# summary: mismatches=" << t.mismatches.size() << '\n';
}

}  // namespace nheight
