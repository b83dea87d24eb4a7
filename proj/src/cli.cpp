#include "nheight/cli.hpp"

#include <numeric>
#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "nheight/cayley.hpp"
#include "nheight/errors.hpp"
#include "nheight/fas.hpp"
#include "nheight/heights.hpp"
#include "nheight/scanner.hpp"

namespace nheight::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

class usage_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

std::string join(std::span<const std::int64_t> v, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

std::string edge_list_text(const std::vector<Edge>& edges) {
    std::string s;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (i) s += ' ';
        s += "(" + std::to_string(edges[i].from) + "," + std::to_string(edges[i].to) + ")";
    }
    return s;
}

ordered_json edges_json(const std::vector<Edge>& edges) {
    ordered_json arr = ordered_json::array();
    for (const Edge& e : edges) arr.push_back({e.from, e.to});
    return arr;
}

int default_exact_cap() {
    if (const char* env = std::getenv("NHEIGHT_EXACT_CAP")) {
        int cap = 0;
        const std::string_view text(env);
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), cap);
        if (ec == std::errc() && ptr == text.data() + text.size() && cap >= 1 && cap <= kMaxExactCap) {
            return cap;
        }
        throw usage_error("NHEIGHT_EXACT_CAP must be an integer in [1, " +
                          std::to_string(kMaxExactCap) + "], got '" + std::string(text) + "'");
    }
    return kDefaultExactCap;
}

Modulus parse_modulus(long long n) {
    if (n < 2) throw usage_error("--mod must be at least 2, got " + std::to_string(n));
    if (n > kMaxModulus) throw usage_error("--mod must not exceed " + std::to_string(kMaxModulus));
    return Modulus(n);
}

// Reduces every value mod N, noting any that changed.
std::vector<std::int64_t> reduce_all(const std::vector<long long>& raw, const Modulus& m,
                                     const char* flag, std::ostream& err) {
    std::vector<std::int64_t> out;
    for (long long v : raw) {
        const std::int64_t r = mod_reduce(v, m.n());
        if (r != v) err << "note: " << flag << " value " << v << " reduced to " << r << " mod " << m.n() << '\n';
        out.push_back(r);
    }
    return out;
}

CirculantGraph parse_graph(long long n, const std::string& conn_text, std::ostream& err) {
    const Modulus m = parse_modulus(n);
    auto conn = reduce_all(parse_int_list(conn_text), m, "--conn", err);
    std::sort(conn.begin(), conn.end());
    const auto dup = std::unique(conn.begin(), conn.end());
    if (dup != conn.end()) {
        err << "warning: --conn repeats values; duplicates dropped\n";
        conn.erase(dup, conn.end());
    }
    if (!conn.empty() && conn.front() == 0) {
        throw usage_error("--conn must not contain 0 mod " + std::to_string(n) +
                          " (it would add a loop at every vertex)");
    }
    return CirculantGraph(m, std::move(conn));
}

std::pair<int, int> parse_range(const std::string& text) {
    const auto colon = text.find(':');
    auto parse_one = [&](std::string_view part) {
        int v = 0;
        const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) {
            throw usage_error("--n-range expects LO:HI or a single N, got '" + text + "'");
        }
        return v;
    };
    if (colon == std::string::npos) {
        const int v = parse_one(text);
        return {v, v};
    }
    return {parse_one(std::string_view(text).substr(0, colon)),
            parse_one(std::string_view(text).substr(colon + 1))};
}

struct Options {
    std::string format = "text";
    std::string output;
    long long mod = 0;
    std::string coords;
    std::string conn;
    bool exact = false;
    bool certificate = false;
    bool dedupe = false;
    int exact_cap = 0;     // 0 = environment / default
    unsigned jobs = 0;
    int d = 0;
    std::string n_range;
    int n_max = 0;
};

int exact_cap_of(const Options& o) { return o.exact_cap != 0 ? o.exact_cap : default_exact_cap(); }

void add_format(CLI::App* sub, Options& o) {
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    sub->add_option("--output,-o", o.output, "Write data to this file instead of stdout");
}

void add_cap(CLI::App* sub, Options& o) {
    sub->add_option("--exact-cap", o.exact_cap,
                    "Largest N for exact beta and edge materialization (default 22, or $NHEIGHT_EXACT_CAP)")
        ->check(CLI::Range(1, kMaxExactCap));
}

int cmd_height(const Options& o, std::ostream& out, std::ostream& err) {
    const Modulus m = parse_modulus(o.mod);
    const auto coords = reduce_all(parse_int_list(o.coords), m, "--coords", err);
    const ProjectiveTuple a = canonicalize(coords, m);
    const HeightResult h = height(a);
    const std::string cls = "<" + join(a.coords(), ",") + ">";
    if (o.format == "json") {
        ordered_json j;
        j["n"] = m.n();
        j["coords"] = std::vector<std::int64_t>(a.coords().begin(), a.coords().end());
        j["canonical"] = std::vector<std::int64_t>(a.canonical().begin(), a.canonical().end());
        j["height"] = h.value;
        j["witness"] = h.witness;
        j["per_term"] = h.per_term;
        j["d_star"] = d_star(a);
        j["bound"] = height_bound(a);
        out << j.dump(2) << '\n';
    } else if (o.format == "csv") {
        out << "n,coords,canonical,height,witness,d_star,bound\n"
            << m.n() << ',' << join(a.coords(), "|") << ',' << join(a.canonical(), "|") << ','
            << h.value << ',' << h.witness << ',' << d_star(a) << ',' << height_bound(a) << '\n';
    } else {
        out << "h_" << m.n() << "(" << cls << ") = " << h.value << " (witness k=" << h.witness << ")\n";
        out << "terms at k=" << h.witness << ": " << join(h.per_term, " + ") << '\n';
        out << "canonical class: <" << join(a.canonical(), ",") << "> (scale " << a.scale() << ")\n";
        out << "nonzero components d* = " << d_star(a) << ", bound floor(d* N / 2) = " << height_bound(a) << '\n';
    }
    return kExitOk;
}

int cmd_graph(const Options& o, std::ostream& out, std::ostream& err) {
    const CirculantGraph g = parse_graph(o.mod, o.conn, err);
    const int cap = exact_cap_of(o);
    const GraphReport r = make_report(g);
    const ProjectiveTuple t = g.tuple();
    const HeightResult h = height(t);
    std::optional<std::int64_t> oracle;
    if (g.n() <= cap) oracle = gamma_oracle(g, cap);

    std::vector<std::optional<std::vector<std::int64_t>>> certs;
    for (int l = 1; l <= 3; ++l) certs.push_back(zero_sum_certificate(g, l));

    if (o.format == "json" || o.format == "csv") {
        ordered_json j;
        j["n"] = r.n;
        j["d"] = r.d;
        j["conn"] = std::vector<std::int64_t>(g.conn().begin(), g.conn().end());
        j["has_loop"] = r.has_loop;
        j["has_digon"] = r.has_digon;
        j["has_triangle"] = r.has_triangle;
        j["triangle_free"] = r.triangle_free();
        j["gamma"] = r.gamma ? ordered_json(*r.gamma) : ordered_json(nullptr);
        j["gamma_oracle"] = oracle ? ordered_json(*oracle) : ordered_json(nullptr);
        j["height_bound_beta"] = r.height_bound_beta;
        j["witness"] = h.witness;
        j["css_fast_path"] = r.css_fast_path;
        if (o.format == "json") {
            ordered_json c = ordered_json::array();
            for (const auto& cert : certs) c.push_back(cert ? ordered_json(*cert) : ordered_json(nullptr));
            j["zero_sum_certificates"] = c;
            out << j.dump(2) << '\n';
        } else {
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                out << (first ? "" : ",") << it.key();
                first = false;
            }
            out << '\n';
            first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                out << (first ? "" : ",");
                first = false;
                if (it->is_array()) {
                    out << join(it->get<std::vector<std::int64_t>>(), "|");
                } else if (!it->is_null()) {
                    out << it->dump();
                }
            }
            out << '\n';
        }
        return kExitOk;
    }

    out << "Cay(Z/" << g.n() << "Z, {" << join(g.conn(), ",") << "}): N=" << g.n() << ", d=" << g.d()
        << ", " << g.edge_count() << " edges\n";
    const char* names[] = {"loop", "digon", "triangle"};
    for (int l = 1; l <= 3; ++l) {
        const auto& cert = certs[static_cast<std::size_t>(l - 1)];
        out << names[l - 1] << " (length " << l << ", 0 in " << l << "A): ";
        if (cert) {
            std::int64_t sum = 0;
            for (auto x : *cert) sum += x;
            out << "yes, " << join(*cert, "+") << " = " << sum << " ≡ 0 (mod " << g.n() << ")\n";
        } else {
            out << "no\n";
        }
    }
    out << "3A = {" << join(sumset(g.conn(), 3, g.modulus()), ",") << "}\n";
    out << "triangle-free: " << (r.triangle_free() ? "yes" : "no") << '\n';
    out << "gamma: ";
    if (r.gamma) {
        out << "N(N-1-2d)/2 = " << *r.gamma;
    } else {
        out << "closed form n/a (loops or digons)";
    }
    if (oracle) out << ", direct count = " << *oracle;
    out << '\n';
    out << "height bound on beta: h_" << g.n() << "(<" << join(g.conn(), ",") << ">) = "
        << r.height_bound_beta << " (witness k=" << h.witness << ")\n";
    out << "fast path 4d <= N-1: " << (r.css_fast_path ? "yes" : "no") << '\n';
    return kExitOk;
}

int cmd_beta(const Options& o, std::ostream& out, std::ostream& err) {
    const CirculantGraph g = parse_graph(o.mod, o.conn, err);
    const int cap = exact_cap_of(o);
    if (g.n() > cap) {
        throw resource_error("exact beta needs 2^" + std::to_string(g.n()) +
                             " DP states; N exceeds --exact-cap " + std::to_string(cap));
    }
    const FasResult res = beta_exact(FasInstance::from_circulant(g, cap), cap);
    const std::int64_t bound = beta_height_bound(g);
    const bool tf = is_triangle_free(g);
    const std::int64_t gamma_num = g.n() * (g.n() - 1 - 2 * g.d());

    if (o.format == "json") {
        ordered_json j;
        j["n"] = g.n();
        j["conn"] = std::vector<std::int64_t>(g.conn().begin(), g.conn().end());
        j["beta"] = res.beta;
        j["height_bound"] = bound;
        j["triangle_free"] = tf;
        j["gamma_num"] = gamma_num;
        j["css_holds"] = tf ? ordered_json(4 * res.beta <= gamma_num) : ordered_json(nullptr);
        if (o.certificate) {
            j["ordering"] = res.ordering;
            j["removed"] = edges_json(res.removed);
        }
        out << j.dump(2) << '\n';
    } else if (o.format == "csv") {
        out << "n,conn,beta,height_bound,triangle_free,gamma_num" << (o.certificate ? ",ordering,removed" : "") << '\n';
        out << g.n() << ',' << join(g.conn(), "|") << ',' << res.beta << ',' << bound << ','
            << (tf ? "true" : "false") << ',' << gamma_num;
        if (o.certificate) {
            std::vector<std::int64_t> ord(res.ordering.begin(), res.ordering.end());
            std::string removed;
            for (std::size_t i = 0; i < res.removed.size(); ++i) {
                if (i) removed += '|';
                removed += std::to_string(res.removed[i].from) + ">" + std::to_string(res.removed[i].to);
            }
            out << ',' << join(ord, "|") << ',' << removed;
        }
        out << '\n';
    } else {
        std::vector<std::int64_t> ord(res.ordering.begin(), res.ordering.end());
        out << "beta(Cay(Z/" << g.n() << "Z, {" << join(g.conn(), ",") << "})) = " << res.beta << '\n';
        out << "ordering: " << join(ord, " ") << '\n';
        out << "removed edges (" << res.removed.size() << "): " << edge_list_text(res.removed) << '\n';
        out << "height bound: " << bound << '\n';
        if (tf) {
            const auto g4 = std::gcd(gamma_num, decltype(gamma_num){4});
            out << "triangle-free; gamma/2 = " << gamma_num / g4;
            if (g4 != 4) out << '/' << 4 / g4;
            out << ", 4 beta = " << 4 * res.beta
                << (4 * res.beta <= gamma_num ? " <= " : " > ") << gamma_num << '\n';
        } else {
            out << "not triangle-free; the inequality does not apply\n";
        }
    }
    return kExitOk;
}

void report_counterexample(std::int64_t n, std::span<const std::int64_t> conn, const FasResult& cert,
                           std::ostream& err) {
    std::vector<std::int64_t> ord(cert.ordering.begin(), cert.ordering.end());
    err << "CSS COUNTEREXAMPLE: N=" << n << " A={" << join(conn, ",") << "} beta=" << cert.beta << '\n'
        << "  ordering: " << join(ord, " ") << '\n'
        << "  removed: " << edge_list_text(cert.removed) << '\n';
}

int cmd_scan(const Options& o, std::ostream& out, std::ostream& err) {
    ScanConfig cfg;
    cfg.d = o.d;
    std::tie(cfg.n_lo, cfg.n_hi) = parse_range(o.n_range);
    cfg.mode = o.exact ? ScanMode::exact : ScanMode::bound_only;
    cfg.exact_cap = exact_cap_of(o);
    cfg.dedupe = o.dedupe;
    cfg.jobs = o.jobs;
    const auto records = scan(cfg);
    if (o.format == "csv") {
        write_csv(records, out);
    } else if (o.format == "json") {
        write_json(records, out);
    } else {
        write_text(records, out);
    }
    int code = kExitOk;
    for (const auto& r : records) {
        if (r.verdict != Verdict::exact_fail) continue;
        const CirculantGraph g(Modulus(r.n), r.conn);
        report_counterexample(r.n, r.conn, beta_exact(FasInstance::from_circulant(g, cfg.exact_cap), cfg.exact_cap), err);
        code = kExitCounterexample;
    }
    return code;
}

int cmd_tables(const Options& o, std::ostream& out, std::ostream& err) {
    const TableSet t = reproduce_tables();
    if (o.format == "csv") {
        write_csv(t, out);
    } else if (o.format == "json") {
        write_json(t, out);
    } else {
        write_text(t, out);
    }
    for (const auto& m : t.mismatches) err << "mismatch: " << m << '\n';
    return t.ok() ? kExitOk : kExitError;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
    const VerifySummary s = verify_css_up_to(o.n_max, exact_cap_of(o), o.jobs);
    if (o.format == "csv") {
        write_csv(s, out);
    } else if (o.format == "json") {
        write_json(s, out);
    } else {
        write_text(s, out);
    }
    for (const auto& c : s.counterexamples) report_counterexample(c.n, c.conn, c.certificate, err);
    return s.failures > 0 ? kExitCounterexample : kExitOk;
}

}  // namespace

std::vector<long long> parse_int_list(const std::string& text) {
    std::vector<long long> out;
    std::string_view rest(text);
    if (rest.empty()) throw usage_error("expected a comma-separated integer list, got nothing");
    for (;;) {
        const auto comma = rest.find(',');
        std::string_view item = rest.substr(0, comma);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        long long v = 0;
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (item.empty() || ec != std::errc() || ptr != item.data() + item.size() || v < 0) {
            throw usage_error("malformed integer list '" + text + "': expected nonnegative integers like 1,2,8,9");
        }
        out.push_back(v);
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Heights on Z/NZ, circulant digraphs, and exact feedback arc sets", "nheight"};
    app.require_subcommand(1);
    Options o;

    auto* height_cmd = app.add_subcommand(
        "height", "Height h_N(<a_1,...,a_d>): least sum of (k a_i mod N) over units k, with witness k");
    height_cmd->add_option("--mod", o.mod, "Modulus N >= 2")->required();
    height_cmd->add_option("--coords", o.coords, "Tuple a_1,...,a_d (reduced mod N)")->required();
    add_format(height_cmd, o);

    auto* graph_cmd = app.add_subcommand(
        "graph", "Inspect Cay(Z/NZ, E_A): short cycles via 0 in lA, gamma, and the height bound on beta");
    graph_cmd->add_option("--mod", o.mod, "Modulus N >= 2")->required();
    graph_cmd->add_option("--conn", o.conn, "Connection set A, e.g. 1,2,8,9")->required();
    add_format(graph_cmd, o);
    add_cap(graph_cmd, o);

    auto* beta_cmd = app.add_subcommand(
        "beta", "Exact beta by subset DP; beta never exceeds the height of A, which is at most dN/2");
    beta_cmd->add_option("--mod", o.mod, "Modulus N >= 2")->required();
    beta_cmd->add_option("--conn", o.conn, "Connection set A")->required();
    beta_cmd->add_flag("--certificate", o.certificate, "Include ordering and removed edges in csv/json");
    add_format(beta_cmd, o);
    add_cap(beta_cmd, o);

    auto* scan_cmd = app.add_subcommand(
        "scan", "Sweep all d-subsets A for N in a range; fast path when 4d <= N-1, else height, else exact beta");
    scan_cmd->add_option("--d", o.d, "Size of the connection set")->required()->check(CLI::PositiveNumber);
    scan_cmd->add_option("--n-range", o.n_range, "Inclusive range LO:HI")->required();
    scan_cmd->add_flag("--exact", o.exact, "Compute exact beta where the fast path does not apply");
    scan_cmd->add_flag("--dedupe", o.dedupe, "Keep one connection set per projective class");
    scan_cmd->add_option("--jobs", o.jobs, "Worker threads (default: all cores)");
    add_format(scan_cmd, o);
    add_cap(scan_cmd, o);

    auto* tables_cmd = app.add_subcommand(
        "tables", "Regenerate the d=2 (N=7,8) and d=3 (N=10..12) height tables and diff against fixtures");
    add_format(tables_cmd, o);

    auto* verify_cmd = app.add_subcommand(
        "verify", "Check beta <= gamma/2 with exact beta on every triangle-free circulant with N <= n-max");
    verify_cmd->add_option("--n-max", o.n_max, "Largest modulus")->required();
    verify_cmd->add_option("--jobs", o.jobs, "Worker threads (default: all cores)");
    add_format(verify_cmd, o);
    add_cap(verify_cmd, o);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        // help of the selected subcommand, if any
        for (const auto* sub : app.get_subcommands()) {
            err << sub->help();
            return kExitError;
        }
        err << app.help();
        return kExitError;
    }

    try {
        std::ofstream file;
        std::ostream* data = &out;
        if (!o.output.empty()) {
            file.open(o.output, std::ios::binary);
            if (!file) throw usage_error("cannot open --output file '" + o.output + "'");
            data = &file;
        }
        if (*height_cmd) return cmd_height(o, *data, err);
        if (*graph_cmd) return cmd_graph(o, *data, err);
        if (*beta_cmd) return cmd_beta(o, *data, err);
        if (*scan_cmd) return cmd_scan(o, *data, err);
        if (*tables_cmd) return cmd_tables(o, *data, err);
        if (*verify_cmd) return cmd_verify(o, *data, err);
    } catch (const usage_error& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}

}  // namespace nheight::cli
