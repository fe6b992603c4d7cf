#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "probedf/certificates.hpp"
#include "probedf/generate.hpp"
#include "probedf/json_io.hpp"
#include "probedf/oracle.hpp"
#include "probedf/recognize.hpp"

namespace {

using namespace probedf;
using nlohmann::ordered_json;

int thread_budget() {
    int hw = (int)std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("PROBEDF_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return std::min(v, hw);
    }
    return hw;
}

GraphFormat parse_format(const std::string& f) {
    return f == "dimacs" ? GraphFormat::dimacs : GraphFormat::edgelist;
}

// exits with code 2 on I/O or parse failure
Graph load_graph(const std::string& path, GraphFormat format) {
    try {
        if (path.empty() || path == "-") return parse_graph(std::cin, format);
        std::ifstream in(path);
        if (!in) {
            std::cerr << "error: cannot open " << path << "\n";
            std::exit(2);
        }
        return parse_graph(in, format);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        std::exit(2);
    }
}

int cmd_recognize(const std::string& path, const std::string& format, bool as_json) {
    Graph g = load_graph(path, parse_format(format));
    Certificate cert = recognize(g);
    if (as_json) {
        std::cout << certificate_to_json(cert).dump(2) << "\n";
    } else if (cert.member) {
        std::cout << "member: yes\nprobes:";
        for (int v : cert.probes) std::cout << ' ' << v;
        std::cout << "\nnonprobes:";
        for (int v : cert.nonprobes) std::cout << ' ' << v;
        std::cout << "\ncompletion:";
        for (auto [u, v] : cert.completion) std::cout << ' ' << u << '-' << v;
        std::cout << "\n";
    } else {
        std::cout << "member: no\nindicator: " << cert.indicator << " ("
                  << obstruction_template(cert.indicator).name << ")\nvertices:";
        for (int v : cert.vertices) std::cout << ' ' << v;
        std::cout << "\n";
    }
    return cert.member ? 0 : 1;
}

int cmd_gen(const std::string& kind, int n, double p, std::uint64_t seed, int indicator) {
    try {
        Graph g = kind == "planted-yes"  ? planted_yes(n, p, seed)
                  : kind == "planted-no" ? planted_no(n, p, seed, indicator)
                                         : gnp(n, p, seed);
        std::cout << to_edgelist(g);
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

int cmd_verify(const std::string& graph_path, const std::string& cert_path,
               const std::string& format) {
    Graph g = load_graph(graph_path, parse_format(format));
    std::ifstream in(cert_path);
    if (!in) {
        std::cerr << "error: cannot open " << cert_path << "\n";
        return 2;
    }
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: invalid JSON: " << e.what() << "\n";
        return 2;
    }
    std::string reason;
    switch (check_certificate(g, doc, &reason)) {
        case CertCheck::accept:
            std::cout << "accepted\n";
            return 0;
        case CertCheck::reject:
            std::cout << "rejected: " << reason << "\n";
            return 1;
        default:
            std::cerr << "schema mismatch: " << reason << "\n";
            return 2;
    }
}

int cmd_oracle(const std::string& path, const std::string& basis, const std::string& format) {
    Graph g = load_graph(path, parse_format(format));
    ordered_json doc;
    bool member;
    if (basis == "completion") {
        auto v = oracle_completion(g);
        member = v.member;
        doc["member"] = v.member;
        doc["basis"] = "completion";
        if (v.member) {
            doc["nonprobes"] = v.nonprobes;
            auto comp = ordered_json::array();
            for (auto [u, w] : v.completion) comp.push_back({u, w});
            doc["completion"] = std::move(comp);
        }
    } else {
        auto v = oracle_forbidden(g);
        member = v.member;
        doc["member"] = v.member;
        doc["basis"] = "forbidden";
        if (!v.member) {
            doc["indicator"] = v.indicator;
            doc["name"] = obstruction_template(v.indicator).name;
            doc["vertices"] = v.obstruction;
        }
    }
    std::cout << doc.dump(2) << "\n";
    return member ? 0 : 1;
}

int cmd_bench(const std::string& sizes_arg, double density, std::uint64_t seed, int repeats) {
    std::vector<int> sizes;
    {
        std::stringstream ss(sizes_arg);
        std::string tok;
        while (std::getline(ss, tok, ',')) sizes.push_back(std::stoi(tok));
    }
    if (sizes.empty() || !std::is_sorted(sizes.begin(), sizes.end())) {
        std::cerr << "error: --sizes must be a nondecreasing comma-separated list\n";
        return 2;
    }

    ordered_json rows = ordered_json::array();
    std::vector<double> log_nm, log_t;
    for (size_t si = 0; si < sizes.size(); ++si) {
        int n = sizes[si];
        double p = std::min(1.0, 2.0 * density / std::max(1, n - 1));
        // instance generation may fan out; recognition is timed sequentially
        std::vector<std::future<Graph>> gen;
        int budget = std::min(repeats, thread_budget());
        std::vector<Graph> instances(repeats);
        for (int r = 0; r < repeats; ++r) {
            std::uint64_t s = seed + 1000003ull * si + r;
            if (budget > 1)
                gen.push_back(std::async(std::launch::async, [=] { return gnp(n, p, s); }));
            else
                instances[r] = gnp(n, p, s);
        }
        for (int r = 0; r < (int)gen.size(); ++r) instances[r] = gen[r].get();

        std::vector<double> times;
        long long ops = 0, m = 0;
        for (int r = 0; r < repeats; ++r) {
            Instrumentation stats;
            auto t0 = std::chrono::steady_clock::now();
            recognize(instances[r], &stats);
            auto t1 = std::chrono::steady_clock::now();
            times.push_back(std::chrono::duration<double>(t1 - t0).count());
            ops = std::max(ops, stats.total());
            m = std::max(m, (long long)instances[r].edge_count());
        }
        std::sort(times.begin(), times.end());
        double median = times[times.size() / 2];
        rows.push_back({{"n", n}, {"m", m}, {"seconds", median}, {"ops", ops}});
        if (median > 0 && m > 0) {
            log_nm.push_back(std::log((double)n * (double)m));
            log_t.push_back(std::log(median));
        }
    }

    ordered_json doc;
    doc["rows"] = std::move(rows);
    if (log_nm.size() >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        int k = (int)log_nm.size();
        for (int i = 0; i < k; ++i) {
            sx += log_nm[i];
            sy += log_t[i];
            sxx += log_nm[i] * log_nm[i];
            sxy += log_nm[i] * log_t[i];
        }
        doc["exponent"] = (k * sxy - sx * sy) / (k * sxx - sx * sx);
    } else {
        doc["exponent"] = nullptr;
    }
    std::cout << doc.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"probe diamond-free graph recognition"};
    app.require_subcommand(1);

    std::string path = "-", format = "edgelist", cert_path, basis = "forbidden";
    std::string kind = "gnp", sizes = "500,1000,2000,4000,8000";
    bool as_json = false;
    int n = 10, repeats = 3, indicator = 0;
    double p = 0.5, density = 10.0;
    std::uint64_t seed = 0;

    auto* rec = app.add_subcommand("recognize", "decide membership and print a certificate");
    rec->add_option("file", path, "input graph ('-' for stdin)");
    rec->add_option("--format", format)->check(CLI::IsMember({"edgelist", "dimacs"}));
    rec->add_flag("--json", as_json, "emit the certificate as JSON");

    auto* gen = app.add_subcommand("gen", "generate a graph on standard output");
    gen->add_option("--kind", kind)->check(CLI::IsMember({"gnp", "planted-yes", "planted-no"}));
    gen->add_option("--n", n)->required();
    gen->add_option("--p", p, "edge probability");
    gen->add_option("--seed", seed)->required();
    gen->add_option("--indicator", indicator, "template for planted-no (0 = random)");

    auto* ver = app.add_subcommand("verify", "check a certificate against a graph");
    ver->add_option("--graph", path)->required();
    ver->add_option("--cert", cert_path)->required();
    ver->add_option("--format", format)->check(CLI::IsMember({"edgelist", "dimacs"}));

    auto* ora = app.add_subcommand("oracle", "brute-force ground truth (small graphs)");
    ora->add_option("file", path, "input graph ('-' for stdin)");
    ora->add_option("--basis", basis)->check(CLI::IsMember({"forbidden", "completion"}));
    ora->add_option("--format", format)->check(CLI::IsMember({"edgelist", "dimacs"}));

    auto* ben = app.add_subcommand("bench", "timing and operation counts on random instances");
    ben->add_option("--sizes", sizes, "comma-separated vertex counts, ascending");
    ben->add_option("--density", density, "average degree m/n");
    ben->add_option("--seed", seed);
    ben->add_option("--repeats", repeats)->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage and option errors exit 2; --help exits 0
    }

    if (rec->parsed()) return cmd_recognize(path, format, as_json);
    if (gen->parsed()) return cmd_gen(kind, n, p, seed, indicator);
    if (ver->parsed()) return cmd_verify(path, cert_path, format);
    if (ora->parsed()) return cmd_oracle(path, basis, format);
    if (ben->parsed()) return cmd_bench(sizes, density, seed, repeats);
    return 2;
}
