#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cayleynut/construct.hpp"
#include "cayleynut/errors.hpp"
#include "cayleynut/formats.hpp"
#include "cayleynut/nut.hpp"

namespace {

using namespace cayleynut;

constexpr int kExitInternal = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitWindow = 3;

int thread_count() {
    if (const char* env = std::getenv("CAYLEYNUT_THREADS")) {
        const int parsed = std::atoi(env);
        if (parsed >= 1) return parsed;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(std::min(hw, 8u));
}

std::string compressed_degree_sequence(const Graph& g) {
    const std::vector<int> degs = g.degree_sequence();
    std::string out;
    std::size_t i = 0;
    while (i < degs.size()) {
        std::size_t j = i;
        while (j < degs.size() && degs[j] == degs[i]) ++j;
        if (!out.empty()) out += ",";
        out += std::to_string(degs[i]) + "^" + std::to_string(j - i);
        i = j;
    }
    return out.empty() ? "-" : out;
}

std::string kernel_string(const RationalVector& kernel) {
    std::string out = "[";
    for (std::size_t i = 0; i < kernel.size(); ++i) {
        if (i) out += ",";
        out += kernel[i].get_str();
    }
    return out + "]";
}

struct ConstructOptions {
    int order = 0;
    int degree = 0;
    std::string format = "graph6";
    std::string certificate_path;
    bool force_window = false;
};

int run_construct(const ConstructOptions& opt) {
    const int window = opt.force_window ? opt.order : kDefaultSearchWindow;
    const ConstructionResult result = construct_cayley_nut(opt.order, opt.degree, window);
    const Graph graph = decode_graph6(result.certificate.graph6);

    if (opt.format == "graph6") {
        std::cout << result.certificate.graph6 << "\n";
    } else if (opt.format == "edgelist") {
        std::cout << encode_edge_list(graph);
    } else {
        std::cout << construction_json(result).dump(2) << "\n";
    }

    if (!opt.certificate_path.empty()) {
        std::ofstream out(opt.certificate_path);
        if (!out) throw std::runtime_error("cannot write " + opt.certificate_path);
        out << construction_json(result).dump(2) << "\n";
    }
    std::cerr << "constructed " << result.n << "-vertex " << result.d
              << "-regular nut graph via regime " << regime_name(result.regime) << "\n";
    return 0;
}

int run_verify(const std::string& path) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (path != "-") {
        file.open(path);
        if (!file) {
            std::cerr << "cannot read " << path << "\n";
            return kExitInternal;
        }
        in = &file;
    }

    bool all_nut = true;
    std::string line;
    while (std::getline(*in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        try {
            const Graph g = decode_graph6(line);
            const NutVerdict verdict = is_nut(g);
            if (verdict.nut) {
                std::cout << "NUT order=" << g.order()
                          << " degree-sequence=" << compressed_degree_sequence(g)
                          << " kernel=" << kernel_string(verdict.certificate->kernel) << "\n";
            } else {
                all_nut = false;
                std::cout << "NOT_NUT reason=" << to_string(*verdict.reason);
                if (verdict.reason != NotNutReason::trivial_graph)
                    std::cout << " nullity=" << verdict.nullity;
                std::cout << "\n";
            }
        } catch (const Graph6ParseError& e) {
            all_nut = false;
            std::cout << "ERROR offset=" << e.offset() << " " << e.detail() << "\n";
        }
    }
    return all_nut ? 0 : kExitInternal;
}

struct SearchOptions {
    int order = 0;
    int degree = 0;
    bool all = false;
    bool force_window = false;
};

int run_search(const SearchOptions& opt) {
    if (opt.order > kDefaultSearchWindow && !opt.force_window)
        throw WindowExceededError(opt.order, kDefaultSearchWindow);

    bool found = false;
    std::size_t tested = 0;
    for_each_connection_set(opt.order, opt.degree, [&](const ConnectionSet& cs) {
        ++tested;
        if (!circulant_is_nut(cs)) return true;
        found = true;
        std::cout << cs.step_string() << " " << encode_graph6(circulant_graph(cs)) << "\n";
        return opt.all;  // stop after the least witness unless --all
    });
    if (!found) {
        std::cout << "NONE\n";
        std::cerr << "no " << opt.degree << "-regular circulant nut graph on " << opt.order
                  << " vertices; exhausted " << tested << " connection sets\n";
    }
    return 0;
}

struct ScanRow {
    int order = 0;
    bool feasible = false;
    std::string regime_or_reason;
    std::string graph6;
};

struct ScanOptions {
    int degree = 0;
    int max_order = 0;
    bool json = false;
    bool force_window = false;
};

ScanRow scan_row(int n, const ScanOptions& opt) {
    ScanRow row;
    row.order = n;
    try {
        const int window = opt.force_window ? n : kDefaultSearchWindow;
        const ConstructionResult result = construct_cayley_nut(n, opt.degree, window);
        row.feasible = true;
        row.regime_or_reason = regime_name(result.regime);
        row.graph6 = result.certificate.graph6;
    } catch (const InfeasibleError& e) {
        row.regime_or_reason = e.condition();
    }
    return row;
}

int run_scan(const ScanOptions& opt) {
    if (opt.degree <= 0 || opt.degree % 4 != 0) {
        if (opt.degree > 0 && opt.degree % 4 == 2) {
            std::cerr << "infeasible: the set of feasible orders for degree " << opt.degree
                      << " (d = 2 mod 4) is an open problem; this tool only covers 4 | d\n";
        } else {
            std::cerr << "infeasible: scan needs a positive degree divisible by 4, got "
                      << opt.degree << "\n";
        }
        return kExitInfeasible;
    }

    std::vector<ScanRow> rows(static_cast<std::size_t>(opt.max_order) + 1);
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::atomic<int> next{1};
    const int workers = std::min(thread_count(), std::max(1, opt.max_order));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            for (int n = next.fetch_add(1); n <= opt.max_order; n = next.fetch_add(1)) {
                try {
                    rows[n] = scan_row(n, opt);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    return;
                }
            }
        });
    }
    for (std::thread& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);

    int feasible = 0;
    for (int n = 1; n <= opt.max_order; ++n)
        if (rows[n].feasible) ++feasible;

    if (opt.json) {
        nlohmann::json jrows = nlohmann::json::array();
        for (int n = 1; n <= opt.max_order; ++n) {
            const ScanRow& row = rows[n];
            nlohmann::json jrow{{"feasible", row.feasible}, {"order", row.order}};
            if (row.feasible) {
                jrow["graph6"] = row.graph6;
                jrow["regime"] = row.regime_or_reason;
            } else {
                jrow["reason"] = row.regime_or_reason;
            }
            jrows.push_back(std::move(jrow));
        }
        const nlohmann::json report{
            {"degree", opt.degree},
            {"max_order", opt.max_order},
            {"rows", std::move(jrows)},
            {"summary",
             {{"feasible", feasible}, {"infeasible", opt.max_order - feasible}}},
        };
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << "order  feasible  regime/reason        graph6\n";
        for (int n = 1; n <= opt.max_order; ++n) {
            const ScanRow& row = rows[n];
            std::ostringstream line;
            line.width(5);
            line << std::left << row.order << "  ";
            line.width(8);
            line << std::left << (row.feasible ? "yes" : "no") << "  ";
            line.width(19);
            line << std::left << row.regime_or_reason << "  ";
            line << (row.feasible ? row.graph6 : "-");
            std::cout << line.str() << "\n";
        }
        std::cout << "feasible " << feasible << " of " << opt.max_order << " orders\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"construct and certify regular Cayley nut graphs"};
    app.require_subcommand(1);

    ConstructOptions construct_opt;
    CLI::App* construct_cmd =
        app.add_subcommand("construct", "construct a certified d-regular nut graph of order n");
    construct_cmd->add_option("--order,-n", construct_opt.order, "number of vertices")
        ->required();
    construct_cmd->add_option("--degree,-d", construct_opt.degree, "vertex degree")->required();
    construct_cmd->add_option("--format,-f", construct_opt.format, "output format")
        ->check(CLI::IsMember({"graph6", "edgelist", "json"}))
        ->default_val("graph6");
    construct_cmd->add_option("--certificate,-c", construct_opt.certificate_path,
                              "write the certificate JSON to this file");
    construct_cmd->add_flag("--force-window", construct_opt.force_window,
                            "lift the circulant search window");

    std::string verify_path = "-";
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "verify graph6 lines (file or stdin) for nut status");
    verify_cmd->add_option("input", verify_path, "file of graph6 lines, - for stdin");

    SearchOptions search_opt;
    CLI::App* search_cmd = app.add_subcommand(
        "search-circulant", "exhaustive certified search for circulant nut graphs");
    search_cmd->add_option("--order,-n", search_opt.order, "number of vertices")->required();
    search_cmd->add_option("--degree,-d", search_opt.degree, "vertex degree")->required();
    search_cmd->add_flag("--all", search_opt.all, "list every witness, not just the least");
    search_cmd->add_flag("--force-window", search_opt.force_window,
                         "search even above the default order window");

    ScanOptions scan_opt;
    CLI::App* scan_cmd =
        app.add_subcommand("scan", "feasibility scan over all orders up to a bound");
    scan_cmd->add_option("--degree,-d", scan_opt.degree, "vertex degree")->required();
    scan_cmd->add_option("--max-order,-m", scan_opt.max_order, "largest order to scan")
        ->required();
    scan_cmd->add_flag("--json", scan_opt.json, "emit the report as JSON");
    scan_cmd->add_flag("--force-window", scan_opt.force_window,
                       "lift the circulant search window");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (construct_cmd->parsed()) return run_construct(construct_opt);
        if (verify_cmd->parsed()) return run_verify(verify_path);
        if (search_cmd->parsed()) return run_search(search_opt);
        if (scan_cmd->parsed()) return run_scan(scan_opt);
    } catch (const InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << " (failed condition: " << e.condition()
                  << ")\n";
        return kExitInfeasible;
    } catch (const WindowExceededError& e) {
        std::cerr << e.what() << "\n";
        return kExitWindow;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInternal;
}
