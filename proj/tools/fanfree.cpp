// fanfree: construct, detect, search, and verify extremal fan-free graphs.
//
// Graphs stream in as graph6, one per line (or one whole-input adjacency
// list behind --adjlist); results stream out as JSON lines in input
// order.  Exit codes: 0 clean, 1 data-level failures (bad input lines,
// violated lemma with hypotheses met), 2 usage errors.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fanfree/constructions.hpp"
#include "fanfree/fan.hpp"
#include "fanfree/graph.hpp"
#include "fanfree/lemmas.hpp"
#include "fanfree/matching.hpp"
#include "fanfree/search.hpp"
#include "fanfree/spectral.hpp"

using json = nlohmann::ordered_json;
using namespace fanfree;

namespace {

struct global_config {
    double tol = 1e-10;
    std::uint64_t seed = 0;
    std::size_t workers = 1;
    std::size_t max_order = default_order_cap;
};

std::vector<std::string> read_lines(const std::string& path) {
    std::vector<std::string> lines;
    auto pull = [&](std::istream& in) {
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            lines.push_back(line);
        }
    };
    if (path == "-") {
        pull(std::cin);
    } else {
        std::ifstream in(path);
        if (!in) throw input_error("cannot open input file: " + path);
        pull(in);
    }
    return lines;
}

std::string read_all(const std::string& path) {
    std::ostringstream out;
    if (path == "-") {
        out << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw input_error("cannot open input file: " + path);
        out << in.rdbuf();
    }
    return out.str();
}

bool blank(const std::string& s) {
    return s.find_first_not_of(" \t") == std::string::npos;
}

// Runs fn over every input graph, `workers` lines in flight, output in
// input order.  fn returns the output line plus a data-failure flag.
// Exceptions become {"error": ...} records.  Returns the exit code.
int run_pipeline(const std::string& path, bool adjlist, const global_config& cfg,
                 const std::function<std::pair<std::string, bool>(const Graph&)>& fn) {
    struct item {
        std::size_t lineno;
        std::string text;
        bool is_adjlist;
    };
    std::vector<item> items;
    if (adjlist) {
        items.push_back({1, read_all(path), true});
    } else {
        std::vector<std::string> lines = read_lines(path);
        for (std::size_t i = 0; i < lines.size(); ++i)
            if (!blank(lines[i])) items.push_back({i + 1, lines[i], false});
    }

    std::vector<std::string> out(items.size());
    std::vector<char> failed(items.size(), 0);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= items.size()) return;
            try {
                Graph g = items[i].is_adjlist
                              ? adjlist_decode(items[i].text, cfg.max_order)
                              : graph6_decode(items[i].text, cfg.max_order);
                auto [text, fail] = fn(g);
                out[i] = std::move(text);
                failed[i] = fail;
            } catch (const std::exception& e) {
                out[i] = json{{"error", e.what()}, {"line", items[i].lineno}}.dump();
                failed[i] = 1;
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < cfg.workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    bool any_failed = false;
    for (std::size_t i = 0; i < items.size(); ++i) {
        std::cout << out[i] << "\n";
        any_failed = any_failed || failed[i];
    }
    return any_failed ? 1 : 0;
}

// "3", "2..8", or comma list of those
std::vector<long long> parse_range(const std::string& text, const std::string& flag) {
    std::vector<long long> values;
    std::istringstream parts(text);
    std::string part;
    while (std::getline(parts, part, ',')) {
        std::size_t dots = part.find("..");
        try {
            if (dots == std::string::npos) {
                values.push_back(std::stoll(part));
            } else {
                long long lo = std::stoll(part.substr(0, dots));
                long long hi = std::stoll(part.substr(dots + 2));
                if (hi < lo) throw input_error(flag + ": empty range " + part);
                for (long long v = lo; v <= hi; ++v) values.push_back(v);
            }
        } catch (const std::invalid_argument&) {
            throw input_error(flag + ": cannot parse \"" + part + "\" (want N or LO..HI)");
        } catch (const std::out_of_range&) {
            throw input_error(flag + ": value out of range in \"" + part + "\"");
        }
    }
    if (values.empty()) throw input_error(flag + ": empty range");
    return values;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

// "0-5,7;8-13" -> classes {0..5,7}, {8..13}
std::vector<std::vector<vertex>> parse_classes(const std::string& text) {
    std::vector<std::vector<vertex>> classes;
    std::istringstream groups(text);
    std::string group;
    while (std::getline(groups, group, ';')) {
        std::vector<vertex> cls;
        std::istringstream parts(group);
        std::string part;
        while (std::getline(parts, part, ',')) {
            if (blank(part)) continue;
            try {
                std::size_t dash = part.find('-');
                if (dash == std::string::npos) {
                    cls.push_back(static_cast<vertex>(std::stoull(part)));
                } else {
                    vertex lo = static_cast<vertex>(std::stoull(part.substr(0, dash)));
                    vertex hi = static_cast<vertex>(std::stoull(part.substr(dash + 1)));
                    if (hi < lo) throw input_error("--classes: empty range " + part);
                    for (vertex v = lo; v <= hi; ++v) cls.push_back(v);
                }
            } catch (const std::invalid_argument&) {
                throw input_error("--classes: cannot parse \"" + part + "\" (want V or LO-HI)");
            } catch (const std::out_of_range&) {
                throw input_error("--classes: value out of range in \"" + part + "\"");
            }
        }
        if (!cls.empty()) classes.push_back(std::move(cls));
    }
    if (classes.empty()) throw input_error("--classes: no classes given");
    return classes;
}

json report_json(const LemmaReport& r) {
    json q = json::object();
    for (const auto& [name, value] : r.quantities) q[name] = value;
    return json{{"id", r.id},
                {"hypotheses_hold", r.hypotheses_hold},
                {"conclusion_holds", r.conclusion_holds},
                {"quantities", q},
                {"notes", r.notes}};
}

std::string report_table_row(const LemmaReport& r) {
    std::ostringstream row;
    row << r.id;
    for (std::size_t pad = r.id.size(); pad < 24; ++pad) row << ' ';
    row << (r.hypotheses_hold ? "hyp=yes " : "hyp=no  ")
        << (r.conclusion_holds ? "concl=yes " : "concl=NO  ");
    row.precision(8);
    for (const auto& [name, value] : r.quantities) row << ' ' << name << '=' << value;
    if (!r.notes.empty()) row << "  # " << r.notes;
    return row.str();
}

const std::set<std::string> trace_ids = {
    "balance",      "eq1",          "evector",       "inside-edges",
    "l-bound",      "l-empty",      "maxcut",        "refine-degree",
    "refine-edges", "refine-sides", "w-bound"};
const std::set<std::string> named_ids = {"triangle-edge-bound", "matching-edge-bound",
                                         "fanfree-triangle-budget", "perturbation"};

std::string emit_graph(const Graph& g, const std::string& format) {
    if (format == "dot") return dot_encode(g);
    if (format == "adjlist") return adjlist_encode(g);
    return graph6_encode(g) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    CLI::App app{"extremal fan-free graphs: constructions, detection, search, verification"};
    app.require_subcommand(1);

    global_config cfg;
    app.add_option("--tol", cfg.tol, "residual tolerance for spectral computations")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "RNG seed (env FANFREE_SEED overrides)")
        ->capture_default_str();
    app.add_option("--workers", cfg.workers, "parallel lines in flight for streaming commands")
        ->check(CLI::Range(std::size_t{1}, std::size_t{64}))
        ->capture_default_str();
    app.add_option("--max-order", cfg.max_order, "largest accepted input graph order")
        ->check(CLI::Range(std::size_t{1}, hard_order_cap))
        ->capture_default_str();

    // construct
    auto* construct = app.add_subcommand("construct", "emit a closed-form extremal graph");
    std::string kind, construct_format = "graph6";
    long long opt_n = -1, opt_k = -1, opt_beta = -1, opt_delta = -1, opt_budget = 25;
    construct->add_option("kind", kind, "turan | g1 | g2 | chvatal-hanson")
        ->required()
        ->check(CLI::IsMember({"turan", "g1", "g2", "chvatal-hanson"}));
    construct->add_option("--n", opt_n, "number of vertices");
    construct->add_option("--k", opt_k, "fan parameter");
    construct->add_option("--beta", opt_beta, "matching number bound");
    construct->add_option("--delta", opt_delta, "max degree bound");
    construct->add_option("--budget", opt_budget, "beta*delta cap for chvatal-hanson")
        ->capture_default_str();
    construct->add_option("--format", construct_format, "graph6 | dot | adjlist")
        ->check(CLI::IsMember({"graph6", "dot", "adjlist"}))
        ->capture_default_str();

    // table
    auto* table = app.add_subcommand("table", "emit formula values as CSV");
    std::string what, range_n, range_k, range_beta, range_delta, table_format = "csv";
    table->add_option("what", what, "ex | f")->required()->check(CLI::IsMember({"ex", "f"}));
    table->add_option("--n", range_n, "orders, e.g. 100 or 50..60");
    table->add_option("--k", range_k, "fan parameters, e.g. 1..4");
    table->add_option("--beta", range_beta, "matching bounds");
    table->add_option("--delta", range_delta, "degree bounds");
    table->add_option("--format", table_format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    // streaming subcommands share input flags
    std::string input_path = "-";
    bool adjlist_mode = false;
    auto add_stream_flags = [&](CLI::App* sub) {
        sub->add_option("input", input_path, "graph6 file, one graph per line (default stdin)");
        sub->add_flag("--adjlist", adjlist_mode,
                      "treat the whole input as a single adjacency list (\"n\" then \"u v\" lines)");
    };

    auto* check_fan = app.add_subcommand("check-fan", "does each graph contain k triangles sharing a vertex?");
    long long fan_k = 0;
    check_fan->add_option("--k", fan_k, "fan parameter")->required()->check(CLI::PositiveNumber);
    add_stream_flags(check_fan);

    auto* spectral = app.add_subcommand("spectral", "dominant adjacency eigenvalue per graph");
    add_stream_flags(spectral);

    auto* quotient = app.add_subcommand("quotient", "equitable-partition quotient matrix and its largest root");
    std::string classes_text;
    quotient->add_option("--classes", classes_text, "partition, e.g. \"0-5;6,7;8-13\"")->required();
    add_stream_flags(quotient);

    auto* search = app.add_subcommand("search", "extremal fan-free graphs by exhaustive or local search");
    long long search_n = 0, search_k = 0, search_restarts = 20;
    std::string objective;
    bool exhaustive = false;
    search->add_option("--n", search_n, "number of vertices")->required()->check(CLI::PositiveNumber);
    search->add_option("--k", search_k, "fan parameter")->required()->check(CLI::PositiveNumber);
    search->add_option("--objective", objective, "edges | lambda1")
        ->required()
        ->check(CLI::IsMember({"edges", "lambda1"}));
    search->add_flag("--exhaustive", exhaustive, "scan every isomorphism class (n <= 9)");
    search->add_option("--restarts", search_restarts, "hill-climb restarts")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    auto* maxcut = app.add_subcommand("maxcut", "maximum cut per graph (exact to 24 vertices)");
    add_stream_flags(maxcut);

    auto* verify = app.add_subcommand("verify", "evaluate the quantitative lemmas on each graph");
    long long verify_k = 0;
    std::string lemma_id, verify_format = "json";
    double verify_delta = 0.0, verify_epsilon = 0.0;
    verify->add_option("--k", verify_k, "fan parameter")->required()->check(CLI::PositiveNumber);
    verify->add_option("--lemma", lemma_id, "restrict to one lemma id");
    verify->add_option("--delta", verify_delta, "inside-degree threshold (default 1/(8k))");
    verify->add_option("--epsilon", verify_epsilon, "cut slack (default delta^2/6)");
    verify->add_option("--format", verify_format, "json | table")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();
    add_stream_flags(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (const char* env = std::getenv("FANFREE_SEED")) {
        char* end = nullptr;
        std::uint64_t v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0') {
            std::cerr << "FANFREE_SEED must be an unsigned integer, got \"" << env << "\"\n";
            return 2;
        }
        cfg.seed = v;
    }

    try {
        if (app.got_subcommand(construct)) {
            Graph g(0);
            if (kind == "turan") {
                if (opt_n < 0) throw input_error("construct turan: --n is required");
                g = turan_bipartite(static_cast<std::size_t>(opt_n));
            } else if (kind == "g1" || kind == "g2") {
                if (opt_n < 0 || opt_k < 0)
                    throw input_error("construct " + kind + ": --n and --k are required");
                g = kind == "g1" ? extremal_g1(static_cast<std::size_t>(opt_n),
                                               static_cast<std::size_t>(opt_k))
                                 : extremal_g2(static_cast<std::size_t>(opt_n),
                                               static_cast<std::size_t>(opt_k));
            } else {
                if (opt_beta < 0 || opt_delta < 0)
                    throw input_error("construct chvatal-hanson: --beta and --delta are required");
                g = chvatal_hanson_extremal_graph(opt_beta, opt_delta, opt_budget);
            }
            std::cout << emit_graph(g, construct_format);
            return 0;
        }

        if (app.got_subcommand(table)) {
            if (what == "ex") {
                if (range_n.empty() || range_k.empty())
                    throw input_error("table ex: --n and --k ranges are required");
                std::vector<long long> ns = parse_range(range_n, "--n");
                std::vector<long long> ks = parse_range(range_k, "--k");
                if (table_format == "csv") std::cout << "n,k,value,in_proven_range\n";
                for (long long n : ns)
                    for (long long k : ks) {
                        ExFanValue v = ex_fan(n, k);
                        if (table_format == "csv")
                            std::cout << n << ',' << k << ',' << v.value << ','
                                      << (v.in_proven_range ? "true" : "false") << "\n";
                        else
                            std::cout << json{{"n", n},
                                              {"k", k},
                                              {"value", v.value},
                                              {"in_proven_range", v.in_proven_range}}
                                             .dump()
                                      << "\n";
                    }
            } else {
                if (range_beta.empty() || range_delta.empty())
                    throw input_error("table f: --beta and --delta ranges are required");
                std::vector<long long> betas = parse_range(range_beta, "--beta");
                std::vector<long long> deltas = parse_range(range_delta, "--delta");
                if (table_format == "csv") std::cout << "beta,delta,value\n";
                for (long long b : betas)
                    for (long long d : deltas) {
                        long long v = f_chvatal_hanson(b, d);
                        if (table_format == "csv")
                            std::cout << b << ',' << d << ',' << v << "\n";
                        else
                            std::cout << json{{"beta", b}, {"delta", d}, {"value", v}}.dump()
                                      << "\n";
                    }
            }
            (void)csv_field;  // values above never need quoting; helper kept for growth
            return 0;
        }

        if (app.got_subcommand(search)) {
            SearchReport report;
            if (exhaustive) {
                report = exhaustive_extremal(static_cast<std::size_t>(search_n),
                                             static_cast<std::size_t>(search_k), objective);
            } else if (cfg.workers <= 1 || static_cast<std::size_t>(search_restarts) <= 1) {
                report = hill_climb_extremal(static_cast<std::size_t>(search_n),
                                             static_cast<std::size_t>(search_k), objective,
                                             static_cast<std::size_t>(search_restarts), cfg.seed);
            } else {
                // shard restarts across workers; merge is order-independent
                std::size_t shards = std::min(cfg.workers, static_cast<std::size_t>(search_restarts));
                std::size_t per = (static_cast<std::size_t>(search_restarts) + shards - 1) / shards;
                std::vector<SearchReport> parts(shards);
                std::vector<std::thread> pool;
                for (std::size_t s = 0; s < shards; ++s)
                    pool.emplace_back([&, s] {
                        parts[s] = hill_climb_extremal(static_cast<std::size_t>(search_n),
                                                       static_cast<std::size_t>(search_k),
                                                       objective, per, cfg.seed + s);
                    });
                for (auto& t : pool) t.join();
                report = parts[0];
                for (std::size_t s = 1; s < shards; ++s) report.merge(parts[s]);
            }
            std::cout << json{{"n", report.n},
                              {"k", report.k},
                              {"objective", report.objective},
                              {"best_value", report.best_value},
                              {"witnesses", report.witnesses},
                              {"graphs_examined", report.graphs_examined},
                              {"exhaustive", report.exhaustive}}
                             .dump()
                      << "\n";
            return 0;
        }

        if (app.got_subcommand(check_fan)) {
            std::size_t k = static_cast<std::size_t>(fan_k);
            return run_pipeline(input_path, adjlist_mode, cfg, [k](const Graph& g) {
                FanWitness w;
                bool hit = contains_fan(g, k, &w);
                json out{{"contains", hit}};
                if (hit) {
                    out["center"] = w.center;
                    json pairs = json::array();
                    for (const auto& [a, b] : w.pairs) pairs.push_back(json::array({a, b}));
                    out["pairs"] = pairs;
                }
                return std::make_pair(out.dump(), false);
            });
        }

        if (app.got_subcommand(spectral)) {
            double tol = cfg.tol;
            return run_pipeline(input_path, adjlist_mode, cfg, [tol](const Graph& g) {
                SpectralResult r = spectral_radius(g, tol);
                json out{{"lambda1", r.lambda1},
                         {"residual", r.residual},
                         {"iterations", r.iterations},
                         {"positive", r.positive}};
                return std::make_pair(out.dump(), false);
            });
        }

        if (app.got_subcommand(quotient)) {
            std::vector<std::vector<vertex>> classes = parse_classes(classes_text);
            return run_pipeline(input_path, adjlist_mode, cfg, [&classes](const Graph& g) {
                QuotientMatrix q = quotient_matrix(g, classes);
                json out{{"class_sizes", q.class_sizes},
                         {"matrix", q.b},
                         {"charpoly", charpoly(q.b)},
                         {"root", charpoly_root(q.b)}};
                return std::make_pair(out.dump(), false);
            });
        }

        if (app.got_subcommand(maxcut)) {
            return run_pipeline(input_path, adjlist_mode, cfg, [](const Graph& g) {
                CutResult c = max_cut(g);
                std::vector<std::size_t> s, t;
                c.side_s.for_each([&](std::size_t v) { s.push_back(v); });
                c.side_t.for_each([&](std::size_t v) { t.push_back(v); });
                json out{{"cut", c.value}, {"side_s", s}, {"side_t", t}, {"exact", c.exact}};
                return std::make_pair(out.dump(), false);
            });
        }

        if (app.got_subcommand(verify)) {
            if (!lemma_id.empty() && !trace_ids.count(lemma_id) && !named_ids.count(lemma_id)) {
                std::string known;
                for (const auto& id : trace_ids) known += id + " ";
                for (const auto& id : named_ids) known += id + " ";
                throw input_error("--lemma: unknown id \"" + lemma_id + "\" (known: " + known + ")");
            }
            LemmaOptions opt{verify_delta, verify_epsilon};
            std::size_t k = static_cast<std::size_t>(verify_k);
            bool as_table = verify_format == "table";
            return run_pipeline(input_path, adjlist_mode, cfg, [&, k, as_table](const Graph& g) {
                std::vector<LemmaReport> reports;
                if (lemma_id.empty() || trace_ids.count(lemma_id)) {
                    for (auto& r : check_proof_trace(g, k, opt))
                        if (lemma_id.empty() || r.id == lemma_id) reports.push_back(std::move(r));
                }
                auto want = [&](const char* id) { return lemma_id.empty() || lemma_id == id; };
                if (want("fanfree-triangle-budget"))
                    reports.push_back(check_fanfree_triangle_budget(g, k));
                if (want("matching-edge-bound")) reports.push_back(check_matching_edge_bound(g, k));
                if (want("perturbation")) reports.push_back(check_perturbation_step(g, k));
                if (want("triangle-edge-bound")) reports.push_back(check_triangle_edge_bound(g));
                std::sort(reports.begin(), reports.end(),
                          [](const LemmaReport& a, const LemmaReport& b) { return a.id < b.id; });

                // a "failure" is a violated conclusion whose hypotheses held
                bool fail = false;
                for (const auto& r : reports)
                    fail = fail || (r.hypotheses_hold && !r.conclusion_holds);
                if (as_table) {
                    std::string block;
                    for (const auto& r : reports) block += report_table_row(r) + "\n";
                    block += fail ? "verdict: FAIL" : "verdict: ok";
                    return std::make_pair(block, fail);
                }
                json arr = json::array();
                bool all = true;
                for (const auto& r : reports) {
                    arr.push_back(report_json(r));
                    all = all && r.conclusion_holds;
                }
                json out{{"reports", arr}, {"all_conclusions_hold", all}, {"failed", fail}};
                return std::make_pair(out.dump(), fail);
            });
        }
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const capability_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
