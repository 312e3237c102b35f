// emnet: combat system-of-systems network analysis CLI.
//
// Subcommands: capability, rank, centrality, cycles, report.
// Exit codes: 0 ok, 1 scenario load error, 2 analysis error, 3 I/O error.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "emnet/baselines.hpp"
#include "emnet/cycles.hpp"
#include "emnet/effectiveness.hpp"
#include "emnet/network.hpp"
#include "emnet/report.hpp"
#include "emnet/scenario.hpp"

namespace {

using namespace emnet;

struct RunConfig {
    std::string scenario_path;
    std::string format = "csv";
    std::string out_path;
    std::vector<std::string> overrides;
    std::vector<std::string> protect;
    std::string target;
    double pagerank_damping = 0.5;
    bool dump_config = false;
};

int env_threads() {
    const char* v = std::getenv("EMNET_THREADS");
    if (!v) return 0;
    return std::atoi(v);
}

void apply_override(const std::string& kv, BuildOptions* build,
                    CycleOptions* cycle, RankOptions* rank,
                    double* pagerank_damping) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) {
        throw std::invalid_argument("--set expects key=value, got \"" + kv +
                                    "\"");
    }
    const std::string key = kv.substr(0, eq);
    const std::string value = kv.substr(eq + 1);
    auto as_bool = [&] {
        if (value == "true" || value == "1") return true;
        if (value == "false" || value == "0") return false;
        throw std::invalid_argument("expected boolean for " + key);
    };
    auto as_double = [&] { return std::stod(value); };

    if (key == "build.detection_prune_threshold")
        build->detection_prune_threshold = as_double();
    else if (key == "build.comm_prune_threshold")
        build->comm_prune_threshold = as_double();
    else if (key == "build.apply_adversary_jamming")
        build->apply_adversary_jamming = as_bool();
    else if (key == "build.min_separation")
        build->min_separation = as_double();
    else if (key == "build.static_interference")
        build->static_interference = as_bool();
    else if (key == "cycle.max_cycle_edges")
        cycle->max_cycle_edges = std::stoi(value);
    else if (key == "cycle.penalty_gamma")
        cycle->penalty_gamma = as_double();
    else if (key == "cycle.require_decider_on_final_hop")
        cycle->require_decider_on_final_hop = as_bool();
    else if (key == "rank.analyzing_side")
        rank->analyzing_side = side_from_string(value);
    else if (key == "rank.normalize_weights")
        rank->normalize_weights = as_bool();
    else if (key == "baseline.pagerank_damping")
        *pagerank_damping = as_double();
    else
        throw std::invalid_argument("unknown option key \"" + key + "\"");
}

nlohmann::ordered_json config_json(const BuildOptions& build,
                                   const CycleOptions& cycle,
                                   const RankOptions& rank,
                                   double pagerank_damping) {
    nlohmann::ordered_json j;
    j["build.detection_prune_threshold"] = build.detection_prune_threshold;
    j["build.comm_prune_threshold"] = build.comm_prune_threshold;
    j["build.apply_adversary_jamming"] = build.apply_adversary_jamming;
    j["build.min_separation"] = build.min_separation;
    j["build.static_interference"] = build.static_interference;
    j["cycle.max_cycle_edges"] = cycle.max_cycle_edges;
    j["cycle.penalty_gamma"] = cycle.penalty_gamma;
    j["cycle.require_decider_on_final_hop"] =
        cycle.require_decider_on_final_hop;
    j["rank.analyzing_side"] = to_string(rank.analyzing_side);
    j["rank.normalize_weights"] = rank.normalize_weights;
    j["baseline.pagerank_damping"] = pagerank_damping;
    nlohmann::ordered_json protects = nlohmann::ordered_json::array();
    for (const auto& id : rank.protected_nodes) protects.push_back(id);
    j["rank.protected_nodes"] = protects;
    return j;
}

Table capability_table(const CapabilityReport& report) {
    Table t;
    t.name = "capability";
    t.header = {"target", "capability", "combat_cycles"};
    for (const auto& [id, cap] : report.per_target) {
        t.rows.push_back({Cell::of_text(id), Cell::capability(cap),
                          Cell::of_integer(report.cycle_counts.at(id))});
    }
    t.rows.push_back({Cell::of_text("TOTAL"), Cell::capability(report.total),
                      Cell::of_integer(0)});
    return t;
}

Table rank_table(const std::vector<CriticalityRow>& rows) {
    Table t;
    t.name = "criticality";
    t.header = {"node", "capability_after_deletion", "criticality", "rank"};
    for (const auto& row : rows) {
        t.rows.push_back({Cell::of_text(row.node),
                          Cell::capability(row.capability_after_deletion),
                          Cell::percent(row.crt_percent),
                          Cell::of_integer(row.rank)});
    }
    return t;
}

Table cycles_table(const Network& net, const std::vector<CombatCycle>& cycles) {
    Table t;
    t.name = "cycles";
    t.header = {"sequence", "edges", "capability"};
    for (const auto& c : cycles) {
        t.rows.push_back({Cell::of_text(cycle_to_string(net, c)),
                          Cell::of_integer(c.edge_count()),
                          Cell::raw(c.capability)});
    }
    return t;
}

// Table-3 style side-by-side comparison restricted to deletable nodes.
Table centrality_table(const Network& net, const CycleOptions& cycle_opts,
                       const RankOptions& rank_opts, double damping) {
    const auto crt_rows = rank_nodes(net, cycle_opts, rank_opts,
                                     env_threads());
    const auto graph = comm_graph(net);
    const CentralityTable tables[] = {
        cycle_count_ranking(net, cycle_opts, rank_opts),
        degree_centrality(graph),
        closeness_centrality(graph),
        betweenness_centrality(graph),
        pagerank(graph, damping),
        eigenvector_centrality(graph),
    };

    Table t;
    t.name = "centrality_comparison";
    t.header = {"node", "crt", "crt_rank"};
    for (const auto& method : tables) {
        t.header.push_back(method.method);
        t.header.push_back(method.method + "_rank");
    }
    // Re-rank each baseline over the displayed node set only.
    std::map<std::string, std::map<std::string, int>> local_ranks;
    for (const auto& method : tables) {
        std::map<std::string, double> restricted;
        for (const auto& row : crt_rows) {
            restricted[row.node] = method.scores.at(row.node);
        }
        local_ranks[method.method] =
            dense_ranks(restricted, method.method != "cycle_count");
    }
    for (const auto& row : crt_rows) {
        std::vector<Cell> cells{Cell::of_text(row.node),
                                Cell::percent(row.crt_percent),
                                Cell::of_integer(row.rank)};
        for (const auto& method : tables) {
            cells.push_back(Cell::raw(method.scores.at(row.node)));
            cells.push_back(
                Cell::of_integer(local_ranks[method.method].at(row.node)));
        }
        t.rows.push_back(std::move(cells));
    }
    return t;
}

Table ber_curve_table(const Scenario& sc) {
    const auto model = sc.ber_models.at("default");
    Table t;
    t.name = "ber_curve";
    t.header = {"sinr_db", "ber", "comm_capability"};
    for (int i = 0; i <= 200; ++i) {
        const double db = -10.0 + 40.0 * i / 200.0;
        const double ber = model->evaluate(std::pow(10.0, db / 10.0));
        t.rows.push_back({Cell::raw(db), Cell::raw(ber),
                          Cell::raw(em::comm_capability(ber))});
    }
    return t;
}

Table crt_bars_table(const std::vector<CriticalityRow>& rows) {
    Table t;
    t.name = "crt_bars";
    t.header = {"node", "crt_percent"};
    for (const auto& row : rows) {
        t.rows.push_back({Cell::of_text(row.node), Cell::raw(row.crt_percent)});
    }
    return t;
}

int run(const std::string& command, const RunConfig& cfg) {
    Scenario sc;
    try {
        sc = load_scenario_file(cfg.scenario_path);
    } catch (const ScenarioError& e) {
        std::cerr << "scenario error: " << e.what() << "\n";
        return 1;
    }

    BuildOptions build = sc.build_options;
    CycleOptions cycle = sc.cycle_options;
    RankOptions rank;
    double damping = cfg.pagerank_damping;
    rank.protected_nodes.insert(cfg.protect.begin(), cfg.protect.end());
    try {
        for (const auto& kv : cfg.overrides) {
            apply_override(kv, &build, &cycle, &rank, &damping);
        }
    } catch (const std::exception& e) {
        std::cerr << "option error: " << e.what() << "\n";
        return 2;
    }

    if (cfg.dump_config) {
        std::cout << config_json(build, cycle, rank, damping).dump(2) << "\n";
        return 0;
    }

    try {
        const OutputFormat format = format_from_string(cfg.format);
        const Network net = build_network(sc, build);
        if (command == "capability") {
            emit_table(capability_table(evaluate(net, cycle, rank)), format,
                       cfg.out_path);
        } else if (command == "rank") {
            emit_table(rank_table(rank_nodes(net, cycle, rank, env_threads())),
                       format, cfg.out_path);
        } else if (command == "centrality") {
            emit_table(centrality_table(net, cycle, rank, damping), format,
                       cfg.out_path);
        } else if (command == "cycles") {
            const auto cycles =
                enumerate_cycles(net, cfg.target, rank.analyzing_side, cycle);
            emit_table(cycles_table(net, cycles), format, cfg.out_path);
        } else if (command == "report") {
            namespace fs = std::filesystem;
            const fs::path dir =
                cfg.out_path.empty() ? fs::path("emnet-report")
                                     : fs::path(cfg.out_path);
            std::error_code ec;
            fs::create_directories(dir, ec);
            if (ec) {
                std::cerr << "io error: cannot create " << dir << "\n";
                return 3;
            }
            const char* ext = format == OutputFormat::Csv ? ".csv" : ".json";
            const auto report = evaluate(net, cycle, rank);
            const auto rows = rank_nodes(net, cycle, rank, env_threads());
            emit_table(capability_table(report), format,
                       (dir / ("capability" + std::string(ext))).string());
            emit_table(rank_table(rows), format,
                       (dir / ("rank" + std::string(ext))).string());
            emit_table(centrality_table(net, cycle, rank, damping), format,
                       (dir / ("centrality" + std::string(ext))).string());
            emit_table(ber_curve_table(sc), format,
                       (dir / ("ber_curve" + std::string(ext))).string());
            emit_table(crt_bars_table(rows), format,
                       (dir / ("crt_bars" + std::string(ext))).string());
        }
    } catch (const std::runtime_error& e) {
        // emit_table throws runtime_error for I/O problems only.
        std::cerr << "io error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "analysis error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Electromagnetic combat network analysis"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::vector<CLI::App*> subs;
    for (const char* name :
         {"capability", "rank", "centrality", "cycles", "report"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--scenario", cfg.scenario_path, "Scenario JSON file")
            ->required();
        sub->add_option("--format", cfg.format, "csv or json");
        sub->add_option("--out", cfg.out_path, "Output file (or directory)");
        sub->add_option("--set", cfg.overrides,
                        "Override option, dotted.key=value");
        sub->add_flag("--dump-config", cfg.dump_config,
                      "Print the effective configuration and exit");
        if (std::string(name) == "rank" || std::string(name) == "centrality" ||
            std::string(name) == "report") {
            sub->add_option("--protect", cfg.protect,
                            "Platform id excluded from deletion");
        }
        if (std::string(name) == "cycles") {
            sub->add_option("--target", cfg.target, "Target platform id")
                ->required();
            sub->add_option("--max-cycle-edges", cfg.overrides,
                            "Shorthand for cycle.max_cycle_edges")
                ->transform([](std::string v) {
                    return "cycle.max_cycle_edges=" + v;
                });
        }
        subs.push_back(sub);
    }

    CLI11_PARSE(app, argc, argv);
    for (CLI::App* sub : subs) {
        if (sub->parsed()) {
            return run(sub->get_name(), cfg);
        }
    }
    return 2;
}
