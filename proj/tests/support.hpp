// Shared test helpers: independent oracles and hand-built network fixtures.
#ifndef EMNET_TESTS_SUPPORT_HPP
#define EMNET_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "emnet/cycles.hpp"
#include "emnet/network.hpp"
#include "emnet/scenario.hpp"

namespace emnet::testing {

// Upper tail of the standard normal by composite Simpson quadrature.
// Independent of the erfc-based implementation path.
inline double normal_upper_tail_quadrature(double x) {
    const double hi = x + 40.0;
    const int intervals = 400000;  // even
    const double h = (hi - x) / intervals;
    auto pdf = [](double t) {
        return std::exp(-0.5 * t * t) / std::sqrt(2.0 * 3.14159265358979323846);
    };
    double acc = pdf(x) + pdf(hi);
    for (int i = 1; i < intervals; ++i) {
        acc += pdf(x + i * h) * (i % 2 ? 4.0 : 2.0);
    }
    return acc * h / 3.0;
}

inline double normal_cdf_quadrature(double x) {
    return 1.0 - normal_upper_tail_quadrature(x);
}

// ---- hand-built network fixtures -------------------------------------

inline Platform make_platform(const std::string& id, Side side,
                              const std::string& functions,
                              double target_weight = -1.0) {
    Platform p;
    p.id = id;
    p.label = id;
    p.side = side;
    p.functions.sensor = functions.find('S') != std::string::npos;
    p.functions.decider = functions.find('D') != std::string::npos;
    p.functions.influencer = functions.find('I') != std::string::npos;
    p.functions.comm = true;
    if (target_weight >= 0.0) p.target_weight = target_weight;
    return p;
}

inline void add_edge(Network& net, const std::string& from,
                     const std::string& to, EdgeKind kind, double pre,
                     double post) {
    Edge e;
    e.from = net.require(from);
    e.to = net.require(to);
    e.kind = kind;
    e.pre_jamming = pre;
    e.post_jamming = post;
    e.capability = post;
    net.edges.push_back(e);
}

inline Network make_network(std::vector<Platform> platforms) {
    Network net;
    net.platforms = std::move(platforms);
    net.rebuild_indices();
    return net;
}

// Random network respecting the structural invariants: A-side platforms
// with random function sets, B-side targets, detection edges target->sensor,
// comm edges inside side A, interference edges jammer->target.
inline Network random_network(std::mt19937& rng, int a_count, int b_count) {
    std::uniform_real_distribution<double> cap(0.05, 1.0);
    std::uniform_real_distribution<double> coin(0.0, 1.0);

    std::vector<Platform> platforms;
    for (int i = 0; i < a_count; ++i) {
        std::string funcs = "C";
        if (coin(rng) < 0.6) funcs += 'S';
        if (coin(rng) < 0.5) funcs += 'D';
        if (coin(rng) < 0.5) funcs += 'I';
        platforms.push_back(
            make_platform("a" + std::to_string(i), Side::A, funcs));
    }
    for (int i = 0; i < b_count; ++i) {
        platforms.push_back(
            make_platform("t" + std::to_string(i), Side::B, "C", 1.0));
    }
    Network net = make_network(std::move(platforms));

    for (int t = a_count; t < a_count + b_count; ++t) {
        for (int s = 0; s < a_count; ++s) {
            const Platform& sensor = net.platforms[s];
            if (sensor.functions.sensor && coin(rng) < 0.7) {
                const double post = cap(rng);
                Edge e{t, s, EdgeKind::Detection, post,
                       std::min(1.0, post + 0.1), post};
                net.edges.push_back(e);
            }
            if (sensor.functions.influencer && coin(rng) < 0.7) {
                const double c = cap(rng);
                net.edges.push_back({s, t, EdgeKind::Interference, c, c, c});
            }
        }
    }
    for (int a = 0; a < a_count; ++a) {
        for (int b = 0; b < a_count; ++b) {
            if (a != b && coin(rng) < 0.5) {
                const double post = cap(rng);
                net.edges.push_back({a, b, EdgeKind::Communication, post,
                                     std::min(1.0, post + 0.05), post});
            }
        }
    }
    net.rebuild_indices();
    return net;
}

// ---- brute-force cycle oracle ----------------------------------------
//
// Enumerates every simple closed walk through `target` over the whole
// multigraph by plain DFS, then keeps walks matching the OODA pattern:
// detection first, communication in the middle, interference last, decider
// constraints, bounded length. Entirely independent of the pattern-directed
// search in the library.
inline std::set<std::vector<std::string>> oracle_cycles(
    const Network& net, const std::string& target_id, Side analyzing_side,
    const CycleOptions& opts) {
    const int target = net.require(target_id);
    std::set<std::vector<std::string>> result;

    std::vector<int> node_path{target};
    std::vector<int> edge_path;
    std::vector<bool> visited(net.platforms.size(), false);
    visited[target] = true;

    auto pattern_ok = [&](const std::vector<int>& nodes,
                          const std::vector<int>& edges) {
        const int len = static_cast<int>(edges.size());
        if (len < 2 || len > opts.max_cycle_edges) return false;
        if (net.edges[edges.front()].kind != EdgeKind::Detection) return false;
        if (net.edges[edges.back()].kind != EdgeKind::Interference)
            return false;
        for (int i = 1; i + 1 < len; ++i) {
            if (net.edges[edges[i]].kind != EdgeKind::Communication)
                return false;
        }
        // `nodes` still carries the trailing return to the target; the core
        // chain is nodes[0 .. size-2] = [t, s, ..., i].
        const size_t core = nodes.size() - 1;
        bool any_decider = false;
        for (size_t i = 1; i < core; ++i) {
            const Platform& p = net.platforms[nodes[i]];
            if (p.side != analyzing_side) return false;
            if (p.functions.decider) any_decider = true;
        }
        if (!any_decider) return false;
        if (opts.require_decider_on_final_hop) {
            // Sender of the hop into the jammer; the jammer itself for the
            // two-edge chain.
            const int sender = core >= 3 ? nodes[core - 2] : nodes[core - 1];
            if (!net.platforms[sender].functions.decider) return false;
        }
        return true;
    };

    std::function<void()> dfs = [&]() {
        const int current = node_path.back();
        for (size_t e = 0; e < net.edges.size(); ++e) {
            const Edge& edge = net.edges[e];
            if (edge.from != current) continue;
            if (edge.to == target) {
                node_path.push_back(target);
                edge_path.push_back(static_cast<int>(e));
                if (pattern_ok(node_path, edge_path)) {
                    std::vector<std::string> ids;
                    for (size_t i = 0; i + 1 < node_path.size(); ++i) {
                        ids.push_back(net.platforms[node_path[i]].id);
                    }
                    result.insert(std::move(ids));
                }
                edge_path.pop_back();
                node_path.pop_back();
                continue;
            }
            if (visited[edge.to]) continue;
            if (static_cast<int>(edge_path.size()) + 2 >
                opts.max_cycle_edges) {
                continue;
            }
            visited[edge.to] = true;
            node_path.push_back(edge.to);
            edge_path.push_back(static_cast<int>(e));
            dfs();
            edge_path.pop_back();
            node_path.pop_back();
            visited[edge.to] = false;
        }
    };
    dfs();
    return result;
}

inline std::set<std::vector<std::string>> cycle_id_sequences(
    const Network& net, const std::vector<CombatCycle>& cycles) {
    std::set<std::vector<std::string>> out;
    for (const auto& c : cycles) {
        std::vector<std::string> ids;
        for (int n : c.nodes) ids.push_back(net.platforms[n].id);
        out.insert(std::move(ids));
    }
    return out;
}

}  // namespace emnet::testing

#endif
