#ifndef EMNET_NETWORK_HPP
#define EMNET_NETWORK_HPP

#include <string>
#include <vector>

#include "emnet/scenario.hpp"

namespace emnet {

enum class EdgeKind { Detection, Communication, Interference };

std::string to_string(EdgeKind k);

// One relation between two platforms. Detection edges are stored
// target -> observing sensor so that combat cycles traverse them directly.
// pre_jamming / post_jamming hold the capability before and after adversary
// jamming; `capability` is the effective value (post when jamming applies).
struct Edge {
    int from = -1;
    int to = -1;
    EdgeKind kind = EdgeKind::Communication;
    double capability = 0.0;
    double pre_jamming = 0.0;
    double post_jamming = 0.0;
};

// Directed weighted multigraph over the scenario's platforms.
// Immutable after construction; delete_node returns a fresh value.
struct Network {
    std::vector<Platform> platforms;
    std::vector<Edge> edges;
    BuildOptions options;

    std::vector<std::vector<int>> out_edges;  // platform index -> edge ids
    std::vector<std::vector<int>> in_edges;

    void rebuild_indices();
    int find(const std::string& id) const;           // -1 when absent
    int require(const std::string& id) const;        // throws on absence
    const Edge* find_edge(int from, int to, EdgeKind kind) const;
};

Network build_network(const Scenario& scenario);
Network build_network(const Scenario& scenario, const BuildOptions& options);

// Weighted-average degradation of victim j's detection/communication edges
// caused by jamming (the value written onto interference edges).
// Returns 0 with no incident edges.
double interference_capability(const Network& net, int jammer, int victim);

// Rewrites every interference edge's capability from the current
// pre/post values of its victim's incident edges.
void revalue_interference_edges(Network& net);

// Remove a platform and all incident edges; unless options.static_interference
// is set, interference capabilities are recomputed over the surviving edges.
Network delete_node(const Network& net, const std::string& id);

}  // namespace emnet

#endif
