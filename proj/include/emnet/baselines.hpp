#ifndef EMNET_BASELINES_HPP
#define EMNET_BASELINES_HPP

#include <map>
#include <string>
#include <vector>

#include "emnet/effectiveness.hpp"
#include "emnet/network.hpp"

namespace emnet {

// Simple undirected unweighted view of the communication relations.
struct CommGraph {
    std::vector<std::string> ids;            // vertex index -> platform id
    std::vector<std::vector<int>> adjacency;

    int vertex_count() const { return static_cast<int>(ids.size()); }
};

struct CentralityTable {
    std::string method;
    std::map<std::string, double> scores;
    std::map<std::string, int> ranks;  // dense ranking, ties share a rank
};

// One undirected edge per unordered pair linked by a communication edge in
// either direction. Isolated vertices are retained.
CommGraph comm_graph(const Network& net);

CentralityTable degree_centrality(const CommGraph& g);

// 1 / sum of shortest-path distances over the reachable set, scaled by
// (reachable - 1) / (n - 1) on disconnected graphs.
CentralityTable closeness_centrality(const CommGraph& g);

// Unnormalized shortest-path betweenness (Brandes accumulation, undirected
// pair counting).
CentralityTable betweenness_centrality(const CommGraph& g);

// Dominant-eigenvector scores by power iteration (residual 1e-10),
// normalized to unit sum. Throws std::domain_error on an edgeless graph.
CentralityTable eigenvector_centrality(const CommGraph& g);

// Random-surfer fixed point on the bidirected graph; dangling mass spread
// uniformly; iterated until the L1 change drops below 1e-12.
CentralityTable pagerank(const CommGraph& g, double damping);

// Surviving combat-cycle count after deleting each candidate node; fewer
// survivors rank as more critical.
CentralityTable cycle_count_ranking(const Network& net,
                                    const CycleOptions& cycle_opts,
                                    const RankOptions& rank_opts);

// Dense ranks from scores; `descending` means higher score = better rank.
std::map<std::string, int> dense_ranks(
    const std::map<std::string, double>& scores, bool descending);

}  // namespace emnet

#endif
