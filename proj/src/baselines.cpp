#include "emnet/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>
#include <stdexcept>

namespace emnet {

namespace {
constexpr double kRankEpsilon = 1e-9;
}

std::map<std::string, int> dense_ranks(
    const std::map<std::string, double>& scores, bool descending) {
    std::vector<std::pair<std::string, double>> order(scores.begin(),
                                                      scores.end());
    std::sort(order.begin(), order.end(),
              [descending](const auto& a, const auto& b) {
                  if (a.second != b.second) {
                      return descending ? a.second > b.second
                                        : a.second < b.second;
                  }
                  return a.first < b.first;
              });
    std::map<std::string, int> ranks;
    int rank = 0;
    double prev = std::nan("");
    for (const auto& [id, score] : order) {
        if (std::isnan(prev) || std::abs(score - prev) > kRankEpsilon) {
            ++rank;
            prev = score;
        }
        ranks[id] = rank;
    }
    return ranks;
}

CommGraph comm_graph(const Network& net) {
    CommGraph g;
    g.ids.reserve(net.platforms.size());
    for (const Platform& p : net.platforms) g.ids.push_back(p.id);
    g.adjacency.assign(g.ids.size(), {});
    std::set<std::pair<int, int>> seen;
    for (const Edge& e : net.edges) {
        if (e.kind != EdgeKind::Communication) continue;
        const auto key = std::minmax(e.from, e.to);
        if (!seen.insert(key).second) continue;
        g.adjacency[key.first].push_back(key.second);
        g.adjacency[key.second].push_back(key.first);
    }
    for (auto& nbrs : g.adjacency) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

CentralityTable degree_centrality(const CommGraph& g) {
    CentralityTable t;
    t.method = "degree";
    for (int v = 0; v < g.vertex_count(); ++v) {
        t.scores[g.ids[v]] = static_cast<double>(g.adjacency[v].size());
    }
    t.ranks = dense_ranks(t.scores, true);
    return t;
}

namespace {

std::vector<int> bfs_distances(const CommGraph& g, int source) {
    std::vector<int> dist(g.vertex_count(), -1);
    dist[source] = 0;
    std::deque<int> queue{source};
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (int v : g.adjacency[u]) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

}  // namespace

CentralityTable closeness_centrality(const CommGraph& g) {
    if (g.vertex_count() == 0) {
        throw std::invalid_argument("closeness on empty graph");
    }
    CentralityTable t;
    t.method = "closeness";
    const int n = g.vertex_count();
    for (int u = 0; u < n; ++u) {
        const auto dist = bfs_distances(g, u);
        long long sum = 0;
        int reachable = 0;
        for (int v = 0; v < n; ++v) {
            if (v != u && dist[v] > 0) {
                sum += dist[v];
                ++reachable;
            }
        }
        double score = 0.0;
        if (reachable > 0 && n > 1) {
            score = (static_cast<double>(reachable) / (n - 1)) /
                    static_cast<double>(sum);
        }
        t.scores[g.ids[u]] = score;
    }
    t.ranks = dense_ranks(t.scores, true);
    return t;
}

CentralityTable betweenness_centrality(const CommGraph& g) {
    // Brandes, unweighted; undirected pairs counted once.
    const int n = g.vertex_count();
    std::vector<double> bc(n, 0.0);
    for (int s = 0; s < n; ++s) {
        std::vector<std::vector<int>> preds(n);
        std::vector<double> sigma(n, 0.0);
        std::vector<int> dist(n, -1);
        std::vector<int> order;
        sigma[s] = 1.0;
        dist[s] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            order.push_back(u);
            for (int v : g.adjacency[u]) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
                if (dist[v] == dist[u] + 1) {
                    sigma[v] += sigma[u];
                    preds[v].push_back(u);
                }
            }
        }
        std::vector<double> delta(n, 0.0);
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const int w = *it;
            for (int v : preds[w]) {
                delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
            }
            if (w != s) bc[w] += delta[w];
        }
    }
    CentralityTable t;
    t.method = "betweenness";
    for (int v = 0; v < n; ++v) {
        t.scores[g.ids[v]] = bc[v] / 2.0;
    }
    t.ranks = dense_ranks(t.scores, true);
    return t;
}

CentralityTable eigenvector_centrality(const CommGraph& g) {
    const int n = g.vertex_count();
    bool has_edge = false;
    for (const auto& nbrs : g.adjacency) {
        if (!nbrs.empty()) {
            has_edge = true;
            break;
        }
    }
    if (!has_edge) {
        throw std::domain_error(
            "eigenvector centrality undefined on an edgeless graph");
    }
    std::vector<double> x(n, 1.0 / n), next(n);
    for (int iter = 0; iter < 100000; ++iter) {
        double norm = 0.0;
        for (int v = 0; v < n; ++v) {
            // Shifted iteration (A + I) avoids period-2 oscillation on
            // bipartite graphs without changing the dominant eigenvector.
            double acc = x[v];
            for (int u : g.adjacency[v]) acc += x[u];
            next[v] = acc;
            norm += acc * acc;
        }
        norm = std::sqrt(norm);
        if (norm == 0.0) {
            throw std::domain_error("eigenvector iteration degenerated");
        }
        double residual = 0.0;
        for (int v = 0; v < n; ++v) {
            next[v] /= norm;
            residual += std::abs(next[v] - x[v]);
        }
        x.swap(next);
        if (residual < 1e-10) break;
    }
    double sum = 0.0;
    for (double v : x) sum += v;
    CentralityTable t;
    t.method = "eigenvector";
    for (int v = 0; v < n; ++v) {
        t.scores[g.ids[v]] = x[v] / sum;
    }
    t.ranks = dense_ranks(t.scores, true);
    return t;
}

CentralityTable pagerank(const CommGraph& g, double damping) {
    if (!(damping > 0.0 && damping < 1.0)) {
        throw std::invalid_argument("pagerank damping must lie in (0, 1)");
    }
    const int n = g.vertex_count();
    std::vector<double> x(n, 1.0 / n), next(n);
    for (int iter = 0; iter < 1000000; ++iter) {
        double dangling = 0.0;
        for (int v = 0; v < n; ++v) {
            if (g.adjacency[v].empty()) dangling += x[v];
        }
        const double base = (1.0 - damping) / n + damping * dangling / n;
        std::fill(next.begin(), next.end(), base);
        for (int u = 0; u < n; ++u) {
            if (g.adjacency[u].empty()) continue;
            const double share = damping * x[u] / g.adjacency[u].size();
            for (int v : g.adjacency[u]) next[v] += share;
        }
        double change = 0.0;
        for (int v = 0; v < n; ++v) change += std::abs(next[v] - x[v]);
        x.swap(next);
        if (change < 1e-12) break;
    }
    CentralityTable t;
    t.method = "pagerank";
    for (int v = 0; v < n; ++v) {
        t.scores[g.ids[v]] = x[v];
    }
    t.ranks = dense_ranks(t.scores, true);
    return t;
}

CentralityTable cycle_count_ranking(const Network& net,
                                    const CycleOptions& cycle_opts,
                                    const RankOptions& rank_opts) {
    std::vector<std::string> targets;
    for (const Platform& p : net.platforms) {
        if (p.side != rank_opts.analyzing_side && p.target_weight) {
            targets.push_back(p.id);
        }
    }
    if (targets.empty()) {
        throw std::invalid_argument(
            "no weighted targets on the opposing side");
    }
    auto total_cycles = [&](const Network& n) {
        long long count = 0;
        for (const std::string& t : targets) {
            if (n.find(t) < 0) continue;
            count += static_cast<long long>(
                enumerate_cycles(n, t, rank_opts.analyzing_side, cycle_opts)
                    .size());
        }
        return count;
    };
    CentralityTable t;
    t.method = "cycle_count";
    for (const Platform& p : net.platforms) {
        if (p.side != rank_opts.analyzing_side) continue;
        if (rank_opts.protected_nodes.count(p.id)) continue;
        t.scores[p.id] =
            static_cast<double>(total_cycles(delete_node(net, p.id)));
    }
    t.ranks = dense_ranks(t.scores, false);  // fewer survivors = rank 1
    return t;
}

}  // namespace emnet
