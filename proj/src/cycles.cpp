#include "emnet/cycles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace emnet {

double cycle_capability(const Network& net, const CombatCycle& cycle,
                        const CycleOptions& opts) {
    double cap = 1.0;
    for (int e : cycle.edge_ids) {
        cap *= net.edges[e].capability * opts.penalty_gamma;
    }
    return cap;
}

namespace {

struct SearchState {
    const Network* net;
    const CycleOptions* opts;
    int target;
    int detection_edge;
    std::vector<int> interference_edge;  // per platform, -1 when absent
    std::vector<bool> visited;
    std::vector<int> path;       // sensor .. current
    std::vector<int> path_edges;  // comm hops so far
    int deciders_on_path = 0;
    std::vector<CombatCycle>* out;
};

void emit_if_jammer(SearchState& st) {
    const int current = st.path.back();
    const int ie = st.interference_edge[current];
    if (ie < 0) return;
    const Platform& here = st.net->platforms[current];
    if (st.deciders_on_path == 0) return;
    if (st.opts->require_decider_on_final_hop) {
        // The platform sending the final hop into the jammer must decide;
        // a single-platform kill chain must itself be a decider.
        const int sender_idx = static_cast<int>(st.path.size()) - 2;
        const Platform& sender = sender_idx >= 0
                                     ? st.net->platforms[st.path[sender_idx]]
                                     : here;
        if (!sender.functions.decider) return;
    }
    CombatCycle cycle;
    cycle.nodes.reserve(st.path.size() + 1);
    cycle.nodes.push_back(st.target);
    cycle.nodes.insert(cycle.nodes.end(), st.path.begin(), st.path.end());
    cycle.edge_ids.push_back(st.detection_edge);
    cycle.edge_ids.insert(cycle.edge_ids.end(), st.path_edges.begin(),
                          st.path_edges.end());
    cycle.edge_ids.push_back(ie);
    cycle.capability = cycle_capability(*st.net, cycle, *st.opts);
    st.out->push_back(std::move(cycle));
}

void dfs(SearchState& st) {
    emit_if_jammer(st);
    // Edge budget: detection + comm hops so far + at least one more comm hop
    // + the closing interference edge.
    const int edges_if_extended =
        2 + static_cast<int>(st.path_edges.size()) + 1;
    if (edges_if_extended > st.opts->max_cycle_edges) return;
    const int current = st.path.back();
    for (int e : st.net->out_edges[current]) {
        const Edge& edge = st.net->edges[e];
        if (edge.kind != EdgeKind::Communication) continue;
        if (st.visited[edge.to]) continue;
        st.visited[edge.to] = true;
        st.path.push_back(edge.to);
        st.path_edges.push_back(e);
        const bool decider = st.net->platforms[edge.to].functions.decider;
        st.deciders_on_path += decider ? 1 : 0;
        dfs(st);
        st.deciders_on_path -= decider ? 1 : 0;
        st.path_edges.pop_back();
        st.path.pop_back();
        st.visited[edge.to] = false;
    }
}

}  // namespace

std::vector<CombatCycle> enumerate_cycles(const Network& net,
                                          const std::string& target_id,
                                          Side analyzing_side,
                                          const CycleOptions& opts) {
    const int target = net.require(target_id);
    if (net.platforms[target].side == analyzing_side) {
        throw std::invalid_argument("target \"" + target_id +
                                    "\" is on the analyzing side");
    }

    std::vector<CombatCycle> cycles;
    SearchState st;
    st.net = &net;
    st.opts = &opts;
    st.target = target;
    st.out = &cycles;
    st.visited.assign(net.platforms.size(), false);

    st.interference_edge.assign(net.platforms.size(), -1);
    for (int e : net.in_edges[target]) {
        const Edge& edge = net.edges[e];
        if (edge.kind == EdgeKind::Interference &&
            net.platforms[edge.from].side == analyzing_side) {
            st.interference_edge[edge.from] = e;
        }
    }

    for (int e : net.out_edges[target]) {
        const Edge& edge = net.edges[e];
        if (edge.kind != EdgeKind::Detection) continue;
        const int sensor = edge.to;
        if (net.platforms[sensor].side != analyzing_side) continue;
        st.detection_edge = e;
        st.visited[sensor] = true;
        st.path = {sensor};
        st.path_edges.clear();
        st.deciders_on_path =
            net.platforms[sensor].functions.decider ? 1 : 0;
        dfs(st);
        st.visited[sensor] = false;
    }

    std::sort(cycles.begin(), cycles.end(),
              [&net](const CombatCycle& a, const CombatCycle& b) {
                  const size_t m = std::min(a.nodes.size(), b.nodes.size());
                  for (size_t i = 0; i < m; ++i) {
                      const std::string& ia = net.platforms[a.nodes[i]].id;
                      const std::string& ib = net.platforms[b.nodes[i]].id;
                      if (ia != ib) return ia < ib;
                  }
                  return a.nodes.size() < b.nodes.size();
              });
    return cycles;
}

std::string cycle_to_string(const Network& net, const CombatCycle& cycle) {
    std::string s;
    for (size_t i = 0; i < cycle.nodes.size(); ++i) {
        if (i) s += " -> ";
        s += net.platforms[cycle.nodes[i]].id;
    }
    s += " -> " + net.platforms[cycle.target()].id;
    return s;
}

}  // namespace emnet
