#include "emnet/network.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "emnet/em_physics.hpp"

namespace emnet {

std::string to_string(EdgeKind k) {
    switch (k) {
        case EdgeKind::Detection: return "detection";
        case EdgeKind::Communication: return "communication";
        case EdgeKind::Interference: return "interference";
    }
    return "?";
}

void Network::rebuild_indices() {
    out_edges.assign(platforms.size(), {});
    in_edges.assign(platforms.size(), {});
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        out_edges[edges[e].from].push_back(e);
        in_edges[edges[e].to].push_back(e);
    }
}

int Network::find(const std::string& id) const {
    for (int i = 0; i < static_cast<int>(platforms.size()); ++i) {
        if (platforms[i].id == id) return i;
    }
    return -1;
}

int Network::require(const std::string& id) const {
    const int i = find(id);
    if (i < 0) {
        throw std::out_of_range("unknown platform id \"" + id + "\"");
    }
    return i;
}

const Edge* Network::find_edge(int from, int to, EdgeKind kind) const {
    for (int e : out_edges[from]) {
        if (edges[e].to == to && edges[e].kind == kind) return &edges[e];
    }
    return nullptr;
}

namespace {

double separation(const Platform& a, const Platform& b,
                  const BuildOptions& opts) {
    return std::max(distance(a, b), opts.min_separation);
}

// Total jamming power arriving at `victim_gain` on platform `at` from every
// enemy jammer of side `enemy`.
double total_jamming_power(const std::vector<Platform>& platforms,
                           const Platform& at, double victim_gain, Side enemy,
                           const BuildOptions& opts) {
    if (!opts.apply_adversary_jamming) return 0.0;
    double sum = 0.0;
    for (const Platform& j : platforms) {
        if (j.side != enemy || !j.functions.influencer || !j.jammer) continue;
        if (j.id == at.id) continue;
        sum += em::jammer_received_power(*j.jammer, victim_gain,
                                         separation(j, at, opts));
    }
    return sum;
}

}  // namespace

Network build_network(const Scenario& scenario) {
    return build_network(scenario, scenario.build_options);
}

Network build_network(const Scenario& scenario, const BuildOptions& options) {
    Network net;
    net.platforms = scenario.platforms;
    net.options = options;
    const auto& ps = net.platforms;
    const int n = static_cast<int>(ps.size());

    // Communication edges between distinct same-side platforms.
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (a == b || ps[a].side != ps[b].side) continue;
            if (!ps[a].functions.comm || !ps[b].functions.comm) continue;
            const double d = separation(ps[a], ps[b], options);
            const double pr = em::friis_received_power(
                ps[a].comm.transmit_power, ps[a].comm.tx_gain,
                ps[b].comm.rx_gain, ps[a].comm.wavelength, d,
                ps[a].comm.system_losses);
            const double jam = total_jamming_power(
                ps, ps[b], ps[b].comm.rx_gain, opposite(ps[b].side), options);
            const auto& model = *ps[b].comm.ber_model;
            const double pre = em::comm_capability(
                model.evaluate(em::sinr(pr, ps[b].comm.noise_power, 0.0)));
            const double post = em::comm_capability(
                model.evaluate(em::sinr(pr, ps[b].comm.noise_power, jam)));
            if (pre < options.comm_prune_threshold) continue;
            net.edges.push_back(
                {a, b, EdgeKind::Communication, post, pre, post});
        }
    }

    // Detection edges, stored target -> sensor. Jamming raises the sensor's
    // noise floor; the echo count n is held fixed.
    for (int s = 0; s < n; ++s) {
        if (!ps[s].functions.sensor || !ps[s].radar) continue;
        const em::RadarParams& radar = *ps[s].radar;
        const double pulses = em::pulses_per_scan(
            radar.horizontal_lobe_width, radar.pulse_repetition_frequency,
            radar.scan_rate);
        const double noise = em::radar_noise_power(radar);
        const double jam = total_jamming_power(
            ps, ps[s], radar.antenna_gain, opposite(ps[s].side), options);
        for (int t = 0; t < n; ++t) {
            if (ps[t].side == ps[s].side) continue;
            const double d = separation(ps[s], ps[t], options);
            const double sig = em::radar_signal_power(radar, ps[t].rcs, d);
            const double pre = em::detection_probability(
                em::sinr(sig, noise, 0.0), pulses);
            const double post = em::detection_probability(
                em::sinr(sig, noise, jam), pulses);
            if (pre < options.detection_prune_threshold) continue;
            net.edges.push_back({t, s, EdgeKind::Detection, post, pre, post});
        }
    }

    net.rebuild_indices();

    // Interference edges: every jammer toward every opposing platform that
    // has at least one incident detection/communication edge.
    for (int i = 0; i < n; ++i) {
        if (!ps[i].functions.influencer) continue;
        for (int j = 0; j < n; ++j) {
            if (ps[j].side == ps[i].side) continue;
            if (net.in_edges[j].empty()) continue;
            const double cap = interference_capability(net, i, j);
            net.edges.push_back({i, j, EdgeKind::Interference, cap, cap, cap});
        }
    }
    net.rebuild_indices();
    return net;
}

double interference_capability(const Network& net, int jammer, int victim) {
    double weighted = 0.0;
    double total_weight = 0.0;
    for (int e : net.in_edges[victim]) {
        const Edge& edge = net.edges[e];
        if (edge.kind == EdgeKind::Interference) continue;
        if (edge.pre_jamming <= 0.0) continue;
        double delta =
            (edge.pre_jamming - edge.post_jamming) / edge.pre_jamming;
        delta = std::clamp(delta, 0.0, 1.0);
        weighted += delta * edge.pre_jamming;
        total_weight += edge.pre_jamming;
    }
    (void)jammer;
    if (total_weight <= 0.0) return 0.0;
    return weighted / total_weight;
}

void revalue_interference_edges(Network& net) {
    for (Edge& e : net.edges) {
        if (e.kind != EdgeKind::Interference) continue;
        e.capability = interference_capability(net, e.from, e.to);
        e.pre_jamming = e.capability;
        e.post_jamming = e.capability;
    }
}

Network delete_node(const Network& net, const std::string& id) {
    const int victim = net.require(id);
    Network out;
    out.options = net.options;
    std::vector<int> remap(net.platforms.size(), -1);
    for (int i = 0; i < static_cast<int>(net.platforms.size()); ++i) {
        if (i == victim) continue;
        remap[i] = static_cast<int>(out.platforms.size());
        out.platforms.push_back(net.platforms[i]);
    }
    for (const Edge& e : net.edges) {
        if (e.from == victim || e.to == victim) continue;
        Edge copy = e;
        copy.from = remap[e.from];
        copy.to = remap[e.to];
        out.edges.push_back(copy);
    }
    out.rebuild_indices();
    if (!out.options.static_interference) {
        revalue_interference_edges(out);
    }
    return out;
}

}  // namespace emnet
