#ifndef EMNET_CYCLES_HPP
#define EMNET_CYCLES_HPP

#include <string>
#include <vector>

#include "emnet/network.hpp"

namespace emnet {

// One OODA combat cycle: target -> sensor -> (comm path) -> jammer -> target.
// `nodes` holds platform indices in traversal order starting at the target;
// `edge_ids` holds the matching edge per hop, closing back to the target.
struct CombatCycle {
    std::vector<int> nodes;     // [target, sensor, relays..., jammer]
    std::vector<int> edge_ids;  // size == nodes.size()
    double capability = 0.0;

    int target() const { return nodes.front(); }
    int sensor() const { return nodes[1]; }
    int jammer() const { return nodes.back(); }
    int edge_count() const { return static_cast<int>(edge_ids.size()); }
};

// Product of edge capabilities with the per-edge length penalty gamma.
double cycle_capability(const Network& net, const CombatCycle& cycle,
                        const CycleOptions& opts);

// All simple combat cycles through `target`, deterministically ordered by
// node-id sequence. Throws std::invalid_argument when the target is on the
// analyzing side.
std::vector<CombatCycle> enumerate_cycles(const Network& net,
                                          const std::string& target_id,
                                          Side analyzing_side,
                                          const CycleOptions& opts);

// Human-readable node-id sequence "T -> S -> ... -> I".
std::string cycle_to_string(const Network& net, const CombatCycle& cycle);

}  // namespace emnet

#endif
