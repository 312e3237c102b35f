#ifndef EMNET_EFFECTIVENESS_HPP
#define EMNET_EFFECTIVENESS_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "emnet/cycles.hpp"
#include "emnet/network.hpp"

namespace emnet {

struct RankOptions {
    Side analyzing_side = Side::A;
    std::set<std::string> protected_nodes;
    std::map<std::string, double> target_weights;  // optional override
    bool normalize_weights = true;
};

struct CapabilityReport {
    std::map<std::string, double> per_target;   // Cap_CSoS->target
    std::map<std::string, int> cycle_counts;
    double total = 0.0;                         // Cap_CSoS
};

struct CriticalityRow {
    std::string node;
    double capability_after_deletion = 0.0;
    double crt_percent = 0.0;
    int rank = 0;
};

// 1 - prod(1 - cap) over the cycle set; empty -> 0.
double target_capability(const std::vector<double>& cycle_capabilities);

// Weighted sum of per-target capabilities; weights normalized to unit sum
// when `normalize` is set. Keys of both maps must coincide.
double sos_capability(const std::map<std::string, double>& per_target,
                      const std::map<std::string, double>& weights,
                      bool normalize = true);

// Relative capability loss in percent, clamped at zero when deletion
// improves the system.
double criticality(double base, double after);

// Per-target and total capability of the analyzing side against every
// weighted opposing target.
CapabilityReport evaluate(const Network& net, const CycleOptions& cycle_opts,
                          const RankOptions& rank_opts);

// Node-deletion criticality ranking. `threads` caps the OpenMP worker count
// (0 = library default); results are identical for any thread count.
std::vector<CriticalityRow> rank_nodes(const Network& net,
                                       const CycleOptions& cycle_opts,
                                       const RankOptions& rank_opts,
                                       int threads = 0);

// Serial reference implementation, kept for testing and benchmarking.
std::vector<CriticalityRow> rank_nodes_serial(const Network& net,
                                              const CycleOptions& cycle_opts,
                                              const RankOptions& rank_opts);

}  // namespace emnet

#endif
