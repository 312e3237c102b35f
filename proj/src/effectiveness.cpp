#include "emnet/effectiveness.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace emnet {

double target_capability(const std::vector<double>& cycle_capabilities) {
    if (cycle_capabilities.empty()) return 0.0;
    double survive = 1.0;
    for (double c : cycle_capabilities) {
        if (!std::isfinite(c) || c < 0.0 || c > 1.0) {
            throw std::invalid_argument(
                "cycle capability must lie in [0, 1], got " +
                std::to_string(c));
        }
        survive *= 1.0 - c;
    }
    return 1.0 - survive;
}

double sos_capability(const std::map<std::string, double>& per_target,
                      const std::map<std::string, double>& weights,
                      bool normalize) {
    if (per_target.size() != weights.size()) {
        throw std::invalid_argument("weight keys do not match targets");
    }
    double weight_sum = 0.0;
    for (const auto& [id, w] : weights) {
        if (!per_target.count(id)) {
            throw std::invalid_argument("weight for unknown target \"" + id +
                                        "\"");
        }
        if (!std::isfinite(w) || w < 0.0) {
            throw std::invalid_argument("weights must be >= 0");
        }
        weight_sum += w;
    }
    const double scale =
        normalize ? (weight_sum > 0.0 ? 1.0 / weight_sum : 0.0) : 1.0;
    double total = 0.0;
    for (const auto& [id, w] : weights) {
        total += w * scale * per_target.at(id);
    }
    return total;
}

double criticality(double base, double after) {
    if (!(base > 0.0) || base > 1.0) {
        throw std::domain_error(
            "criticality baseline must lie in (0, 1], got " +
            std::to_string(base));
    }
    if (!std::isfinite(after) || after < 0.0 || after > 1.0) {
        throw std::invalid_argument("capability after deletion must lie in "
                                    "[0, 1]");
    }
    if (after > base) return 0.0;
    return (base - after) / base * 100.0;
}

namespace {

// Targets are opposing-side platforms carrying a weight (platform
// target_weight, overridable via rank options).
std::map<std::string, double> target_weights(const Network& net,
                                             const RankOptions& opts) {
    std::map<std::string, double> weights;
    for (const Platform& p : net.platforms) {
        if (p.side == opts.analyzing_side) continue;
        auto it = opts.target_weights.find(p.id);
        if (it != opts.target_weights.end()) {
            weights[p.id] = it->second;
        } else if (p.target_weight) {
            weights[p.id] = *p.target_weight;
        }
    }
    return weights;
}

}  // namespace

CapabilityReport evaluate(const Network& net, const CycleOptions& cycle_opts,
                          const RankOptions& rank_opts) {
    const auto weights = target_weights(net, rank_opts);
    if (weights.empty()) {
        throw std::invalid_argument(
            "no weighted targets on the opposing side");
    }
    CapabilityReport report;
    for (const auto& [id, w] : weights) {
        const auto cycles =
            enumerate_cycles(net, id, rank_opts.analyzing_side, cycle_opts);
        std::vector<double> caps;
        caps.reserve(cycles.size());
        for (const auto& c : cycles) caps.push_back(c.capability);
        report.per_target[id] = target_capability(caps);
        report.cycle_counts[id] = static_cast<int>(cycles.size());
    }
    report.total = sos_capability(report.per_target, weights,
                                  rank_opts.normalize_weights);
    return report;
}

namespace {

std::vector<std::string> deletable_nodes(const Network& net,
                                         const RankOptions& opts) {
    for (const std::string& id : opts.protected_nodes) {
        if (net.find(id) < 0) {
            throw std::invalid_argument("protected node \"" + id +
                                        "\" does not exist");
        }
    }
    std::vector<std::string> ids;
    for (const Platform& p : net.platforms) {
        if (p.side != opts.analyzing_side) continue;
        if (opts.protected_nodes.count(p.id)) continue;
        ids.push_back(p.id);
    }
    std::sort(ids.begin(), ids.end());
    return ids;
}

std::vector<CriticalityRow> finish_ranking(std::vector<CriticalityRow> rows) {
    std::sort(rows.begin(), rows.end(),
              [](const CriticalityRow& a, const CriticalityRow& b) {
                  if (a.crt_percent != b.crt_percent) {
                      return a.crt_percent > b.crt_percent;
                  }
                  return a.node < b.node;
              });
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
        rows[i].rank = i + 1;
    }
    return rows;
}

}  // namespace

std::vector<CriticalityRow> rank_nodes_serial(const Network& net,
                                              const CycleOptions& cycle_opts,
                                              const RankOptions& rank_opts) {
    const double base = evaluate(net, cycle_opts, rank_opts).total;
    const auto ids = deletable_nodes(net, rank_opts);
    std::vector<CriticalityRow> rows(ids.size());
    for (size_t i = 0; i < ids.size(); ++i) {
        const Network reduced = delete_node(net, ids[i]);
        const double after = evaluate(reduced, cycle_opts, rank_opts).total;
        rows[i] = {ids[i], after, criticality(base, after), 0};
    }
    return finish_ranking(std::move(rows));
}

std::vector<CriticalityRow> rank_nodes(const Network& net,
                                       const CycleOptions& cycle_opts,
                                       const RankOptions& rank_opts,
                                       int threads) {
    const double base = evaluate(net, cycle_opts, rank_opts).total;
    const auto ids = deletable_nodes(net, rank_opts);
    std::vector<CriticalityRow> rows(ids.size());
    const int n = static_cast<int>(ids.size());
#ifdef _OPENMP
    if (threads > 0) {
#pragma omp parallel for schedule(dynamic) num_threads(threads)
        for (int i = 0; i < n; ++i) {
            const Network reduced = delete_node(net, ids[i]);
            const double after =
                evaluate(reduced, cycle_opts, rank_opts).total;
            rows[i] = {ids[i], after, criticality(base, after), 0};
        }
    } else {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < n; ++i) {
            const Network reduced = delete_node(net, ids[i]);
            const double after =
                evaluate(reduced, cycle_opts, rank_opts).total;
            rows[i] = {ids[i], after, criticality(base, after), 0};
        }
    }
#else
    (void)threads;
    for (int i = 0; i < n; ++i) {
        const Network reduced = delete_node(net, ids[i]);
        const double after = evaluate(reduced, cycle_opts, rank_opts).total;
        rows[i] = {ids[i], after, criticality(base, after), 0};
    }
#endif
    return finish_ranking(std::move(rows));
}

}  // namespace emnet
