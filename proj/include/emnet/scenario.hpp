#ifndef EMNET_SCENARIO_HPP
#define EMNET_SCENARIO_HPP

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "emnet/ber_model.hpp"
#include "emnet/em_physics.hpp"

namespace emnet {

enum class Side { A, B };

Side opposite(Side s);
std::string to_string(Side s);
Side side_from_string(const std::string& s);

// Platform functions: Sensor, Communication, Decider, Influencer (jammer).
struct Functions {
    bool sensor = false;
    bool comm = true;  // every platform carries a communication module
    bool decider = false;
    bool influencer = false;
};

struct CommParams {
    double transmit_power;  // W
    double tx_gain;         // linear
    double rx_gain;         // linear
    double wavelength;      // m
    double noise_power;     // W
    double system_losses;   // linear, >= 1
    std::string ber_model_id = "default";
    std::shared_ptr<const em::BerModel> ber_model;

    void validate() const;
};

struct Platform {
    std::string id;
    std::string label;
    Side side = Side::A;
    Functions functions;
    std::array<double, 3> position{};  // m
    double rcs = 1.0;                  // m^2
    std::optional<em::RadarParams> radar;
    CommParams comm;
    std::optional<em::JammerParams> jammer;
    std::optional<double> target_weight;

    void validate() const;  // throws ScenarioError on invariant violation
};

double distance(const Platform& a, const Platform& b);

struct BuildOptions {
    double detection_prune_threshold = 1e-3;
    double comm_prune_threshold = 1e-6;
    bool apply_adversary_jamming = true;
    double min_separation = 1.0;  // m, Friis singularity guard
    // When true, delete_node keeps interference-edge capabilities frozen
    // instead of re-running the weighted-average reweighting.
    bool static_interference = false;
};

struct CycleOptions {
    int max_cycle_edges = 8;
    double penalty_gamma = 0.95;
    bool require_decider_on_final_hop = true;
};

class ScenarioError : public std::runtime_error {
  public:
    explicit ScenarioError(const std::string& what)
        : std::runtime_error(what) {}
};

struct Scenario {
    std::string name;
    std::map<std::string, std::string> side_labels;
    std::map<std::string, std::shared_ptr<const em::BerModel>> ber_models;
    std::vector<Platform> platforms;
    BuildOptions build_options;
    CycleOptions cycle_options;
};

// Parse and validate a scenario from JSON text. Throws ScenarioError with
// the offending field named in the message.
Scenario load_scenario(const std::string& json_text);
Scenario load_scenario_file(const std::string& path);

}  // namespace emnet

#endif
