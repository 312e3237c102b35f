#include "emnet/scenario.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace emnet {

using nlohmann::json;

Side opposite(Side s) { return s == Side::A ? Side::B : Side::A; }

std::string to_string(Side s) { return s == Side::A ? "A" : "B"; }

Side side_from_string(const std::string& s) {
    if (s == "A") return Side::A;
    if (s == "B") return Side::B;
    throw ScenarioError("side must be \"A\" or \"B\", got \"" + s + "\"");
}

void CommParams::validate() const {
    auto check = [](double v, const char* name) {
        if (!std::isfinite(v) || v <= 0.0) {
            throw ScenarioError(std::string("comm.") + name +
                                " must be > 0");
        }
    };
    check(transmit_power, "transmit_power");
    check(tx_gain, "tx_gain");
    check(rx_gain, "rx_gain");
    check(wavelength, "wavelength");
    check(noise_power, "noise_power");
    if (!std::isfinite(system_losses) || system_losses < 1.0) {
        throw ScenarioError("comm.system_losses must be >= 1");
    }
    if (!ber_model) {
        throw ScenarioError("comm.ber_model \"" + ber_model_id +
                            "\" is not defined");
    }
}

void Platform::validate() const {
    if (id.empty()) throw ScenarioError("platform id must be non-empty");
    if (functions.sensor && !radar) {
        throw ScenarioError("platform \"" + id +
                            "\": function S requires radar parameters");
    }
    if (functions.influencer && !jammer) {
        throw ScenarioError("platform \"" + id +
                            "\": function I requires jammer parameters");
    }
    if (!std::isfinite(rcs) || rcs <= 0.0) {
        throw ScenarioError("platform \"" + id + "\": rcs must be > 0");
    }
    for (double c : position) {
        if (!std::isfinite(c)) {
            throw ScenarioError("platform \"" + id +
                                "\": position must be finite");
        }
    }
    if (target_weight && (!std::isfinite(*target_weight) ||
                          *target_weight < 0.0)) {
        throw ScenarioError("platform \"" + id +
                            "\": target_weight must be >= 0");
    }
    try {
        if (radar) radar->validate();
        if (jammer) jammer->validate();
        comm.validate();
    } catch (const std::invalid_argument& e) {
        throw ScenarioError("platform \"" + id + "\": " + e.what());
    } catch (const ScenarioError& e) {
        throw ScenarioError("platform \"" + id + "\": " + e.what());
    }
}

double distance(const Platform& a, const Platform& b) {
    const double dx = a.position[0] - b.position[0];
    const double dy = a.position[1] - b.position[1];
    const double dz = a.position[2] - b.position[2];
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

namespace {

double get_number(const json& j, const std::string& ctx,
                  const std::string& key) {
    if (!j.contains(key) || !j.at(key).is_number()) {
        throw ScenarioError(ctx + "." + key + " must be a number");
    }
    return j.at(key).get<double>();
}

double get_number_or(const json& j, const std::string& key, double fallback) {
    if (!j.contains(key)) return fallback;
    return j.at(key).get<double>();
}

em::RadarParams parse_radar(const json& j) {
    em::RadarParams r;
    r.transmit_power = get_number(j, "radar", "transmit_power");
    r.antenna_gain = get_number(j, "radar", "antenna_gain");
    r.wavelength = get_number(j, "radar", "wavelength");
    r.horizontal_lobe_width = get_number(j, "radar", "horizontal_lobe_width");
    r.pulse_repetition_frequency =
        get_number(j, "radar", "pulse_repetition_frequency");
    r.scan_rate = get_number(j, "radar", "scan_rate");
    r.receiver_bandwidth = get_number(j, "radar", "receiver_bandwidth");
    r.noise_figure = get_number(j, "radar", "noise_figure");
    r.system_losses = get_number(j, "radar", "system_losses");
    r.reference_temperature = get_number_or(j, "reference_temperature", 290.0);
    return r;
}

em::JammerParams parse_jammer(const json& j) {
    em::JammerParams p;
    p.transmit_power = get_number(j, "jammer", "transmit_power");
    p.tx_gain = get_number(j, "jammer", "tx_gain");
    p.wavelength = get_number(j, "jammer", "wavelength");
    return p;
}

CommParams parse_comm(const json& j) {
    CommParams c;
    c.transmit_power = get_number(j, "comm", "transmit_power");
    c.tx_gain = get_number(j, "comm", "tx_gain");
    c.rx_gain = get_number(j, "comm", "rx_gain");
    c.wavelength = get_number(j, "comm", "wavelength");
    c.noise_power = get_number(j, "comm", "noise_power");
    c.system_losses = get_number(j, "comm", "system_losses");
    c.ber_model_id = j.value("ber_model", std::string("default"));
    return c;
}

std::shared_ptr<const em::BerModel> parse_ber_model(const std::string& id,
                                                    const json& j) {
    const std::string kind = j.value("kind", std::string());
    try {
        if (kind == "logistic_db") {
            return std::make_shared<em::BerModel>(em::BerModel::logistic_db(
                j.value("steepness", 1.0), j.value("midpoint_db", 5.0)));
        }
        if (kind == "polynomial_db") {
            std::vector<double> coeffs =
                j.at("coefficients").get<std::vector<double>>();
            return std::make_shared<em::BerModel>(em::BerModel::polynomial_db(
                std::move(coeffs), j.value("domain_lo_db", -10.0),
                j.value("domain_hi_db", 30.0)));
        }
        if (kind == "table") {
            std::vector<std::pair<double, double>> samples;
            for (const auto& row : j.at("samples")) {
                samples.emplace_back(row.at(0).get<double>(),
                                     row.at(1).get<double>());
            }
            return std::make_shared<em::BerModel>(
                em::BerModel::table(std::move(samples)));
        }
    } catch (const em::BerModelError& e) {
        throw ScenarioError("ber_models." + id + ": " + e.what());
    } catch (const json::exception& e) {
        throw ScenarioError("ber_models." + id + ": " + e.what());
    }
    throw ScenarioError("ber_models." + id +
                        ".kind must be logistic_db, polynomial_db or table");
}

Functions parse_functions(const json& j, const std::string& id) {
    Functions f;
    if (!j.is_array()) {
        throw ScenarioError("platform \"" + id +
                            "\": functions must be an array");
    }
    for (const auto& entry : j) {
        const std::string s = entry.get<std::string>();
        if (s == "S") f.sensor = true;
        else if (s == "C") f.comm = true;
        else if (s == "D") f.decider = true;
        else if (s == "I") f.influencer = true;
        else
            throw ScenarioError("platform \"" + id +
                                "\": unknown function \"" + s + "\"");
    }
    return f;
}

void parse_options(const json& j, BuildOptions* build, CycleOptions* cycle) {
    build->detection_prune_threshold =
        j.value("detection_prune_threshold", build->detection_prune_threshold);
    build->comm_prune_threshold =
        j.value("comm_prune_threshold", build->comm_prune_threshold);
    build->apply_adversary_jamming =
        j.value("apply_adversary_jamming", build->apply_adversary_jamming);
    build->min_separation = j.value("min_separation", build->min_separation);
    build->static_interference =
        j.value("static_interference", build->static_interference);
    cycle->max_cycle_edges = j.value("max_cycle_edges", cycle->max_cycle_edges);
    cycle->penalty_gamma = j.value("penalty_gamma", cycle->penalty_gamma);
    cycle->require_decider_on_final_hop = j.value(
        "require_decider_on_final_hop", cycle->require_decider_on_final_hop);

    if (build->detection_prune_threshold < 0.0 ||
        build->detection_prune_threshold >= 1.0 ||
        build->comm_prune_threshold < 0.0 ||
        build->comm_prune_threshold >= 1.0) {
        throw ScenarioError("options: prune thresholds must lie in [0, 1)");
    }
    if (cycle->max_cycle_edges < 2) {
        throw ScenarioError("options.max_cycle_edges must be >= 2");
    }
    if (!(cycle->penalty_gamma > 0.0 && cycle->penalty_gamma <= 1.0)) {
        throw ScenarioError("options.penalty_gamma must lie in (0, 1]");
    }
}

}  // namespace

Scenario load_scenario(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ScenarioError(std::string("scenario is not valid JSON: ") +
                            e.what());
    }

    Scenario sc;
    sc.name = doc.value("name", std::string("unnamed"));

    if (doc.contains("sides")) {
        for (const auto& [key, val] : doc.at("sides").items()) {
            side_from_string(key);  // validates
            sc.side_labels[key] = val.value("label", key);
        }
    }

    sc.ber_models["default"] =
        std::make_shared<em::BerModel>(em::BerModel::default_model());
    if (doc.contains("ber_models")) {
        for (const auto& [id, spec] : doc.at("ber_models").items()) {
            sc.ber_models[id] = parse_ber_model(id, spec);
        }
    }

    if (doc.contains("options")) {
        parse_options(doc.at("options"), &sc.build_options,
                      &sc.cycle_options);
    }

    std::set<std::string> seen_ids;
    if (doc.contains("platforms")) {
        for (const auto& pj : doc.at("platforms")) {
            Platform p;
            p.id = pj.value("id", std::string());
            if (p.id.empty()) {
                throw ScenarioError("platform id must be non-empty");
            }
            if (!seen_ids.insert(p.id).second) {
                throw ScenarioError("duplicate platform id \"" + p.id + "\"");
            }
            p.label = pj.value("label", p.id);
            p.side = side_from_string(pj.value("side", std::string("A")));
            if (pj.contains("functions")) {
                p.functions = parse_functions(pj.at("functions"), p.id);
            }
            if (pj.contains("position")) {
                const auto& pos = pj.at("position");
                if (!pos.is_array() || pos.size() != 3) {
                    throw ScenarioError("platform \"" + p.id +
                                        "\": position must be [x, y, z]");
                }
                for (int i = 0; i < 3; ++i) {
                    p.position[i] = pos.at(i).get<double>();
                }
            }
            p.rcs = pj.value("rcs", 1.0);
            try {
                if (pj.contains("radar") && !pj.at("radar").is_null()) {
                    p.radar = parse_radar(pj.at("radar"));
                }
                if (pj.contains("jammer") && !pj.at("jammer").is_null()) {
                    p.jammer = parse_jammer(pj.at("jammer"));
                }
                if (!pj.contains("comm")) {
                    throw ScenarioError("comm parameters are required");
                }
                p.comm = parse_comm(pj.at("comm"));
            } catch (const ScenarioError& e) {
                throw ScenarioError("platform \"" + p.id + "\": " + e.what());
            }
            auto it = sc.ber_models.find(p.comm.ber_model_id);
            if (it == sc.ber_models.end()) {
                throw ScenarioError("platform \"" + p.id +
                                    "\": unknown ber_model \"" +
                                    p.comm.ber_model_id + "\"");
            }
            p.comm.ber_model = it->second;
            if (pj.contains("target_weight") &&
                !pj.at("target_weight").is_null()) {
                p.target_weight = pj.at("target_weight").get<double>();
            }
            p.validate();
            sc.platforms.push_back(std::move(p));
        }
    }
    return sc;
}

Scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ScenarioError("cannot open scenario file: " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return load_scenario(buf.str());
}

}  // namespace emnet
