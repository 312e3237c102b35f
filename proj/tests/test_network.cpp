#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "emnet/network.hpp"
#include "emnet/scenario.hpp"
#include "support.hpp"

using namespace emnet;
namespace tst = emnet::testing;

namespace {

// One A sensor/jammer platform and one B target with a usable radar link.
const char* kTwoPlatformScenario = R"json({
  "name": "two",
  "platforms": [
    {
      "id": "a1", "side": "A", "functions": ["S", "C", "D", "I"],
      "position": [0, 0, 0], "rcs": 10,
      "radar": {
        "transmit_power": 1e6, "antenna_gain": 1e3, "wavelength": 0.1,
        "horizontal_lobe_width": 2.0, "pulse_repetition_frequency": 500,
        "scan_rate": 100, "receiver_bandwidth": 1e6,
        "noise_figure": 3, "system_losses": 1.5
      },
      "comm": {
        "transmit_power": 100, "tx_gain": 10, "rx_gain": 10,
        "wavelength": 0.3, "noise_power": 1e-12, "system_losses": 1
      },
      "jammer": {"transmit_power": 1e4, "tx_gain": 100, "wavelength": 0.1}
    },
    {
      "id": "b1", "side": "B", "functions": ["S", "C"],
      "position": [60000, 0, 0], "rcs": 5, "target_weight": 1.0,
      "radar": {
        "transmit_power": 2e5, "antenna_gain": 500, "wavelength": 0.1,
        "horizontal_lobe_width": 2.0, "pulse_repetition_frequency": 400,
        "scan_rate": 120, "receiver_bandwidth": 1e6,
        "noise_figure": 3, "system_losses": 1.5
      },
      "comm": {
        "transmit_power": 100, "tx_gain": 10, "rx_gain": 10,
        "wavelength": 0.3, "noise_power": 1e-12, "system_losses": 1
      }
    }
  ]
})json";

}  // namespace

TEST_CASE("load_scenario basics") {
    const Scenario sc = load_scenario(kTwoPlatformScenario);
    CHECK(sc.platforms.size() == 2);
    CHECK(sc.platforms[0].functions.influencer);
    CHECK(sc.platforms[1].side == Side::B);

    CHECK(load_scenario(R"({"name":"empty","platforms":[]})")
              .platforms.empty());
}

TEST_CASE("load_scenario rejects invariant violations") {
    // Function S without radar parameters.
    CHECK_THROWS_WITH_AS(
        load_scenario(R"({"platforms":[{"id":"x","side":"A",
          "functions":["S","C"],
          "comm":{"transmit_power":1,"tx_gain":1,"rx_gain":1,
                  "wavelength":0.3,"noise_power":1e-12,"system_losses":1}}]})"),
        doctest::Contains("radar"), ScenarioError);
    // Duplicate id.
    CHECK_THROWS_WITH_AS(
        load_scenario(R"({"platforms":[
          {"id":"x","side":"A","comm":{"transmit_power":1,"tx_gain":1,
            "rx_gain":1,"wavelength":0.3,"noise_power":1e-12,
            "system_losses":1}},
          {"id":"x","side":"A","comm":{"transmit_power":1,"tx_gain":1,
            "rx_gain":1,"wavelength":0.3,"noise_power":1e-12,
            "system_losses":1}}]})"),
        doctest::Contains("duplicate"), ScenarioError);
    // Unknown BER model id.
    CHECK_THROWS_WITH_AS(
        load_scenario(R"({"platforms":[{"id":"x","side":"A",
          "comm":{"transmit_power":1,"tx_gain":1,"rx_gain":1,
                  "wavelength":0.3,"noise_power":1e-12,"system_losses":1,
                  "ber_model":"nope"}}]})"),
        doctest::Contains("nope"), ScenarioError);
    CHECK_THROWS_AS(load_scenario("{not json"), ScenarioError);
}

TEST_CASE("build_network composes physics into edges") {
    const Scenario sc = load_scenario(kTwoPlatformScenario);
    BuildOptions opts = sc.build_options;
    opts.apply_adversary_jamming = false;
    const Network net = build_network(sc, opts);

    const int a1 = net.require("a1");
    const int b1 = net.require("b1");
    // Detection edge stored target -> sensor.
    const Edge* det = net.find_edge(b1, a1, EdgeKind::Detection);
    REQUIRE(det != nullptr);
    const auto& radar = *sc.platforms[0].radar;
    const double expected = em::detection_probability(
        em::radar_snr(radar, 5.0, 60000.0),
        em::pulses_per_scan(radar.horizontal_lobe_width,
                            radar.pulse_repetition_frequency,
                            radar.scan_rate));
    CHECK(det->capability == doctest::Approx(expected).epsilon(1e-15));
    CHECK(det->pre_jamming == det->post_jamming);

    // No same-side partner: no communication edges at all.
    for (const Edge& e : net.edges) {
        CHECK(e.kind != EdgeKind::Communication);
    }
    // Jam-free: interference capability degenerates to zero degradation.
    const Edge* jam = net.find_edge(a1, b1, EdgeKind::Interference);
    REQUIRE(jam != nullptr);
    CHECK(jam->capability == 0.0);
}

TEST_CASE("jamming only degrades, and zero-power limit matches jam-free") {
    Scenario sc = load_scenario(kTwoPlatformScenario);
    BuildOptions jam_free = sc.build_options;
    jam_free.apply_adversary_jamming = false;
    const Network without = build_network(sc, jam_free);
    const Network with = build_network(sc, sc.build_options);

    REQUIRE(with.edges.size() == without.edges.size());
    for (size_t i = 0; i < with.edges.size(); ++i) {
        CHECK(with.edges[i].post_jamming <= with.edges[i].pre_jamming);
        // Interference values summarize degradation, so they differ between
        // the two builds by design; physical links must agree pre-jamming.
        if (with.edges[i].kind != EdgeKind::Interference) {
            CHECK(with.edges[i].pre_jamming ==
                  doctest::Approx(without.edges[i].pre_jamming)
                      .epsilon(1e-15));
        }
    }

    // Jammer powers -> 0 reproduces the jam-free build bit-for-bit.
    Scenario tiny = sc;
    // the scenario holds values by copy; rebuild with a zeroed jammer
    for (Platform& p : tiny.platforms) {
        if (p.jammer) p.jammer->transmit_power = 1e-300;
    }
    const Network nearly = build_network(tiny, tiny.build_options);
    REQUIRE(nearly.edges.size() == without.edges.size());
    for (size_t i = 0; i < nearly.edges.size(); ++i) {
        CHECK(nearly.edges[i].capability ==
              doctest::Approx(without.edges[i].capability).epsilon(1e-12));
    }
}

TEST_CASE("build_network is deterministic") {
    const Scenario sc = load_scenario(kTwoPlatformScenario);
    const Network n1 = build_network(sc);
    const Network n2 = build_network(sc);
    REQUIRE(n1.edges.size() == n2.edges.size());
    for (size_t i = 0; i < n1.edges.size(); ++i) {
        CHECK(n1.edges[i].capability == n2.edges[i].capability);
    }
}

TEST_CASE("interference_capability hand fixtures") {
    // Single incident edge degraded 0.8 -> 0.4: delta 0.5.
    {
        Network net = tst::make_network({tst::make_platform("i", Side::A, "CI"),
                                         tst::make_platform("k", Side::B, "C"),
                                         tst::make_platform("j", Side::B, "C")});
        tst::add_edge(net, "k", "j", EdgeKind::Communication, 0.8, 0.4);
        net.rebuild_indices();
        CHECK(interference_capability(net, net.require("i"),
                                      net.require("j")) ==
              doctest::Approx(0.5).epsilon(1e-15));
    }
    // (0.8 -> 0.4) and (0.2 -> 0.1): both deltas 0.5.
    {
        Network net = tst::make_network(
            {tst::make_platform("i", Side::A, "CI"),
             tst::make_platform("k1", Side::B, "C"),
             tst::make_platform("k2", Side::B, "C"),
             tst::make_platform("j", Side::B, "C")});
        tst::add_edge(net, "k1", "j", EdgeKind::Communication, 0.8, 0.4);
        tst::add_edge(net, "k2", "j", EdgeKind::Communication, 0.2, 0.1);
        net.rebuild_indices();
        CHECK(interference_capability(net, net.require("i"),
                                      net.require("j")) ==
              doctest::Approx(0.5).epsilon(1e-15));
    }
    // (1.0 -> 0.5) and (0.5 -> 0.5): deltas (0.5, 0), weights (2/3, 1/3).
    {
        Network net = tst::make_network(
            {tst::make_platform("i", Side::A, "CI"),
             tst::make_platform("k1", Side::B, "C"),
             tst::make_platform("k2", Side::B, "C"),
             tst::make_platform("j", Side::B, "C")});
        tst::add_edge(net, "k1", "j", EdgeKind::Communication, 1.0, 0.5);
        tst::add_edge(net, "k2", "j", EdgeKind::Communication, 0.5, 0.5);
        net.rebuild_indices();
        CHECK(interference_capability(net, net.require("i"),
                                      net.require("j")) ==
              doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    }
}

TEST_CASE("interference capability is a convex combination of deltas") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        Network net = tst::make_network(
            {tst::make_platform("i", Side::A, "CI"),
             tst::make_platform("k1", Side::B, "C"),
             tst::make_platform("k2", Side::B, "C"),
             tst::make_platform("k3", Side::B, "C"),
             tst::make_platform("j", Side::B, "C")});
        double dmin = 1.0, dmax = 0.0;
        for (const char* k : {"k1", "k2", "k3"}) {
            const double pre = 0.05 + 0.95 * u(rng);
            const double post = pre * u(rng);
            const double delta = (pre - post) / pre;
            dmin = std::min(dmin, delta);
            dmax = std::max(dmax, delta);
            tst::add_edge(net, k, "j", EdgeKind::Communication, pre, post);
        }
        net.rebuild_indices();
        const double cap =
            interference_capability(net, net.require("i"), net.require("j"));
        CHECK(cap >= dmin - 1e-12);
        CHECK(cap <= dmax + 1e-12);
        CHECK(cap >= 0.0);
        CHECK(cap <= 1.0);
    }
}

TEST_CASE("interference capability with no incident edges is zero") {
    Network net = tst::make_network({tst::make_platform("i", Side::A, "CI"),
                                     tst::make_platform("j", Side::B, "C")});
    CHECK(interference_capability(net, 0, 1) == 0.0);
}

TEST_CASE("delete_node removes the platform, keeps others untouched") {
    Network net = tst::make_network({tst::make_platform("a", Side::A, "SCDI"),
                                     tst::make_platform("b", Side::A, "C"),
                                     tst::make_platform("t", Side::B, "C", 1)});
    tst::add_edge(net, "t", "a", EdgeKind::Detection, 0.9, 0.9);
    tst::add_edge(net, "a", "b", EdgeKind::Communication, 0.8, 0.7);
    net.rebuild_indices();

    const Network reduced = delete_node(net, "b");
    CHECK(reduced.platforms.size() == 2);
    CHECK(reduced.find("b") == -1);
    REQUIRE(reduced.edges.size() == 1);
    CHECK(reduced.edges[0].kind == EdgeKind::Detection);
    CHECK(reduced.edges[0].capability == 0.9);
    // Original unchanged.
    CHECK(net.platforms.size() == 3);
    CHECK(net.edges.size() == 2);

    CHECK_THROWS_AS(delete_node(reduced, "b"), std::out_of_range);
}

TEST_CASE("delete_node reweights interference per the 4-node fixture") {
    // Victim j has edges from k (delta 0) and from b2 (delta 0.8).
    Network net = tst::make_network(
        {tst::make_platform("i", Side::A, "SCDI"),
         tst::make_platform("k", Side::A, "C"),
         tst::make_platform("b2", Side::B, "C"),
         tst::make_platform("j", Side::B, "SC", 1.0)});
    tst::add_edge(net, "j", "i", EdgeKind::Detection, 0.9, 0.9);
    tst::add_edge(net, "k", "j", EdgeKind::Detection, 0.6, 0.6);   // j observes k
    tst::add_edge(net, "b2", "j", EdgeKind::Communication, 0.5, 0.1);
    net.rebuild_indices();
    Edge jam{net.require("i"), net.require("j"), EdgeKind::Interference, 0, 0,
             0};
    net.edges.push_back(jam);
    net.rebuild_indices();
    revalue_interference_edges(net);

    // Hand evaluation: deltas (0, 0.8), weights (0.6, 0.5)/1.1.
    const double before = (0.0 * 0.6 + 0.8 * 0.5) / 1.1;
    CHECK(net.find_edge(0, 3, EdgeKind::Interference)->capability ==
          doctest::Approx(before).epsilon(1e-15));

    // Deleting k removes the zero-delta edge; the average rises to 0.8.
    const Network reduced = delete_node(net, "k");
    const Edge* e = reduced.find_edge(reduced.require("i"),
                                      reduced.require("j"),
                                      EdgeKind::Interference);
    REQUIRE(e != nullptr);
    CHECK(e->capability == doctest::Approx(0.8).epsilon(1e-15));

    // With static interference the value is frozen instead.
    Network frozen = net;
    frozen.options.static_interference = true;
    const Network reduced2 = delete_node(frozen, "k");
    CHECK(reduced2
              .find_edge(reduced2.require("i"), reduced2.require("j"),
                         EdgeKind::Interference)
              ->capability == doctest::Approx(before).epsilon(1e-15));
}

TEST_CASE("all edge capabilities stay in [0,1] on random networks") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        Network net = tst::random_network(rng, 6, 2);
        revalue_interference_edges(net);
        for (const Edge& e : net.edges) {
            CHECK(e.capability >= 0.0);
            CHECK(e.capability <= 1.0);
        }
        const Network reduced = delete_node(net, "a0");
        for (const Edge& e : reduced.edges) {
            CHECK(e.capability >= 0.0);
            CHECK(e.capability <= 1.0);
        }
        // Induced sub-multigraph: every surviving edge existed before.
        CHECK(reduced.edges.size() <= net.edges.size());
    }
}
