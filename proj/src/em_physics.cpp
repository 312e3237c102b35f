#include "emnet/em_physics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace emnet::em {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kDetectionThreshold = 4.75;  // fixed, Pfa = 1e-6

void require_finite(double x, const char* name) {
    if (!std::isfinite(x)) {
        throw std::invalid_argument(std::string(name) + " must be finite");
    }
}

void require_positive(double x, const char* name) {
    require_finite(x, name);
    if (x <= 0.0) {
        throw std::invalid_argument(std::string(name) + " must be > 0, got " +
                                    std::to_string(x));
    }
}

}  // namespace

double normal_cdf(double x) {
    require_finite(x, "x");
    // erfc keeps precision in the far tails where 1 - erf underflows.
    return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

double pulses_per_scan(double theta_halfpower_deg, double prf_hz,
                       double scan_rate_deg_s) {
    require_positive(theta_halfpower_deg, "horizontal_lobe_width");
    require_positive(prf_hz, "pulse_repetition_frequency");
    require_positive(scan_rate_deg_s, "scan_rate");
    return theta_halfpower_deg * prf_hz / scan_rate_deg_s;
}

void RadarParams::validate() const {
    require_positive(transmit_power, "radar.transmit_power");
    require_positive(antenna_gain, "radar.antenna_gain");
    require_positive(wavelength, "radar.wavelength");
    require_positive(horizontal_lobe_width, "radar.horizontal_lobe_width");
    require_positive(pulse_repetition_frequency,
                     "radar.pulse_repetition_frequency");
    require_positive(scan_rate, "radar.scan_rate");
    require_positive(receiver_bandwidth, "radar.receiver_bandwidth");
    require_positive(reference_temperature, "radar.reference_temperature");
    if (!std::isfinite(noise_figure) || noise_figure < 1.0) {
        throw std::invalid_argument("radar.noise_figure must be >= 1");
    }
    if (!std::isfinite(system_losses) || system_losses < 1.0) {
        throw std::invalid_argument("radar.system_losses must be >= 1");
    }
}

void JammerParams::validate() const {
    require_positive(transmit_power, "jammer.transmit_power");
    require_positive(tx_gain, "jammer.tx_gain");
    require_positive(wavelength, "jammer.wavelength");
}

double radar_signal_power(const RadarParams& radar, double target_rcs_m2,
                          double range_m) {
    require_positive(target_rcs_m2, "rcs");
    require_positive(range_m, "range");
    const double four_pi = 4.0 * kPi;
    const double numerator = radar.transmit_power * radar.antenna_gain *
                             radar.antenna_gain * radar.wavelength *
                             radar.wavelength * target_rcs_m2;
    const double denominator = four_pi * four_pi * four_pi * range_m * range_m *
                               range_m * range_m * radar.system_losses;
    return numerator / denominator;
}

double radar_noise_power(const RadarParams& radar) {
    return kBoltzmann * radar.reference_temperature *
           radar.receiver_bandwidth * radar.noise_figure;
}

double radar_snr(const RadarParams& radar, double target_rcs_m2,
                 double range_m) {
    return radar_signal_power(radar, target_rcs_m2, range_m) /
           radar_noise_power(radar);
}

double detection_probability(double snr, double pulses) {
    require_finite(snr, "snr");
    require_positive(pulses, "pulses");
    if (snr < 0.0) {
        throw std::invalid_argument("snr must be >= 0");
    }
    const double arg = (kDetectionThreshold - std::sqrt(pulses) * snr) /
                       std::sqrt(1.0 + 2.0 * snr);
    return 1.0 - normal_cdf(arg);
}

double friis_received_power(double p_t, double g_t, double g_r,
                            double wavelength, double distance, double loss) {
    require_positive(p_t, "transmit_power");
    require_positive(g_t, "tx_gain");
    require_positive(g_r, "rx_gain");
    require_positive(wavelength, "wavelength");
    require_positive(distance, "distance");
    require_positive(loss, "loss");
    const double four_pi_d = 4.0 * kPi * distance;
    return p_t * g_t * g_r * wavelength * wavelength /
           (four_pi_d * four_pi_d * loss);
}

double jammer_received_power(const JammerParams& jammer, double victim_rx_gain,
                             double distance) {
    require_positive(victim_rx_gain, "victim_rx_gain");
    require_positive(distance, "distance");
    const double four_pi_d = 4.0 * kPi * distance;
    return jammer.transmit_power * jammer.tx_gain * victim_rx_gain *
           jammer.wavelength * jammer.wavelength / (four_pi_d * four_pi_d);
}

double sinr(double signal_power, double noise_power, double jam_power) {
    require_positive(noise_power, "noise_power");
    require_finite(signal_power, "signal_power");
    require_finite(jam_power, "jam_power");
    if (signal_power < 0.0 || jam_power < 0.0) {
        throw std::invalid_argument("powers must be >= 0");
    }
    return signal_power / (noise_power + jam_power);
}

double comm_capability(double ber) {
    require_finite(ber, "ber");
    if (ber < 0.0 || ber > 0.5) {
        throw std::invalid_argument("ber must lie in [0, 0.5], got " +
                                    std::to_string(ber));
    }
    if (ber >= 0.1) {
        return 0.0;
    }
    return std::cos(5.0 * kPi * ber);
}

}  // namespace emnet::em
