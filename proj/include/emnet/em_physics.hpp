#ifndef EMNET_EM_PHYSICS_HPP
#define EMNET_EM_PHYSICS_HPP

namespace emnet::em {

// Boltzmann constant [J/K]
inline constexpr double kBoltzmann = 1.380649e-23;

// Standard normal CDF. Absolute error <= 1e-9.
double normal_cdf(double x);

// Echo count per antenna scan: theta_halfpower * prf / scan_rate.
// theta_halfpower in degrees, prf in Hz, scan_rate in deg/s.
double pulses_per_scan(double theta_halfpower_deg, double prf_hz,
                       double scan_rate_deg_s);

struct RadarParams {
    double transmit_power;         // W
    double antenna_gain;           // linear
    double wavelength;             // m
    double horizontal_lobe_width;  // deg
    double pulse_repetition_frequency;  // Hz
    double scan_rate;              // deg/s
    double receiver_bandwidth;     // Hz
    double noise_figure;           // linear, >= 1
    double system_losses;          // linear, >= 1
    double reference_temperature = 290.0;  // K

    void validate() const;  // throws std::invalid_argument
};

struct JammerParams {
    double transmit_power;  // W
    double tx_gain;         // linear
    double wavelength;      // m

    void validate() const;
};

// Single-pulse SNR from the radar range equation.
double radar_snr(const RadarParams& radar, double target_rcs_m2,
                 double range_m);

// Radar signal power at the receiver with thermal noise left out,
// i.e. radar_snr * noise_power. Used to inject jamming into the
// noise term without re-deriving the equation.
double radar_signal_power(const RadarParams& radar, double target_rcs_m2,
                          double range_m);

// Thermal noise power k*T0*B*Fn of a radar receiver.
double radar_noise_power(const RadarParams& radar);

// Detection probability for false alarm rate 1e-6:
//   Pd = 1 - Phi((4.75 - sqrt(n)*snr) / sqrt(1 + 2*snr))
double detection_probability(double snr, double pulses);

// Free-space received power Pt*Gt*Gr*lambda^2 / ((4*pi)^2 * d^2 * L).
double friis_received_power(double p_t, double g_t, double g_r,
                            double wavelength, double distance, double loss);

// Jamming power at a victim receiver: Pj*Gj*Grj*lambda^2 / (4*pi*dj)^2.
double jammer_received_power(const JammerParams& jammer, double victim_rx_gain,
                             double distance);

// Signal over noise-plus-interference. With jam_power == 0 this is plain SNR.
double sinr(double signal_power, double noise_power, double jam_power);

// Eq-style BER normalization: 0 for BER >= 0.1, else cos(5*pi*BER).
double comm_capability(double ber);

}  // namespace emnet::em

#endif
