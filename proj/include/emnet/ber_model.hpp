#ifndef EMNET_BER_MODEL_HPP
#define EMNET_BER_MODEL_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace emnet::em {

// Thrown when a user-supplied BER curve fails range or monotonicity
// validation at load time.
class BerModelError : public std::runtime_error {
  public:
    explicit BerModelError(const std::string& what)
        : std::runtime_error(what) {}
};

// Monotone map from SINR (linear ratio) to bit error rate.
//
// The curve is evaluated in the dB domain (x = 10*log10(sinr)) and the
// output is clamped to [0, 0.5]. Inputs outside [domain_lo_db, domain_hi_db]
// clamp to the nearest endpoint, so the model extends flat on both sides.
class BerModel {
  public:
    enum class Kind { LogisticDb, PolynomialDb, Table };

    // ber(x) = 0.5 / (1 + exp(steepness * (x - midpoint_db)))
    static BerModel logistic_db(double steepness, double midpoint_db);

    // Default curve used when a scenario names none: logistic with
    // steepness 1.0 and midpoint 5 dB (ber = 0.25 at 5 dB SINR).
    static BerModel default_model();

    // coefficients[i] multiplies x^i. Validated by sampling over the domain.
    static BerModel polynomial_db(std::vector<double> coefficients,
                                  double domain_lo_db, double domain_hi_db);

    // Sorted (sinr_db, ber) samples, linear interpolation between them.
    static BerModel table(std::vector<std::pair<double, double>> samples);

    double evaluate(double sinr) const;  // sinr >= 0, linear ratio
    Kind kind() const { return kind_; }
    double midpoint_db() const { return midpoint_db_; }

  private:
    BerModel() = default;
    double raw_at_db(double x) const;
    void validate() const;

    Kind kind_ = Kind::LogisticDb;
    double steepness_ = 1.0;
    double midpoint_db_ = 5.0;
    std::vector<double> coefficients_;
    std::vector<std::pair<double, double>> samples_;
    double domain_lo_db_ = -20.0;
    double domain_hi_db_ = 40.0;
};

}  // namespace emnet::em

#endif
