#include "emnet/ber_model.hpp"

#include <algorithm>
#include <cmath>

namespace emnet::em {

namespace {
constexpr int kValidationSamples = 257;
constexpr double kMonotoneSlack = 1e-12;
}  // namespace

BerModel BerModel::logistic_db(double steepness, double midpoint_db) {
    if (!std::isfinite(steepness) || steepness <= 0.0) {
        throw BerModelError("logistic_db steepness must be > 0");
    }
    if (!std::isfinite(midpoint_db)) {
        throw BerModelError("logistic_db midpoint must be finite");
    }
    BerModel m;
    m.kind_ = Kind::LogisticDb;
    m.steepness_ = steepness;
    m.midpoint_db_ = midpoint_db;
    return m;
}

BerModel BerModel::default_model() { return logistic_db(1.0, 5.0); }

BerModel BerModel::polynomial_db(std::vector<double> coefficients,
                                 double domain_lo_db, double domain_hi_db) {
    if (coefficients.empty()) {
        throw BerModelError("polynomial_db needs at least one coefficient");
    }
    if (!(domain_lo_db < domain_hi_db)) {
        throw BerModelError("polynomial_db domain must satisfy lo < hi");
    }
    BerModel m;
    m.kind_ = Kind::PolynomialDb;
    m.coefficients_ = std::move(coefficients);
    m.domain_lo_db_ = domain_lo_db;
    m.domain_hi_db_ = domain_hi_db;
    m.validate();
    return m;
}

BerModel BerModel::table(std::vector<std::pair<double, double>> samples) {
    if (samples.size() < 2) {
        throw BerModelError("table model needs at least two samples");
    }
    if (!std::is_sorted(samples.begin(), samples.end(),
                        [](const auto& a, const auto& b) {
                            return a.first < b.first;
                        })) {
        throw BerModelError("table samples must be sorted by sinr_db");
    }
    BerModel m;
    m.kind_ = Kind::Table;
    m.samples_ = std::move(samples);
    m.domain_lo_db_ = m.samples_.front().first;
    m.domain_hi_db_ = m.samples_.back().first;
    m.validate();
    return m;
}

double BerModel::raw_at_db(double x) const {
    switch (kind_) {
        case Kind::LogisticDb:
            return 0.5 / (1.0 + std::exp(steepness_ * (x - midpoint_db_)));
        case Kind::PolynomialDb: {
            // Horner
            double acc = 0.0;
            for (auto it = coefficients_.rbegin(); it != coefficients_.rend();
                 ++it) {
                acc = acc * x + *it;
            }
            return acc;
        }
        case Kind::Table: {
            auto it = std::lower_bound(
                samples_.begin(), samples_.end(), x,
                [](const auto& s, double v) { return s.first < v; });
            if (it == samples_.begin()) return it->second;
            if (it == samples_.end()) return samples_.back().second;
            const auto& [x1, y1] = *it;
            const auto& [x0, y0] = *(it - 1);
            const double t = (x1 == x0) ? 0.0 : (x - x0) / (x1 - x0);
            return y0 + t * (y1 - y0);
        }
    }
    return 0.5;
}

void BerModel::validate() const {
    double prev = 1.0;
    for (int i = 0; i < kValidationSamples; ++i) {
        const double x = domain_lo_db_ + (domain_hi_db_ - domain_lo_db_) * i /
                                             (kValidationSamples - 1);
        const double y = raw_at_db(x);
        if (!std::isfinite(y) || y < -1e-9 || y > 0.5 + 1e-9) {
            throw BerModelError("BER model leaves [0, 0.5] at " +
                                std::to_string(x) + " dB (value " +
                                std::to_string(y) + ")");
        }
        if (i > 0 && y > prev + kMonotoneSlack) {
            throw BerModelError("BER model is not non-increasing near " +
                                std::to_string(x) + " dB");
        }
        prev = y;
    }
}

double BerModel::evaluate(double sinr) const {
    if (!std::isfinite(sinr) || sinr < 0.0) {
        throw std::invalid_argument("sinr must be finite and >= 0");
    }
    // sinr == 0 maps to -inf dB, clamped to the low end of the domain.
    double x = sinr > 0.0 ? 10.0 * std::log10(sinr) : domain_lo_db_;
    x = std::clamp(x, domain_lo_db_, domain_hi_db_);
    return std::clamp(raw_at_db(x), 0.0, 0.5);
}

}  // namespace emnet::em
