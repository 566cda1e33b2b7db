#pragma once

// Seasonal / cyclical labelling of a traffic series, and the order mapping
// used when the ARMA order is left on automatic. Classification runs on the
// log-return values: a significant local ACF peak confirmed at its first
// harmonic is read as a seasonal period.

#include <cmath>
#include <cstddef>
#include <optional>

#include "netfc/backtest.hpp"
#include "netfc/errors.hpp"
#include "netfc/series.hpp"

namespace netfc {

enum class PatternKind { Seasonal, Cyclical };

struct PatternLabel {
    PatternKind kind = PatternKind::Cyclical;
    std::optional<std::size_t> period_steps; // set iff Seasonal
    double peak_acf = 0.0;                   // ACF at the detected period (0 when none)
};

inline PatternLabel classify_pattern(const BinnedSeries& series) {
    if (series.counts.size() < 30) throw too_short("classify needs >= 30 bins");
    const auto returns = log_return(series);
    const std::size_t n = returns.values.size();
    const std::size_t max_lag = std::min<std::size_t>(n / 3, 200);
    const auto rho = acf(returns.values, max_lag);
    const double threshold = 1.96 / std::sqrt(static_cast<double>(n));

    // strongest ACF lag, then reduced to the fundamental: the smallest local
    // maximum within 90% of the global peak (the global peak often sits on a
    // period multiple)
    std::size_t peak = 2;
    for (std::size_t k = 2; k <= max_lag; ++k)
        if (rho.values[k] > rho.values[peak]) peak = k;
    std::size_t period = peak;
    for (std::size_t k = 2; k < peak; ++k) {
        if (rho.values[k] >= 0.9 * rho.values[peak] && rho.values[k] > rho.values[k - 1] &&
            rho.values[k] > rho.values[k + 1]) {
            period = k;
            break;
        }
    }

    // seasonal needs: a strong peak, a significant first harmonic, and a
    // significant trough before the peak (monotone decay has no trough)
    double harmonic = -2.0;
    for (std::size_t h : {2 * period - 1, 2 * period, 2 * period + 1})
        if (h <= max_lag) harmonic = std::max(harmonic, rho.values[h]);
    double trough = 2.0;
    for (std::size_t k = 1; k < period; ++k) trough = std::min(trough, rho.values[k]);

    PatternLabel label;
    if (rho.values[period] > 2.0 * threshold && harmonic > threshold && trough < -threshold) {
        label.kind = PatternKind::Seasonal;
        label.period_steps = period;
        label.peak_acf = rho.values[period];
    }
    return label;
}

/// Order used for forecasting each pattern: seasonal traffic takes ARMA(2,1),
/// cyclical traffic ARMA(3,0).
inline ArmaOrder select_order(const PatternLabel& label) {
    return label.kind == PatternKind::Seasonal ? ArmaOrder{2, 1} : ArmaOrder{3, 0};
}

} // namespace netfc
