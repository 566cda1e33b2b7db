#pragma once

// Log-return transform (with +shift so zero-count bins stay defined), its
// exact inverse, and the biased sample autocorrelation.

#include <cmath>
#include <cstdint>
#include <vector>

#include "netfc/errors.hpp"
#include "netfc/ingest.hpp"

namespace netfc {

/// Log returns of a binned count series. `anchor_count` and `shift` are kept
/// so the transform can be inverted exactly.
struct ReturnSeries {
    std::vector<double> values;
    std::uint64_t anchor_count = 0;
    std::uint64_t shift = 1;
};

struct AcfVector {
    std::vector<double> values; // indexed by lag 0..max_lag, values[0] == 1
    std::size_t n = 0;          // sample size used
};

/// r_t = ln((x_{t+1}+shift)/(x_t+shift)).
inline ReturnSeries log_return(const BinnedSeries& series, std::uint64_t shift = 1) {
    if (series.counts.size() < 2) throw too_short("log_return needs at least 2 bins");
    if (shift == 0) throw error("shift must be a positive integer");
    ReturnSeries out;
    out.anchor_count = series.counts.front();
    out.shift = shift;
    out.values.reserve(series.counts.size() - 1);
    for (std::size_t t = 0; t + 1 < series.counts.size(); ++t) {
        const double a = static_cast<double>(series.counts[t]) + static_cast<double>(shift);
        const double b = static_cast<double>(series.counts[t + 1]) + static_cast<double>(shift);
        out.values.push_back(std::log(b / a));
    }
    return out;
}

/// Reconstruct the (real-valued) count path from a return series. Forecast
/// returns map to real counts; callers round for display if they want.
inline std::vector<double> invert_log_return(const ReturnSeries& returns) {
    std::vector<double> out;
    out.reserve(returns.values.size() + 1);
    out.push_back(static_cast<double>(returns.anchor_count));
    const double c = static_cast<double>(returns.shift);
    for (double r : returns.values) out.push_back((out.back() + c) * std::exp(r) - c);
    return out;
}

/// Biased (divide-by-n) sample ACF with mean removal; values[0] is exactly 1.
inline AcfVector acf(const std::vector<double>& x, std::size_t max_lag) {
    if (x.size() < max_lag + 2) throw too_short("acf needs len >= max_lag + 2");
    const std::size_t n = x.size();
    double mean = 0;
    for (double v : x) mean += v;
    mean /= static_cast<double>(n);
    double denom = 0;
    for (double v : x) denom += (v - mean) * (v - mean);
    if (denom == 0) throw zero_variance();
    AcfVector out;
    out.n = n;
    out.values.assign(max_lag + 1, 0.0);
    out.values[0] = 1.0;
    for (std::size_t k = 1; k <= max_lag; ++k) {
        double num = 0;
        for (std::size_t t = k; t < n; ++t) num += (x[t] - mean) * (x[t - k] - mean);
        out.values[k] = num / denom;
    }
    return out;
}

} // namespace netfc
