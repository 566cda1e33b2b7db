#pragma once

// Seeded synthetic traffic generators: a sinusoidal (seasonal) count series
// and a smoothed, re-centred random walk (cyclical). Both emit valid binned
// count series, deterministic per seed.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "netfc/errors.hpp"
#include "netfc/ingest.hpp"

namespace netfc {

struct SynthParams {
    std::size_t n_bins = 600;
    double base_rate = 100.0; // mean packets per bin
    double amplitude = 50.0;  // seasonal only
    std::size_t period_steps = 20;
    std::size_t smoothing = 10; // cyclical moving-average width
    double noise_sd = 5.0;
    std::uint64_t seed = 0;
    double step_seconds = 30.0;
};

namespace detail {

inline std::uint64_t clamp_count(double v) {
    const double r = std::round(v);
    return r <= 0 ? 0 : static_cast<std::uint64_t>(r);
}

} // namespace detail

/// counts[t] = max(0, round(base + amplitude*sin(2*pi*t/period) + noise)).
inline BinnedSeries gen_seasonal(const SynthParams& params) {
    if (params.period_steps < 2) throw error("gen_seasonal needs period_steps >= 2");
    if (params.n_bins < 3 * params.period_steps)
        throw error("gen_seasonal needs n_bins >= 3*period_steps");
    if (params.amplitude > params.base_rate)
        throw error("amplitude must not exceed base_rate");
    std::mt19937_64 rng(params.seed);
    std::normal_distribution<double> noise(0.0, params.noise_sd);
    BinnedSeries out;
    out.step_seconds = params.step_seconds;
    out.counts.reserve(params.n_bins);
    for (std::size_t t = 0; t < params.n_bins; ++t) {
        const double phase = 2.0 * std::numbers::pi * static_cast<double>(t) /
                             static_cast<double>(params.period_steps);
        const double g = params.noise_sd > 0 ? noise(rng) : 0.0;
        out.counts.push_back(detail::clamp_count(params.base_rate +
                                                 params.amplitude * std::sin(phase) + g));
    }
    return out;
}

/// counts[t] = max(0, round(base + smoothed re-centred Gaussian random walk)).
inline BinnedSeries gen_cyclical(const SynthParams& params) {
    if (params.smoothing < 1) throw error("gen_cyclical needs smoothing >= 1");
    if (params.n_bins < 10 * params.smoothing)
        throw error("gen_cyclical needs n_bins >= 10*smoothing");
    std::mt19937_64 rng(params.seed);
    std::normal_distribution<double> noise(0.0, params.noise_sd);

    std::vector<double> walk(params.n_bins);
    double level = 0;
    for (auto& w : walk) {
        level += params.noise_sd > 0 ? noise(rng) : 0.0;
        w = level;
    }
    // trailing moving average, window clipped at the start
    std::vector<double> smooth(params.n_bins);
    double acc = 0;
    for (std::size_t t = 0; t < params.n_bins; ++t) {
        acc += walk[t];
        if (t >= params.smoothing) acc -= walk[t - params.smoothing];
        const auto width = std::min(t + 1, params.smoothing);
        smooth[t] = acc / static_cast<double>(width);
    }
    double mean = 0;
    for (double v : smooth) mean += v;
    mean /= static_cast<double>(params.n_bins);

    BinnedSeries out;
    out.step_seconds = params.step_seconds;
    out.counts.reserve(params.n_bins);
    for (double v : smooth) out.counts.push_back(detail::clamp_count(params.base_rate + v - mean));
    return out;
}

} // namespace netfc
