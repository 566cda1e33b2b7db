#pragma once

// Rolling-origin multi-step forecasting over a log-return series with MSE
// evaluation. Origins advance by `horizon`, so evaluation segments do not
// overlap and the aggregate MSE is a true per-point mean.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "netfc/arma.hpp"
#include "netfc/errors.hpp"
#include "netfc/series.hpp"

namespace netfc {

struct ArmaOrder {
    std::size_t p = 0;
    std::size_t q = 0;
    bool operator==(const ArmaOrder&) const = default;
};

struct BacktestConfig {
    std::size_t window = 120;     // trailing fit sample, in steps
    std::size_t horizon = 5;      // steps forecast per origin
    std::size_t total_ahead = 15; // overall target; multiple of horizon
    ArmaOrder order;
    bool refit = true;
    FitOptions fit_options;
};

struct BacktestResult {
    std::vector<std::size_t> origins;
    std::vector<double> predicted; // horizon values per origin, concatenated
    std::vector<double> actual;    // aligned with predicted
    double mse = 0.0;
    std::vector<double> per_origin_mse;
    std::vector<ArmaModel> model_snapshots;
    std::vector<bool> stability_flags; // AR stable and MA invertible per origin
    std::size_t window = 0;
    std::size_t horizon = 0;
    ArmaOrder order;
};

/// Mean of squared differences.
inline double mse(const std::vector<double>& actual, const std::vector<double>& predicted) {
    if (actual.size() != predicted.size()) throw length_mismatch(actual.size(), predicted.size());
    if (actual.empty()) throw empty_input();
    double s = 0;
    for (std::size_t i = 0; i < actual.size(); ++i) {
        const double d = actual[i] - predicted[i];
        s += d * d;
    }
    return s / static_cast<double>(actual.size());
}

/// Walk origins from window-1 forward by `horizon`; at each origin fit (or
/// reuse) the model on the trailing window and score the next `horizon`
/// actual values against the forecasts. Fit failures carry the origin index.
inline BacktestResult rolling_backtest(const ReturnSeries& returns, const BacktestConfig& cfg) {
    const auto& x = returns.values;
    if (cfg.horizon == 0 || cfg.total_ahead % cfg.horizon != 0)
        throw error("total_ahead must be a positive multiple of horizon");
    if (x.size() < cfg.window + cfg.total_ahead)
        throw too_short("backtest needs len >= window + total_ahead");
    if (cfg.window < 10 * (cfg.order.p + cfg.order.q + 1))
        throw too_short("window must be >= 10*(p+q+1)");

    BacktestResult res;
    res.window = cfg.window;
    res.horizon = cfg.horizon;
    res.order = cfg.order;

    ArmaModel shared_model;
    bool have_shared = false;

    for (std::size_t origin = cfg.window - 1; origin + cfg.horizon < x.size();
         origin += cfg.horizon) {
        const std::vector<double> window_vals(x.begin() + static_cast<std::ptrdiff_t>(origin + 1 - cfg.window),
                                              x.begin() + static_cast<std::ptrdiff_t>(origin + 1));
        ArmaModel model;
        ResidualSeries res_series;
        try {
            if (cfg.refit || !have_shared) {
                auto fitted = fit(window_vals, cfg.order.p, cfg.order.q, cfg.fit_options);
                model = std::move(fitted.first);
                res_series = std::move(fitted.second);
                shared_model = model;
                have_shared = true;
            } else {
                model = shared_model;
                res_series = residuals(model, window_vals);
            }
        } catch (const error& e) {
            throw fit_failure(origin, e.what());
        }

        const auto preds = forecast(model, window_vals, res_series, cfg.horizon);
        std::vector<double> actual(x.begin() + static_cast<std::ptrdiff_t>(origin + 1),
                                   x.begin() + static_cast<std::ptrdiff_t>(origin + 1 + cfg.horizon));

        res.origins.push_back(origin);
        res.predicted.insert(res.predicted.end(), preds.begin(), preds.end());
        res.actual.insert(res.actual.end(), actual.begin(), actual.end());
        res.per_origin_mse.push_back(mse(actual, preds));
        const auto stab = check_roots(model);
        res.stability_flags.push_back(stab.ar_stable && stab.ma_invertible);
        res.model_snapshots.push_back(std::move(model));
    }

    res.mse = mse(res.actual, res.predicted);
    return res;
}

struct OrderComparison {
    std::vector<std::pair<ArmaOrder, double>> entries; // (order, mse) in input order
    std::size_t best_index = 0;                        // argmin mse
};

/// Run the same backtest per candidate order and rank by aggregate MSE.
inline OrderComparison compare_orders(const ReturnSeries& returns, const BacktestConfig& cfg_base,
                                      const std::vector<ArmaOrder>& orders) {
    if (orders.empty()) throw empty_orders();
    OrderComparison cmp;
    for (const auto& order : orders) {
        BacktestConfig cfg = cfg_base;
        cfg.order = order;
        const auto res = rolling_backtest(returns, cfg);
        cmp.entries.emplace_back(order, res.mse);
    }
    for (std::size_t i = 1; i < cmp.entries.size(); ++i)
        if (cmp.entries[i].second < cmp.entries[cmp.best_index].second) cmp.best_index = i;
    return cmp;
}

} // namespace netfc
