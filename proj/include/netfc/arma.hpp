#pragma once

// ARMA(p,q) modelling: x_t = sum_i theta_i x_{t-i} + sum_j phi_j eps_{t-j} + eps_t
// with zero process mean. Estimation is OLS for pure AR and Hannan-Rissanen
// two-stage least squares for q >= 1, with optional Gauss-Newton refinement
// of the conditional sum of squares. All operations are deterministic.

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <vector>

#include "netfc/errors.hpp"
#include "netfc/linalg.hpp"

namespace netfc {

struct ArmaModel {
    std::size_t p = 0;
    std::size_t q = 0;
    std::vector<double> theta; // AR coefficients, size p
    std::vector<double> phi;   // MA coefficients, size q
    double mu = 0.0;           // fixed to 0 in the default fitting path
    double sigma2 = 1.0;       // innovation variance
};

/// Innovations recovered by the conditional recursion. Indices below burn_in
/// lean on zero-padded pre-sample values and are excluded from variance
/// estimates.
struct ResidualSeries {
    std::vector<double> values;
    std::size_t burn_in = 0;
};

struct FitOptions {
    std::optional<std::size_t> long_ar_order; // stage-1 AR order; default 2*ln(n)
    bool refine = true;
    std::size_t max_refine_iters = 50;
    double refine_tol = 1e-8; // sup-norm parameter change
    bool force_two_stage = false; // route q == 0 through the two-stage path
};

struct StabilityReport {
    bool ar_stable = true;
    bool ma_invertible = true;
    double min_ar_root_modulus = std::numeric_limits<double>::infinity();
    double min_ma_root_modulus = std::numeric_limits<double>::infinity();
};

namespace detail {

/// Roots of c[0] + c[1] z + ... + c[d] z^d by Durand-Kerner iteration.
inline std::vector<std::complex<double>> poly_roots(std::vector<double> coeffs) {
    while (!coeffs.empty() && std::abs(coeffs.back()) < 1e-300) coeffs.pop_back();
    if (coeffs.size() < 2) return {};
    const std::size_t d = coeffs.size() - 1;
    std::vector<std::complex<double>> c(coeffs.begin(), coeffs.end());
    for (auto& v : c) v /= coeffs.back();

    auto eval = [&](std::complex<double> z) {
        std::complex<double> acc = 0;
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
        return acc;
    };

    std::vector<std::complex<double>> roots(d);
    const std::complex<double> seed(0.4, 0.9);
    std::complex<double> powv = 1.0;
    for (auto& r : roots) {
        powv *= seed;
        r = powv;
    }
    for (int iter = 0; iter < 500; ++iter) {
        double max_step = 0;
        for (std::size_t k = 0; k < d; ++k) {
            std::complex<double> denom = 1.0;
            for (std::size_t j = 0; j < d; ++j)
                if (j != k) denom *= roots[k] - roots[j];
            const auto step = eval(roots[k]) / denom;
            roots[k] -= step;
            max_step = std::max(max_step, std::abs(step));
        }
        if (max_step < 1e-13) break;
    }
    return roots;
}

inline double variance(const std::vector<double>& x) {
    double mean = 0;
    for (double v : x) mean += v;
    mean /= static_cast<double>(x.size());
    double s = 0;
    for (double v : x) s += (v - mean) * (v - mean);
    return s / static_cast<double>(x.size());
}

/// Conditional residual recursion with zero-padded pre-sample values.
inline std::vector<double> conditional_residuals(const std::vector<double>& theta,
                                                 const std::vector<double>& phi,
                                                 const std::vector<double>& x) {
    std::vector<double> eps(x.size());
    for (std::size_t t = 0; t < x.size(); ++t) {
        double v = x[t];
        for (std::size_t i = 0; i < theta.size(); ++i)
            if (t >= i + 1) v -= theta[i] * x[t - i - 1];
        for (std::size_t j = 0; j < phi.size(); ++j)
            if (t >= j + 1) v -= phi[j] * eps[t - j - 1];
        eps[t] = v;
    }
    return eps;
}

inline double css(const std::vector<double>& eps, std::size_t burn) {
    double s = 0;
    for (std::size_t t = burn; t < eps.size(); ++t) s += eps[t] * eps[t];
    return s;
}

/// One Gauss-Newton pass over the conditional sum of squares; mutates
/// theta/phi in place. Stops early on a singular step or no improvement.
inline void refine_css(std::vector<double>& theta, std::vector<double>& phi,
                       const std::vector<double>& x, const FitOptions& opts) {
    const std::size_t p = theta.size(), q = phi.size(), m = p + q;
    if (m == 0) return;
    const std::size_t burn = std::max(p, q);
    const std::size_t n = x.size();

    for (std::size_t iter = 0; iter < opts.max_refine_iters; ++iter) {
        auto eps = conditional_residuals(theta, phi, x);
        // derivative recursions, one column per parameter
        std::vector<std::vector<double>> grad(m, std::vector<double>(n, 0.0));
        for (std::size_t t = 0; t < n; ++t) {
            for (std::size_t a = 0; a < m; ++a) {
                double g;
                if (a < p) {
                    g = (t >= a + 1) ? -x[t - a - 1] : 0.0;
                } else {
                    const std::size_t j = a - p;
                    g = (t >= j + 1) ? -eps[t - j - 1] : 0.0;
                }
                for (std::size_t k = 0; k < q; ++k)
                    if (t >= k + 1) g -= phi[k] * grad[a][t - k - 1];
                grad[a][t] = g;
            }
        }
        std::vector<double> jtj(m * m, 0.0), jte(m, 0.0);
        for (std::size_t t = burn; t < n; ++t) {
            for (std::size_t a = 0; a < m; ++a) {
                jte[a] += grad[a][t] * eps[t];
                for (std::size_t b = a; b < m; ++b) jtj[a * m + b] += grad[a][t] * grad[b][t];
            }
        }
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < a; ++b) jtj[a * m + b] = jtj[b * m + a];

        std::vector<double> delta;
        try {
            delta = linalg::solve(jtj, jte);
        } catch (const singular_design&) {
            return;
        }

        const double sse0 = css(eps, burn);
        double step = 1.0;
        bool accepted = false;
        std::vector<double> th_new(p), ph_new(q);
        for (int h = 0; h < 12; ++h, step *= 0.5) {
            for (std::size_t i = 0; i < p; ++i) th_new[i] = theta[i] - step * delta[i];
            for (std::size_t j = 0; j < q; ++j) ph_new[j] = phi[j] - step * delta[p + j];
            const double sse = css(conditional_residuals(th_new, ph_new, x), burn);
            if (sse < sse0) {
                accepted = true;
                break;
            }
        }
        if (!accepted) return;
        double sup = 0;
        for (std::size_t i = 0; i < p; ++i) sup = std::max(sup, std::abs(th_new[i] - theta[i]));
        for (std::size_t j = 0; j < q; ++j) sup = std::max(sup, std::abs(ph_new[j] - phi[j]));
        theta = th_new;
        phi = ph_new;
        if (sup < opts.refine_tol) return;
    }
}

/// OLS of x_t on its own lags 1..order for t >= t0, no intercept.
inline std::vector<double> fit_ar_ols(const std::vector<double>& x, std::size_t order,
                                      std::size_t t0) {
    const std::size_t rows = x.size() - t0;
    return linalg::least_squares(
        rows, order,
        [&](std::size_t i, std::vector<double>& row) {
            const std::size_t t = t0 + i;
            for (std::size_t a = 0; a < order; ++a) row[a] = x[t - a - 1];
        },
        [&](std::size_t i) { return x[t0 + i]; });
}

} // namespace detail

/// Innovations of `model` on `x` via the conditional recursion; pre-sample
/// x and eps are treated as 0 and burn_in = max(p,q).
inline ResidualSeries residuals(const ArmaModel& model, const std::vector<double>& x) {
    if (x.size() < std::max(model.p, model.q) + 1)
        throw too_short("residuals need len >= max(p,q)+1");
    ResidualSeries out;
    out.values = detail::conditional_residuals(model.theta, model.phi, x);
    out.burn_in = std::max(model.p, model.q);
    return out;
}

/// Estimate an ARMA(p,q) on a zero-mean series. Pure AR uses OLS; q >= 1 uses
/// Hannan-Rissanen two-stage least squares plus optional Gauss-Newton
/// refinement of the conditional sum of squares.
inline std::pair<ArmaModel, ResidualSeries> fit(const std::vector<double>& x, std::size_t p,
                                                std::size_t q, const FitOptions& opts = {}) {
    const std::size_t n = x.size();
    if (n < 10 * (p + q + 1)) throw too_short("fit needs len >= 10*(p+q+1)");
    if (detail::variance(x) == 0) throw zero_variance();

    ArmaModel model;
    model.p = p;
    model.q = q;
    model.theta.assign(p, 0.0);
    model.phi.assign(q, 0.0);

    if (p + q > 0) {
        if (q == 0 && !opts.force_two_stage) {
            model.theta = detail::fit_ar_ols(x, p, p);
        } else {
            std::size_t L = opts.long_ar_order.value_or(
                std::max(p + q, static_cast<std::size_t>(std::ceil(2.0 * std::log(n)))));
            L = std::min(L, n / 4); // stage-1 order must leave enough rows
            std::vector<double> proxy(n, 0.0);
            if (q > 0) {
                const auto long_ar = detail::fit_ar_ols(x, L, L);
                for (std::size_t t = L; t < n; ++t) {
                    double e = x[t];
                    for (std::size_t i = 0; i < L; ++i) e -= long_ar[i] * x[t - i - 1];
                    proxy[t] = e;
                }
            }
            const std::size_t t0 = (q > 0) ? std::max(p, L + q) : p;
            const std::size_t k = p + q;
            auto beta = linalg::least_squares(
                n - t0, k,
                [&](std::size_t i, std::vector<double>& row) {
                    const std::size_t t = t0 + i;
                    for (std::size_t a = 0; a < p; ++a) row[a] = x[t - a - 1];
                    for (std::size_t j = 0; j < q; ++j) row[p + j] = proxy[t - j - 1];
                },
                [&](std::size_t i) { return x[t0 + i]; });
            for (std::size_t a = 0; a < p; ++a) model.theta[a] = beta[a];
            for (std::size_t j = 0; j < q; ++j) model.phi[j] = beta[p + j];
        }
        if (opts.refine) detail::refine_css(model.theta, model.phi, x, opts);
    }

    ResidualSeries res = residuals(model, x);
    double s = 0;
    for (std::size_t t = res.burn_in; t < res.values.size(); ++t) s += res.values[t] * res.values[t];
    const std::size_t m = res.values.size() - res.burn_in;
    model.sigma2 = std::max(s / static_cast<double>(m), std::numeric_limits<double>::min());
    return {std::move(model), std::move(res)};
}

/// Seeded forward simulation with Gaussian innovations; returns the last n of
/// burn + n generated values.
inline std::vector<double> simulate(const ArmaModel& model, std::size_t n, std::uint64_t seed,
                                    std::size_t burn = 500) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> noise(0.0, std::sqrt(model.sigma2));
    const std::size_t total = burn + n;
    std::vector<double> x(total, 0.0), eps(total, 0.0);
    for (std::size_t t = 0; t < total; ++t) {
        eps[t] = noise(rng);
        double v = eps[t];
        for (std::size_t i = 0; i < model.p; ++i)
            if (t >= i + 1) v += model.theta[i] * x[t - i - 1];
        for (std::size_t j = 0; j < model.q; ++j)
            if (t >= j + 1) v += model.phi[j] * eps[t - j - 1];
        x[t] = v;
    }
    return {x.begin() + static_cast<std::ptrdiff_t>(burn), x.end()};
}

/// h-step-ahead forecasts from the end of `history`. Future innovations are
/// taken at their zero expectation; earlier forecasts feed later AR lags.
inline std::vector<double> forecast(const ArmaModel& model, const std::vector<double>& history,
                                    const ResidualSeries& hist_residuals, std::size_t h) {
    if (history.size() < model.p) throw too_short("forecast needs len >= p");
    if (hist_residuals.values.size() != history.size())
        throw length_mismatch(hist_residuals.values.size(), history.size());

    const std::size_t t = history.size(); // index of the first forecast
    std::vector<double> ext(history);
    ext.reserve(t + h);
    std::vector<double> out;
    out.reserve(h);
    for (std::size_t k = 0; k < h; ++k) {
        const std::size_t idx = t + k;
        double v = 0;
        for (std::size_t i = 0; i < model.p; ++i) {
            if (idx >= i + 1) v += model.theta[i] * ext[idx - i - 1];
        }
        for (std::size_t j = 0; j < model.q; ++j) {
            if (idx < j + 1) continue;
            const std::size_t ridx = idx - j - 1;
            if (ridx < t) v += model.phi[j] * hist_residuals.values[ridx];
            // future innovations forecast to 0
        }
        ext.push_back(v);
        out.push_back(v);
    }
    return out;
}

/// AR-stability and MA-invertibility via the characteristic polynomial roots;
/// all moduli must exceed 1 (with a small guard band).
inline StabilityReport check_roots(const ArmaModel& model) {
    StabilityReport rep;
    auto min_modulus = [](const std::vector<std::complex<double>>& roots) {
        double m = std::numeric_limits<double>::infinity();
        for (const auto& r : roots) m = std::min(m, std::abs(r));
        return m;
    };
    std::vector<double> ar{1.0};
    for (double t : model.theta) ar.push_back(-t);
    std::vector<double> ma{1.0};
    for (double f : model.phi) ma.push_back(f);
    rep.min_ar_root_modulus = min_modulus(detail::poly_roots(std::move(ar)));
    rep.min_ma_root_modulus = min_modulus(detail::poly_roots(std::move(ma)));
    rep.ar_stable = rep.min_ar_root_modulus > 1.0 + 1e-9;
    rep.ma_invertible = rep.min_ma_root_modulus > 1.0 + 1e-9;
    return rep;
}

} // namespace netfc
