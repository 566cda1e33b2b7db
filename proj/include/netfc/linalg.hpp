#pragma once

// Small dense solver used by the regression steps. Orders here are tiny
// (a few dozen unknowns at most), so plain partial-pivot elimination is enough.

#include <cmath>
#include <cstddef>
#include <vector>

#include "netfc/errors.hpp"

namespace netfc::linalg {

/// Row-major square matrix solve A x = b in place; throws singular_design on
/// rank deficiency.
inline std::vector<double> solve(std::vector<double> a, std::vector<double> b) {
    const std::size_t n = b.size();
    double scale = 0;
    for (double v : a) scale = std::max(scale, std::abs(v));
    if (scale == 0) throw singular_design();
    const double tol = scale * 1e-12 * static_cast<double>(n);

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r * n + col]) > std::abs(a[piv * n + col])) piv = r;
        if (std::abs(a[piv * n + col]) <= tol) throw singular_design();
        if (piv != col) {
            for (std::size_t c = col; c < n; ++c) std::swap(a[col * n + c], a[piv * n + c]);
            std::swap(b[col], b[piv]);
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = a[r * n + col] / a[col * n + col];
            if (f == 0) continue;
            for (std::size_t c = col; c < n; ++c) a[r * n + c] -= f * a[col * n + c];
            b[r] -= f * b[col];
        }
    }
    std::vector<double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t c = i + 1; c < n; ++c) s -= a[i * n + c] * x[c];
        x[i] = s / a[i * n + i];
    }
    return x;
}

/// Least squares via normal equations: rows(i) yields regressor row i,
/// y(i) the target. k is the number of regressors.
template <typename RowFn, typename YFn>
std::vector<double> least_squares(std::size_t n_rows, std::size_t k, RowFn&& rows, YFn&& y) {
    std::vector<double> xtx(k * k, 0.0), xty(k, 0.0), row(k);
    for (std::size_t i = 0; i < n_rows; ++i) {
        rows(i, row);
        const double yi = y(i);
        for (std::size_t a = 0; a < k; ++a) {
            xty[a] += row[a] * yi;
            for (std::size_t b = a; b < k; ++b) xtx[a * k + b] += row[a] * row[b];
        }
    }
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < a; ++b) xtx[a * k + b] = xtx[b * k + a];
    return solve(std::move(xtx), std::move(xty));
}

} // namespace netfc::linalg
