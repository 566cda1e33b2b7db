#pragma once

// Serialization of the pipeline values (CSV and JSON), the per-dataset MSE
// comparison report, and plot emission (overlay CSV plus a dependency-free
// SVG line chart).

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "netfc/backtest.hpp"
#include "netfc/classify.hpp"
#include "netfc/errors.hpp"
#include "netfc/series.hpp"

namespace netfc {

inline std::string format_sig6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

inline std::string order_name(const ArmaOrder& o) {
    return "ARMA(" + std::to_string(o.p) + "," + std::to_string(o.q) + ")";
}

// ---- CSV serializations -------------------------------------------------

inline void write_binned_csv(std::ostream& out, const BinnedSeries& s) {
    out << "bin_index,start_seconds,count\n";
    for (std::size_t i = 0; i < s.counts.size(); ++i)
        out << i << ',' << format_sig6(s.origin_seconds + static_cast<double>(i) * s.step_seconds)
            << ',' << s.counts[i] << '\n';
}

inline void write_returns_csv(std::ostream& out, const ReturnSeries& r) {
    out << "t,log_return\n";
    for (std::size_t t = 0; t < r.values.size(); ++t)
        out << t << ',' << nlohmann::json(r.values[t]).dump() << '\n';
}

inline void write_acf_csv(std::ostream& out, const AcfVector& a) {
    out << "lag,acf\n";
    for (std::size_t k = 0; k < a.values.size(); ++k)
        out << k << ',' << nlohmann::json(a.values[k]).dump() << '\n';
}

inline BinnedSeries read_binned_csv(std::istream& in) {
    auto rows = csv::read_all(in);
    BinnedSeries s;
    std::vector<double> starts;
    bool first = true;
    for (const auto& r : rows) {
        double idx;
        if (first) {
            first = false;
            if (r.fields.size() < 3 || !detail::parse_double(r.fields[0], idx)) continue;
        }
        if (r.fields.size() < 3) throw malformed_row(r.line_no);
        double start, count;
        if (!detail::parse_double(r.fields[1], start) || !detail::parse_double(r.fields[2], count) ||
            count < 0)
            throw malformed_row(r.line_no);
        starts.push_back(start);
        s.counts.push_back(static_cast<std::uint64_t>(std::llround(count)));
    }
    if (s.counts.empty()) throw empty_input();
    s.origin_seconds = starts.front();
    s.step_seconds = starts.size() > 1 ? starts[1] - starts[0] : 30.0;
    return s;
}

inline ReturnSeries read_returns_csv(std::istream& in) {
    auto rows = csv::read_all(in);
    ReturnSeries r;
    bool first = true;
    for (const auto& row : rows) {
        double t;
        if (first) {
            first = false;
            if (row.fields.size() < 2 || !detail::parse_double(row.fields[0], t)) continue;
        }
        if (row.fields.size() < 2) throw malformed_row(row.line_no);
        double v;
        if (!detail::parse_double(row.fields[1], v)) throw malformed_row(row.line_no);
        r.values.push_back(v);
    }
    if (r.values.empty()) throw empty_input();
    return r;
}

// ---- JSON serializations ------------------------------------------------

inline nlohmann::json model_to_json(const ArmaModel& m) {
    return {{"p", m.p},     {"q", m.q},   {"theta", m.theta},
            {"phi", m.phi}, {"mu", m.mu}, {"sigma2", m.sigma2}};
}

inline ArmaModel model_from_json(const nlohmann::json& j) {
    ArmaModel m;
    m.p = j.at("p").get<std::size_t>();
    m.q = j.at("q").get<std::size_t>();
    m.theta = j.at("theta").get<std::vector<double>>();
    m.phi = j.at("phi").get<std::vector<double>>();
    m.mu = j.at("mu").get<double>();
    m.sigma2 = j.at("sigma2").get<double>();
    if (m.theta.size() != m.p || m.phi.size() != m.q)
        throw error("model JSON order/coefficient mismatch");
    return m;
}

inline nlohmann::json label_to_json(const PatternLabel& label) {
    nlohmann::json j;
    j["kind"] = label.kind == PatternKind::Seasonal ? "Seasonal" : "Cyclical";
    if (label.period_steps) j["period_steps"] = *label.period_steps;
    else j["period_steps"] = nullptr;
    j["peak_acf"] = label.peak_acf;
    return j;
}

inline nlohmann::json backtest_to_json(const BacktestResult& r) {
    nlohmann::json j;
    j["window"] = r.window;
    j["horizon"] = r.horizon;
    j["order"] = {{"p", r.order.p}, {"q", r.order.q}};
    j["origins"] = r.origins;
    j["predicted"] = r.predicted;
    j["actual"] = r.actual;
    j["mse"] = r.mse;
    j["per_origin_mse"] = r.per_origin_mse;
    j["stability_flags"] = r.stability_flags;
    nlohmann::json snaps = nlohmann::json::array();
    for (const auto& m : r.model_snapshots) snaps.push_back(model_to_json(m));
    j["model_snapshots"] = snaps;
    return j;
}

inline void write_backtest_csv(std::ostream& out, const BacktestResult& r) {
    out << "origin,offset,actual,predicted\n";
    for (std::size_t i = 0; i < r.origins.size(); ++i) {
        for (std::size_t k = 0; k < r.horizon; ++k) {
            const std::size_t idx = i * r.horizon + k;
            out << r.origins[i] << ',' << k << ',' << nlohmann::json(r.actual[idx]).dump() << ','
                << nlohmann::json(r.predicted[idx]).dump() << '\n';
        }
    }
}

// ---- MSE comparison report ----------------------------------------------

struct ReportRow {
    std::string dataset;
    ArmaOrder order;
    double mse = 0.0;
};

enum class ReportFormat { Text, Csv, Json };

/// Per-dataset winner (lowest MSE, first on ties), in first-seen dataset order.
inline std::vector<std::pair<std::string, ArmaOrder>>
report_winners(const std::vector<ReportRow>& rows) {
    std::vector<std::pair<std::string, ArmaOrder>> winners;
    std::vector<double> best;
    for (const auto& row : rows) {
        auto it = std::find_if(winners.begin(), winners.end(),
                               [&](const auto& w) { return w.first == row.dataset; });
        if (it == winners.end()) {
            winners.emplace_back(row.dataset, row.order);
            best.push_back(row.mse);
        } else if (row.mse < best[static_cast<std::size_t>(it - winners.begin())]) {
            it->second = row.order;
            best[static_cast<std::size_t>(it - winners.begin())] = row.mse;
        }
    }
    return winners;
}

/// One row per (dataset, order) with MSE at 6 significant digits, plus the
/// winning order per dataset.
inline std::string render_report(const std::vector<ReportRow>& rows, ReportFormat format) {
    if (rows.empty()) throw error("empty report");
    const auto winners = report_winners(rows);

    std::ostringstream out;
    switch (format) {
    case ReportFormat::Text: {
        char buf[128];
        std::snprintf(buf, sizeof buf, "%-10s %-12s %s\n", "Dataset", "Order", "MSE");
        out << buf;
        for (const auto& row : rows) {
            std::snprintf(buf, sizeof buf, "%-10s %-12s %s\n", row.dataset.c_str(),
                          order_name(row.order).c_str(), format_sig6(row.mse).c_str());
            out << buf;
        }
        out << '\n';
        for (const auto& [dataset, order] : winners)
            out << "winner " << dataset << ": " << order_name(order) << '\n';
        break;
    }
    case ReportFormat::Csv: {
        out << "dataset,p,q,mse,winner\n";
        for (const auto& row : rows) {
            const bool win = std::any_of(winners.begin(), winners.end(), [&](const auto& w) {
                return w.first == row.dataset && w.second == row.order;
            });
            out << csv::escape(row.dataset) << ',' << row.order.p << ',' << row.order.q << ','
                << format_sig6(row.mse) << ',' << (win ? 1 : 0) << '\n';
        }
        break;
    }
    case ReportFormat::Json: {
        nlohmann::json j;
        j["results"] = nlohmann::json::array();
        for (const auto& row : rows)
            j["results"].push_back({{"dataset", row.dataset},
                                    {"p", row.order.p},
                                    {"q", row.order.q},
                                    {"mse", row.mse}});
        j["winners"] = nlohmann::json::object();
        for (const auto& [dataset, order] : winners)
            j["winners"][dataset] = {{"p", order.p}, {"q", order.q}};
        out << j.dump(2) << '\n';
        break;
    }
    }
    return out.str();
}

// ---- Plot emission ------------------------------------------------------

inline void write_overlay_csv(std::ostream& out, const std::vector<double>& actual,
                              const std::vector<double>& predicted) {
    if (actual.size() != predicted.size()) throw length_mismatch(actual.size(), predicted.size());
    out << "t,actual,predicted\n";
    for (std::size_t t = 0; t < actual.size(); ++t)
        out << t << ',' << nlohmann::json(actual[t]).dump() << ','
            << nlohmann::json(predicted[t]).dump() << '\n';
}

/// Self-contained 960x480 SVG overlay chart: two polylines, axes with at most
/// 20 labelled x ticks, and a legend.
inline std::string render_plot_svg(const std::vector<double>& actual,
                                   const std::vector<double>& predicted) {
    if (actual.size() != predicted.size()) throw length_mismatch(actual.size(), predicted.size());
    if (actual.empty()) throw empty_input();

    constexpr double width = 960, height = 480;
    constexpr double ml = 60, mr = 20, mt = 20, mb = 40; // margins
    const double pw = width - ml - mr, ph = height - mt - mb;

    double lo = actual[0], hi = actual[0];
    for (double v : actual) lo = std::min(lo, v), hi = std::max(hi, v);
    for (double v : predicted) lo = std::min(lo, v), hi = std::max(hi, v);
    if (hi == lo) {
        lo -= 1;
        hi += 1;
    }
    const std::size_t n = actual.size();
    auto px = [&](std::size_t t) {
        return n == 1 ? ml + pw / 2
                      : ml + pw * static_cast<double>(t) / static_cast<double>(n - 1);
    };
    auto py = [&](double v) { return mt + ph * (1.0 - (v - lo) / (hi - lo)); };
    auto coord = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2f", v);
        return std::string(buf);
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"960\" height=\"480\" "
           "viewBox=\"0 0 960 480\">\n";
    svg << "<rect x=\"0\" y=\"0\" width=\"960\" height=\"480\" fill=\"white\"/>\n";
    // axes
    svg << "<line x1=\"" << coord(ml) << "\" y1=\"" << coord(mt + ph) << "\" x2=\""
        << coord(ml + pw) << "\" y2=\"" << coord(mt + ph) << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << coord(ml) << "\" y1=\"" << coord(mt) << "\" x2=\"" << coord(ml)
        << "\" y2=\"" << coord(mt + ph) << "\" stroke=\"black\"/>\n";

    // x ticks, thinned to at most 20 labels
    const std::size_t tick_step = (n + 19) / 20;
    for (std::size_t t = 0; t < n; t += tick_step) {
        svg << "<line x1=\"" << coord(px(t)) << "\" y1=\"" << coord(mt + ph) << "\" x2=\""
            << coord(px(t)) << "\" y2=\"" << coord(mt + ph + 5) << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << coord(px(t)) << "\" y=\"" << coord(mt + ph + 18)
            << "\" font-size=\"11\" text-anchor=\"middle\">" << t << "</text>\n";
    }
    // y ticks
    for (int i = 0; i <= 4; ++i) {
        const double v = lo + (hi - lo) * i / 4.0;
        svg << "<line x1=\"" << coord(ml - 5) << "\" y1=\"" << coord(py(v)) << "\" x2=\""
            << coord(ml) << "\" y2=\"" << coord(py(v)) << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << coord(ml - 8) << "\" y=\"" << coord(py(v) + 4)
            << "\" font-size=\"11\" text-anchor=\"end\">" << format_sig6(v) << "</text>\n";
    }

    auto polyline = [&](const std::vector<double>& ys, const char* color) {
        svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t t = 0; t < n; ++t) {
            if (t) svg << ' ';
            svg << coord(px(t)) << ',' << coord(py(ys[t]));
        }
        svg << "\"/>\n";
    };
    polyline(actual, "#1f77b4");
    polyline(predicted, "#d62728");

    // legend
    svg << "<rect x=\"760\" y=\"28\" width=\"14\" height=\"4\" fill=\"#1f77b4\"/>\n"
        << "<text x=\"780\" y=\"34\" font-size=\"12\">actual</text>\n"
        << "<rect x=\"760\" y=\"46\" width=\"14\" height=\"4\" fill=\"#d62728\"/>\n"
        << "<text x=\"780\" y=\"52\" font-size=\"12\">predicted</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

} // namespace netfc
