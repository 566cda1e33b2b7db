// netfc: packet-capture CSV -> binned counts -> log returns -> ARMA forecast
// pipeline, one subcommand per stage. A run manifest is written next to each
// primary output so runs can be replayed byte-identically.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "netfc/arma.hpp"
#include "netfc/backtest.hpp"
#include "netfc/classify.hpp"
#include "netfc/errors.hpp"
#include "netfc/ingest.hpp"
#include "netfc/report.hpp"
#include "netfc/series.hpp"
#include "netfc/synth.hpp"

namespace {

constexpr const char* kToolVersion = "netfc 0.1.0";

struct ManifestBuilder {
    std::string command;
    std::vector<std::string> inputs;
    nlohmann::json parameters = nlohmann::json::object();
    std::vector<std::string> outputs;

    void write() const {
        if (outputs.empty()) return;
        nlohmann::json j{{"command", command},
                         {"inputs", inputs},
                         {"parameters", parameters},
                         {"outputs", outputs},
                         {"tool_version", kToolVersion}};
        const std::string path = outputs.front() + ".manifest.json";
        std::ofstream f(path, std::ios::binary);
        if (!f) throw netfc::io_error(path);
        f << j.dump(2) << '\n';
    }
};

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw netfc::io_error(path);
    f << content;
    if (!f) throw netfc::io_error(path);
}

std::ifstream open_input(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw netfc::io_error(path);
    return f;
}

netfc::ArmaOrder parse_order(const std::string& s) {
    std::istringstream in(s);
    std::size_t p, q;
    char comma;
    if (!(in >> p >> comma >> q) || comma != ',') throw netfc::error("bad order: " + s);
    return {p, q};
}

std::vector<std::string> split(const std::string& s, char delim) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string item;
    while (std::getline(in, item, delim))
        if (!item.empty()) out.push_back(item);
    return out;
}

netfc::ReturnSeries load_returns(const std::string& returns_path, const std::string& counts_path,
                                 std::uint64_t shift, std::optional<netfc::BinnedSeries>* binned_out) {
    if (!returns_path.empty()) {
        auto f = open_input(returns_path);
        return netfc::read_returns_csv(f);
    }
    auto f = open_input(counts_path);
    auto binned = netfc::read_binned_csv(f);
    auto returns = netfc::log_return(binned, shift);
    if (binned_out) *binned_out = std::move(binned);
    return returns;
}

// ---- subcommand runners -------------------------------------------------

struct IngestArgs {
    std::vector<std::string> inputs;
    double step_seconds = 30.0;
    std::string protocols = "tcp,udp";
    double per_file_offset = 0.0;
    std::string output;
};

int run_ingest(const IngestArgs& a) {
    std::vector<std::vector<netfc::PacketRecord>> parts;
    for (std::size_t i = 0; i < a.inputs.size(); ++i) {
        auto records = netfc::parse_capture_csv(a.inputs[i]);
        if (a.per_file_offset > 0) {
            for (auto& r : records) r.time += a.per_file_offset * static_cast<double>(i);
        }
        parts.push_back(std::move(records));
    }
    auto merged = netfc::merge_captures(parts);
    std::set<std::string> allowed;
    for (const auto& p : split(a.protocols, ',')) allowed.insert(p);
    merged = netfc::filter_transport(merged, allowed);
    if (merged.empty()) throw netfc::empty_input();
    const auto binned = netfc::bin_counts(merged, a.step_seconds);

    std::ostringstream out;
    netfc::write_binned_csv(out, binned);
    write_file(a.output, out.str());

    ManifestBuilder m{"ingest", a.inputs};
    m.parameters = {{"step_seconds", a.step_seconds},
                    {"protocols", a.protocols},
                    {"per_file_offset", a.per_file_offset}};
    m.outputs = {a.output};
    m.write();
    return 0;
}

struct TransformArgs {
    std::string input;
    std::uint64_t shift = 1;
    std::string output;
    std::string acf_output;
    std::size_t max_lag = 50;
};

int run_transform(const TransformArgs& a) {
    auto f = open_input(a.input);
    const auto binned = netfc::read_binned_csv(f);
    const auto returns = netfc::log_return(binned, a.shift);

    std::ostringstream out;
    netfc::write_returns_csv(out, returns);
    write_file(a.output, out.str());

    ManifestBuilder m{"transform", {a.input}};
    m.parameters = {{"shift", a.shift}};
    m.outputs = {a.output};
    if (!a.acf_output.empty()) {
        const auto rho = netfc::acf(returns.values, a.max_lag);
        std::ostringstream acf_out;
        netfc::write_acf_csv(acf_out, rho);
        write_file(a.acf_output, acf_out.str());
        m.parameters["max_lag"] = a.max_lag;
        m.outputs.push_back(a.acf_output);
    }
    m.write();
    return 0;
}

struct ClassifyArgs {
    std::string input;
    std::string output;
};

int run_classify(const ClassifyArgs& a) {
    auto f = open_input(a.input);
    const auto binned = netfc::read_binned_csv(f);
    const auto label = netfc::classify_pattern(binned);
    const auto j = netfc::label_to_json(label);
    std::cout << j.dump(2) << '\n';
    if (!a.output.empty()) {
        write_file(a.output, j.dump(2) + "\n");
        ManifestBuilder m{"classify", {a.input}};
        m.outputs = {a.output};
        m.write();
    }
    return 0;
}

struct FitArgs {
    std::string returns_path, counts_path;
    std::uint64_t shift = 1;
    std::string order = "1,0";
    bool no_refine = false;
    std::size_t long_ar = 0;
    std::string output;
};

int run_fit(const FitArgs& a) {
    const auto returns = load_returns(a.returns_path, a.counts_path, a.shift, nullptr);
    const auto order = parse_order(a.order);
    netfc::FitOptions opts;
    opts.refine = !a.no_refine;
    if (a.long_ar > 0) opts.long_ar_order = a.long_ar;
    const auto [model, res] = netfc::fit(returns.values, order.p, order.q, opts);
    const auto stab = netfc::check_roots(model);

    auto j = netfc::model_to_json(model);
    j["ar_stable"] = stab.ar_stable;
    j["ma_invertible"] = stab.ma_invertible;
    write_file(a.output, j.dump(2) + "\n");

    ManifestBuilder m{"fit", {a.returns_path.empty() ? a.counts_path : a.returns_path}};
    m.parameters = {{"order", a.order},
                    {"shift", a.shift},
                    {"refine", !a.no_refine},
                    {"long_ar", a.long_ar}};
    m.outputs = {a.output};
    m.write();
    return 0;
}

struct ForecastArgs {
    std::string returns_path, counts_path;
    std::uint64_t shift = 1;
    std::string model_path;
    std::size_t horizon = 5;
    std::string output;
};

int run_forecast(const ForecastArgs& a) {
    const auto returns = load_returns(a.returns_path, a.counts_path, a.shift, nullptr);
    auto mf = open_input(a.model_path);
    const auto model = netfc::model_from_json(nlohmann::json::parse(mf));
    const auto res = netfc::residuals(model, returns.values);
    const auto preds = netfc::forecast(model, returns.values, res, a.horizon);

    std::ostringstream out;
    out << "k,predicted\n";
    for (std::size_t k = 0; k < preds.size(); ++k)
        out << (k + 1) << ',' << nlohmann::json(preds[k]).dump() << '\n';
    write_file(a.output, out.str());

    ManifestBuilder m{"forecast",
                      {a.returns_path.empty() ? a.counts_path : a.returns_path, a.model_path}};
    m.parameters = {{"horizon", a.horizon}, {"shift", a.shift}};
    m.outputs = {a.output};
    m.write();
    return 0;
}

struct BacktestArgs {
    std::string returns_path, counts_path;
    std::uint64_t shift = 1;
    std::string order = "auto";
    std::size_t window = 120;
    std::size_t horizon = 5;
    std::size_t total_ahead = 15;
    bool no_refit = false;
    std::string window_sweep;
    std::string output;
    std::string csv_output;
    std::string plot_base;
};

int run_backtest(const BacktestArgs& a) {
    std::optional<netfc::BinnedSeries> binned;
    const auto returns = load_returns(a.returns_path, a.counts_path, a.shift, &binned);

    netfc::BacktestConfig cfg;
    cfg.window = a.window;
    cfg.horizon = a.horizon;
    cfg.total_ahead = a.total_ahead;
    cfg.refit = !a.no_refit;
    if (a.order == "auto") {
        if (!binned) throw netfc::error("--order auto needs --counts input");
        cfg.order = netfc::select_order(netfc::classify_pattern(*binned));
    } else {
        cfg.order = parse_order(a.order);
    }

    ManifestBuilder m{"backtest", {a.returns_path.empty() ? a.counts_path : a.returns_path}};
    m.parameters = {{"order", netfc::order_name(cfg.order)}, {"window", a.window},
                    {"horizon", a.horizon},                  {"total_ahead", a.total_ahead},
                    {"shift", a.shift},                      {"refit", cfg.refit}};

    if (!a.window_sweep.empty()) {
        nlohmann::json sweep = nlohmann::json::array();
        for (const auto& w : split(a.window_sweep, ',')) {
            cfg.window = static_cast<std::size_t>(std::stoul(w));
            const auto res = netfc::rolling_backtest(returns, cfg);
            sweep.push_back({{"window", cfg.window}, {"mse", res.mse}});
            std::cout << "window " << cfg.window << " mse " << netfc::format_sig6(res.mse) << '\n';
        }
        write_file(a.output, sweep.dump(2) + "\n");
        m.parameters["window_sweep"] = a.window_sweep;
        m.outputs = {a.output};
        m.write();
        return 0;
    }

    const auto res = netfc::rolling_backtest(returns, cfg);
    write_file(a.output, netfc::backtest_to_json(res).dump(2) + "\n");
    m.outputs = {a.output};
    if (!a.csv_output.empty()) {
        std::ostringstream out;
        netfc::write_backtest_csv(out, res);
        write_file(a.csv_output, out.str());
        m.outputs.push_back(a.csv_output);
    }
    if (!a.plot_base.empty()) {
        std::ostringstream overlay;
        netfc::write_overlay_csv(overlay, res.actual, res.predicted);
        write_file(a.plot_base + ".csv", overlay.str());
        write_file(a.plot_base + ".svg", netfc::render_plot_svg(res.actual, res.predicted));
        m.outputs.push_back(a.plot_base + ".csv");
        m.outputs.push_back(a.plot_base + ".svg");
    }
    m.write();
    std::cout << netfc::order_name(cfg.order) << " mse " << netfc::format_sig6(res.mse) << '\n';
    return 0;
}

struct CompareArgs {
    std::string returns_path, counts_path;
    std::uint64_t shift = 1;
    std::string orders = "2,1;3,0";
    std::size_t window = 120;
    std::size_t horizon = 5;
    std::size_t total_ahead = 15;
    std::string dataset = "data";
    std::string format = "text";
    std::string output;
};

netfc::ReportFormat parse_format(const std::string& s) {
    if (s == "text") return netfc::ReportFormat::Text;
    if (s == "csv") return netfc::ReportFormat::Csv;
    if (s == "json") return netfc::ReportFormat::Json;
    throw netfc::error("unknown format: " + s);
}

int run_compare(const CompareArgs& a) {
    const auto returns = load_returns(a.returns_path, a.counts_path, a.shift, nullptr);
    netfc::BacktestConfig cfg;
    cfg.window = a.window;
    cfg.horizon = a.horizon;
    cfg.total_ahead = a.total_ahead;
    std::vector<netfc::ArmaOrder> orders;
    for (const auto& o : split(a.orders, ';')) orders.push_back(parse_order(o));
    const auto cmp = netfc::compare_orders(returns, cfg, orders);

    std::vector<netfc::ReportRow> rows;
    for (const auto& [order, value] : cmp.entries) rows.push_back({a.dataset, order, value});
    const auto rendered = netfc::render_report(rows, parse_format(a.format));
    if (a.output.empty()) {
        std::cout << rendered;
    } else {
        write_file(a.output, rendered);
        ManifestBuilder m{"compare", {a.returns_path.empty() ? a.counts_path : a.returns_path}};
        m.parameters = {{"orders", a.orders},   {"window", a.window},
                        {"horizon", a.horizon}, {"total_ahead", a.total_ahead},
                        {"shift", a.shift},     {"dataset", a.dataset},
                        {"format", a.format}};
        m.outputs = {a.output};
        m.write();
    }
    return 0;
}

struct SimulateArgs {
    std::string kind = "seasonal";
    std::size_t bins = 600;
    double base_rate = 100.0;
    double amplitude = 50.0;
    std::size_t period = 20;
    std::size_t smoothing = 10;
    double noise_sd = 5.0;
    std::uint64_t seed = 0;
    double step_seconds = 30.0;
    std::string output;
};

int run_simulate(const SimulateArgs& a) {
    netfc::SynthParams params;
    params.n_bins = a.bins;
    params.base_rate = a.base_rate;
    params.amplitude = a.amplitude;
    params.period_steps = a.period;
    params.smoothing = a.smoothing;
    params.noise_sd = a.noise_sd;
    params.seed = a.seed;
    params.step_seconds = a.step_seconds;

    netfc::BinnedSeries series;
    if (a.kind == "seasonal") series = netfc::gen_seasonal(params);
    else if (a.kind == "cyclical") series = netfc::gen_cyclical(params);
    else throw netfc::error("unknown kind: " + a.kind);

    std::ostringstream out;
    netfc::write_binned_csv(out, series);
    write_file(a.output, out.str());

    ManifestBuilder m{"simulate", {}};
    m.parameters = {{"kind", a.kind},           {"bins", a.bins},
                    {"base_rate", a.base_rate}, {"amplitude", a.amplitude},
                    {"period", a.period},       {"smoothing", a.smoothing},
                    {"noise_sd", a.noise_sd},   {"seed", a.seed},
                    {"step_seconds", a.step_seconds}};
    m.outputs = {a.output};
    m.write();
    return 0;
}

struct ReportArgs {
    std::string input;
    std::string format = "text";
    std::string output;
};

int run_report(const ReportArgs& a) {
    auto f = open_input(a.input);
    auto rows_csv = netfc::csv::read_all(f);
    std::vector<netfc::ReportRow> rows;
    bool first = true;
    for (const auto& r : rows_csv) {
        double p;
        if (first) {
            first = false;
            if (r.fields.size() < 4 || !netfc::detail::parse_double(r.fields[1], p)) continue;
        }
        if (r.fields.size() < 4) throw netfc::malformed_row(r.line_no);
        double q, value;
        if (!netfc::detail::parse_double(r.fields[1], p) ||
            !netfc::detail::parse_double(r.fields[2], q) ||
            !netfc::detail::parse_double(r.fields[3], value))
            throw netfc::malformed_row(r.line_no);
        rows.push_back({r.fields[0],
                        {static_cast<std::size_t>(p), static_cast<std::size_t>(q)},
                        value});
    }
    if (rows.empty()) throw netfc::empty_input();
    const auto rendered = netfc::render_report(rows, parse_format(a.format));
    if (a.output.empty()) {
        std::cout << rendered;
    } else {
        write_file(a.output, rendered);
        ManifestBuilder m{"report", {a.input}};
        m.parameters = {{"format", a.format}};
        m.outputs = {a.output};
        m.write();
    }
    return 0;
}

void add_series_inputs(CLI::App* cmd, std::string& returns_path, std::string& counts_path,
                       std::uint64_t& shift) {
    auto* r = cmd->add_option("--returns", returns_path, "log-return CSV input (t,log_return)")
                  ->envname("TF_RETURNS");
    auto* c = cmd->add_option("--counts", counts_path,
                              "binned-count CSV input (bin_index,start_seconds,count)")
                  ->envname("TF_COUNTS");
    r->excludes(c);
    cmd->add_option("--shift", shift, "count shift applied before the log ratio")
        ->envname("TF_SHIFT");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"BitTorrent-style traffic series forecasting pipeline"};
    app.require_subcommand(1);

    IngestArgs ingest;
    auto* cmd_ingest = app.add_subcommand("ingest", "parse capture CSVs into binned packet counts");
    cmd_ingest->add_option("inputs", ingest.inputs, "capture CSV files, chronological order")
        ->required();
    cmd_ingest->add_option("--step-size", ingest.step_seconds, "bin width in seconds")
        ->envname("TF_STEP_SIZE");
    cmd_ingest->add_option("--protocols", ingest.protocols, "comma-separated protocol allowlist")
        ->envname("TF_PROTOCOLS");
    cmd_ingest
        ->add_option("--per-file-offset", ingest.per_file_offset,
                     "seconds added per file index when each file restarts its clock")
        ->envname("TF_PER_FILE_OFFSET");
    cmd_ingest->add_option("-o,--output", ingest.output, "binned-count CSV output")
        ->required()
        ->envname("TF_OUTPUT");

    TransformArgs transform;
    auto* cmd_transform = app.add_subcommand("transform", "binned counts to log returns");
    cmd_transform->add_option("-i,--input", transform.input, "binned-count CSV")
        ->required()
        ->envname("TF_INPUT");
    cmd_transform->add_option("--shift", transform.shift, "count shift before the log ratio")
        ->envname("TF_SHIFT");
    cmd_transform->add_option("-o,--output", transform.output, "log-return CSV output")
        ->required()
        ->envname("TF_OUTPUT");
    cmd_transform->add_option("--acf-output", transform.acf_output, "also write the sample ACF here")
        ->envname("TF_ACF_OUTPUT");
    cmd_transform->add_option("--max-lag", transform.max_lag, "highest ACF lag")
        ->envname("TF_MAX_LAG");

    ClassifyArgs classify;
    auto* cmd_classify = app.add_subcommand("classify", "label a series seasonal or cyclical");
    cmd_classify->add_option("-i,--input", classify.input, "binned-count CSV")
        ->required()
        ->envname("TF_INPUT");
    cmd_classify->add_option("-o,--output", classify.output, "label JSON output")
        ->envname("TF_OUTPUT");

    FitArgs fit;
    auto* cmd_fit = app.add_subcommand("fit", "estimate ARMA coefficients");
    add_series_inputs(cmd_fit, fit.returns_path, fit.counts_path, fit.shift);
    cmd_fit->add_option("--order", fit.order, "p,q")->envname("TF_ORDER");
    cmd_fit->add_flag("--no-refine", fit.no_refine, "skip Gauss-Newton refinement")
        ->envname("TF_NO_REFINE");
    cmd_fit->add_option("--long-ar", fit.long_ar, "stage-1 long AR order (0 = automatic)")
        ->envname("TF_LONG_AR");
    cmd_fit->add_option("-o,--output", fit.output, "model JSON output")
        ->required()
        ->envname("TF_OUTPUT");

    ForecastArgs fc;
    auto* cmd_forecast = app.add_subcommand("forecast", "forecast h steps from a fitted model");
    add_series_inputs(cmd_forecast, fc.returns_path, fc.counts_path, fc.shift);
    cmd_forecast->add_option("--model", fc.model_path, "model JSON")->required()->envname("TF_MODEL");
    cmd_forecast->add_option("--horizon", fc.horizon, "steps ahead")->envname("TF_HORIZON");
    cmd_forecast->add_option("-o,--output", fc.output, "forecast CSV output")
        ->required()
        ->envname("TF_OUTPUT");

    BacktestArgs bt;
    auto* cmd_backtest = app.add_subcommand("backtest", "rolling-window forecast evaluation");
    add_series_inputs(cmd_backtest, bt.returns_path, bt.counts_path, bt.shift);
    cmd_backtest->add_option("--order", bt.order, "p,q or 'auto' (classify-driven, needs --counts)")
        ->envname("TF_ORDER");
    cmd_backtest->add_option("--window", bt.window, "fit window size in steps")->envname("TF_WINDOW");
    cmd_backtest->add_option("--horizon", bt.horizon, "steps per forecast round")
        ->envname("TF_HORIZON");
    cmd_backtest->add_option("--total-ahead", bt.total_ahead, "target steps per evaluation block")
        ->envname("TF_TOTAL_AHEAD");
    cmd_backtest->add_flag("--no-refit", bt.no_refit, "fit once and reuse across origins")
        ->envname("TF_NO_REFIT");
    cmd_backtest->add_option("--window-sweep", bt.window_sweep, "comma-separated window sizes")
        ->envname("TF_WINDOW_SWEEP");
    cmd_backtest->add_option("-o,--output", bt.output, "result JSON output")
        ->required()
        ->envname("TF_OUTPUT");
    cmd_backtest->add_option("--csv", bt.csv_output, "origin,offset,actual,predicted CSV output")
        ->envname("TF_CSV");
    cmd_backtest
        ->add_option("--plot", bt.plot_base, "plot base path; writes <base>.csv and <base>.svg")
        ->envname("TF_PLOT");

    CompareArgs cmp;
    auto* cmd_compare = app.add_subcommand("compare", "backtest several orders and rank by MSE");
    add_series_inputs(cmd_compare, cmp.returns_path, cmp.counts_path, cmp.shift);
    cmd_compare->add_option("--orders", cmp.orders, "semicolon-separated p,q pairs")
        ->envname("TF_ORDERS");
    cmd_compare->add_option("--window", cmp.window, "fit window size")->envname("TF_WINDOW");
    cmd_compare->add_option("--horizon", cmp.horizon, "steps per round")->envname("TF_HORIZON");
    cmd_compare->add_option("--total-ahead", cmp.total_ahead, "target steps per block")
        ->envname("TF_TOTAL_AHEAD");
    cmd_compare->add_option("--dataset", cmp.dataset, "dataset name in the report")
        ->envname("TF_DATASET");
    cmd_compare->add_option("--format", cmp.format, "text, csv or json")->envname("TF_FORMAT");
    cmd_compare->add_option("-o,--output", cmp.output, "report output (stdout when omitted)")
        ->envname("TF_OUTPUT");

    SimulateArgs sim;
    auto* cmd_simulate = app.add_subcommand("simulate", "generate synthetic traffic counts");
    cmd_simulate->add_option("--kind", sim.kind, "seasonal or cyclical")->envname("TF_KIND");
    cmd_simulate->add_option("--bins", sim.bins, "number of bins")->envname("TF_BINS");
    cmd_simulate->add_option("--base-rate", sim.base_rate, "mean packets per bin")
        ->envname("TF_BASE_RATE");
    cmd_simulate->add_option("--amplitude", sim.amplitude, "seasonal amplitude")
        ->envname("TF_AMPLITUDE");
    cmd_simulate->add_option("--period", sim.period, "seasonal period in steps")
        ->envname("TF_PERIOD");
    cmd_simulate->add_option("--smoothing", sim.smoothing, "cyclical moving-average width")
        ->envname("TF_SMOOTHING");
    cmd_simulate->add_option("--noise-sd", sim.noise_sd, "noise standard deviation")
        ->envname("TF_NOISE_SD");
    cmd_simulate->add_option("--seed", sim.seed, "generator seed")->envname("TF_SEED");
    cmd_simulate->add_option("--step-size", sim.step_seconds, "bin width in seconds")
        ->envname("TF_STEP_SIZE");
    cmd_simulate->add_option("-o,--output", sim.output, "binned-count CSV output")
        ->required()
        ->envname("TF_OUTPUT");

    ReportArgs rep;
    auto* cmd_report = app.add_subcommand("report", "render a dataset,p,q,mse table");
    cmd_report->add_option("-i,--input", rep.input, "CSV with dataset,p,q,mse rows")
        ->required()
        ->envname("TF_INPUT");
    cmd_report->add_option("--format", rep.format, "text, csv or json")->envname("TF_FORMAT");
    cmd_report->add_option("-o,--output", rep.output, "report output (stdout when omitted)")
        ->envname("TF_OUTPUT");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*cmd_ingest) return run_ingest(ingest);
        if (*cmd_transform) return run_transform(transform);
        if (*cmd_classify) return run_classify(classify);
        if (*cmd_fit) return run_fit(fit);
        if (*cmd_forecast) return run_forecast(fc);
        if (*cmd_backtest) return run_backtest(bt);
        if (*cmd_compare) return run_compare(cmp);
        if (*cmd_simulate) return run_simulate(sim);
        if (*cmd_report) return run_report(rep);
    } catch (const netfc::io_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const netfc::fit_failure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const netfc::zero_variance& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const netfc::singular_design& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const netfc::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
