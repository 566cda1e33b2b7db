// Acceptance suite: one pass/fail line per criterion. Usage:
//   acceptance <path-to-cli-binary> <data-dir>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "netfc/arma.hpp"
#include "netfc/backtest.hpp"
#include "netfc/classify.hpp"
#include "netfc/ingest.hpp"
#include "netfc/report.hpp"
#include "netfc/series.hpp"
#include "netfc/synth.hpp"

namespace fs = std::filesystem;
using namespace netfc;
using clock_type = std::chrono::steady_clock;

namespace {

int failures = 0;

void report_line(const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << ": " << name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << '\n';
    if (!ok) ++failures;
}

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

ArmaModel generator(std::vector<double> theta, std::vector<double> phi) {
    ArmaModel m;
    m.p = theta.size();
    m.q = phi.size();
    m.theta = std::move(theta);
    m.phi = std::move(phi);
    m.sigma2 = 1.0;
    return m;
}

// ---- criteria -----------------------------------------------------------

void parameter_recovery() {
    const auto t0 = clock_type::now();
    auto run = [](const ArmaModel& gen) {
        int hits = 0;
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            const auto x = simulate(gen, 50000, seed);
            const auto [model, res] = fit(x, gen.p, gen.q);
            bool ok = true;
            for (std::size_t i = 0; i < gen.p; ++i)
                ok = ok && std::abs(model.theta[i] - gen.theta[i]) <= 0.1;
            for (std::size_t j = 0; j < gen.q; ++j)
                ok = ok && std::abs(model.phi[j] - gen.phi[j]) <= 0.1;
            if (ok) ++hits;
        }
        return hits;
    };
    const int arma_hits = run(generator({0.5, -0.3}, {0.4}));
    const int ar_hits = run(generator({0.4, -0.2, 0.1}, {}));
    const double elapsed = seconds_since(t0);
    report_line("parameter recovery",
                arma_hits >= 18 && ar_hits >= 18 && elapsed < 10.0,
                "ARMA(2,1) " + std::to_string(arma_hits) + "/20, AR(3) " +
                    std::to_string(ar_hits) + "/20, " + format_sig6(elapsed) + "s");
}

void forecast_oracle() {
    bool ok = true;
    // AR(1) theta=0.5 from x_t = 2: hand recursion 1, 0.5, 0.25
    {
        ResidualSeries res;
        res.values = {0.0, 0.0};
        const auto f = forecast(generator({0.5}, {}), {1.0, 2.0}, res, 3);
        const double expect[] = {1.0, 0.5, 0.25};
        for (int k = 0; k < 3; ++k) ok = ok && std::abs(f[k] - expect[k]) <= 1e-12;
    }
    // MA(1) phi=0.7, last residual 1: hand recursion 0.7, 0
    {
        ResidualSeries res;
        res.values = {0.2, 1.0};
        const auto f = forecast(generator({}, {0.7}), {0.5, 0.9}, res, 2);
        ok = ok && std::abs(f[0] - 0.7) <= 1e-12 && std::abs(f[1]) <= 1e-12;
    }
    report_line("forecast recursion oracle", ok);
}

void noiseless_backtest() {
    ReturnSeries returns;
    returns.values = {1.0};
    while (returns.values.size() < 40) returns.values.push_back(0.5 * returns.values.back());
    BacktestConfig cfg;
    cfg.window = 20;
    cfg.horizon = 5;
    cfg.total_ahead = 15;
    cfg.order = {1, 0};
    const auto res = rolling_backtest(returns, cfg);
    report_line("noiseless end-to-end backtest", res.mse <= 1e-18, "mse " + format_sig6(res.mse));
}

void transform_round_trip() {
    const auto t0 = clock_type::now();
    std::mt19937_64 rng(1234);
    bool ok = true;
    for (int rep = 0; rep < 1000 && ok; ++rep) {
        const std::size_t len = 2 + rng() % 499;
        BinnedSeries s;
        s.counts.reserve(len);
        for (std::size_t i = 0; i < len; ++i) s.counts.push_back(rng() % 1000001);
        const std::uint64_t shift = 1 + rng() % 4;
        const auto rec = invert_log_return(log_return(s, shift));
        for (std::size_t i = 0; i < len; ++i) {
            const double expect = static_cast<double>(s.counts[i]);
            if (std::abs(rec[i] - expect) > 1e-9 * std::max(1.0, expect)) ok = false;
        }
    }
    const double elapsed = seconds_since(t0);
    report_line("transform round trip", ok && elapsed < 5.0, format_sig6(elapsed) + "s");
}

void conservation() {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(0, 1000);
    bool ok = true;
    for (int rep = 0; rep < 100 && ok; ++rep) {
        std::vector<PacketRecord> recs;
        const std::size_t n = 1 + rng() % 500;
        for (std::size_t i = 0; i < n; ++i) recs.push_back({i, u(rng), "a", "b", "TCP", ""});
        for (double step : {1.0, 30.0, 60.0}) {
            const auto binned = bin_counts(recs, step);
            std::uint64_t total = 0;
            for (auto c : binned.counts) total += c;
            if (total != recs.size()) ok = false;
        }
    }
    report_line("bin conservation", ok);
}

void classifier_accuracy() {
    const auto t0 = clock_type::now();
    int seasonal_hits = 0, cyclical_hits = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        SynthParams sp;
        sp.n_bins = 600;
        sp.base_rate = 100;
        sp.amplitude = 50;
        sp.period_steps = 20;
        sp.noise_sd = 5;
        sp.seed = seed;
        if (classify_pattern(gen_seasonal(sp)).kind == PatternKind::Seasonal) ++seasonal_hits;

        SynthParams cp;
        cp.n_bins = 600;
        cp.base_rate = 100;
        cp.smoothing = 10;
        cp.noise_sd = 3;
        cp.seed = seed;
        if (classify_pattern(gen_cyclical(cp)).kind == PatternKind::Cyclical) ++cyclical_hits;
    }
    const double elapsed = seconds_since(t0);
    report_line("classifier accuracy",
                seasonal_hits >= 95 && cyclical_hits >= 90 && elapsed < 30.0,
                "seasonal " + std::to_string(seasonal_hits) + "/100, cyclical " +
                    std::to_string(cyclical_hits) + "/100, " + format_sig6(elapsed) + "s");
}

void direction_of_effect() {
    const auto t0 = clock_type::now();
    BacktestConfig cfg;
    cfg.window = 120;
    cfg.horizon = 5;
    cfg.total_ahead = 15;
    const std::vector<ArmaOrder> orders{{2, 1}, {3, 0}};

    int seasonal_wins = 0, cyclical_wins = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        SynthParams sp;
        sp.n_bins = 600;
        sp.base_rate = 100;
        sp.amplitude = 50;
        sp.period_steps = 20;
        sp.noise_sd = 5;
        sp.seed = seed;
        const auto sret = log_return(gen_seasonal(sp));
        const auto scmp = compare_orders(sret, cfg, orders);
        if (scmp.entries[scmp.best_index].first == ArmaOrder{2, 1}) ++seasonal_wins;

        SynthParams cp;
        cp.n_bins = 600;
        cp.base_rate = 100;
        cp.smoothing = 10;
        cp.noise_sd = 3;
        cp.seed = seed;
        const auto cret = log_return(gen_cyclical(cp));
        const auto ccmp = compare_orders(cret, cfg, orders);
        if (ccmp.entries[ccmp.best_index].first == ArmaOrder{3, 0}) ++cyclical_wins;
    }
    const double elapsed = seconds_since(t0);
    report_line("direction of effect",
                seasonal_wins >= 30 && cyclical_wins >= 30 && elapsed < 120.0,
                "seasonal ARMA(2,1) wins " + std::to_string(seasonal_wins) +
                    "/50, cyclical ARMA(3,0) wins " + std::to_string(cyclical_wins) + "/50, " +
                    format_sig6(elapsed) + "s");
}

void mse_oracle() {
    std::mt19937_64 rng(55);
    std::normal_distribution<double> g(0, 2);
    bool ok = true;
    for (int rep = 0; rep < 1000 && ok; ++rep) {
        const std::size_t len = 1 + rng() % 50;
        std::vector<double> a(len), p(len);
        for (auto& v : a) v = g(rng);
        for (auto& v : p) v = g(rng);
        // naive loop oracle
        double s = 0;
        for (std::size_t i = 0; i < len; ++i) s += (a[i] - p[i]) * (a[i] - p[i]);
        const double expect = s / static_cast<double>(len);
        if (std::abs(mse(a, p) - expect) > 1e-12) ok = false;
    }
    report_line("mse oracle equivalence", ok);
}

void report_fixture(const fs::path& data_dir) {
    const std::vector<ReportRow> rows{{"A", {2, 1}, 0.083902}, {"A", {3, 0}, 0.081404}};
    const auto rendered = render_report(rows, ReportFormat::Text);
    std::ifstream f(data_dir / "report_golden.txt", std::ios::binary);
    std::ostringstream golden;
    golden << f.rdbuf();
    const bool ok = f.good() && rendered == golden.str();
    report_line("report fixture", ok);
}

// ---- CLI determinism ----------------------------------------------------

int shell(const std::string& cmd) { return WEXITSTATUS(std::system(cmd.c_str())); }

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream out;
    out << f.rdbuf();
    return out.str();
}

void cli_determinism(const std::string& cli) {
    const fs::path dir = fs::temp_directory_path() / "netfc_acceptance";
    fs::remove_all(dir);
    fs::create_directories(dir);
    const auto at = [&](const std::string& name) { return (dir / name).string(); };

    std::ofstream cap(dir / "cap.csv");
    cap << "No.,Time,Source,Destination,Protocol,Info\n";
    for (int i = 0; i < 400; ++i)
        cap << (i + 1) << ',' << i * 0.9 << ",10.0.0.2,10.0.0.9," << (i % 2 ? "TCP" : "UDP")
            << ",x\n";
    cap.close();
    std::ofstream rows(dir / "rows.csv");
    rows << "dataset,p,q,mse\nA,2,1,0.083902\nA,3,0,0.081404\n";
    rows.close();

    const std::vector<std::string> commands{
        "simulate --kind seasonal --bins 600 --period 20 --amplitude 50 --base-rate 100 "
        "--noise-sd 5 --seed 3 -o " + at("sim.csv"),
        "ingest " + at("cap.csv") + " --step-size 30 -o " + at("binned.csv"),
        "transform -i " + at("sim.csv") + " --acf-output " + at("acf.csv") + " -o " +
            at("returns.csv"),
        "classify -i " + at("sim.csv") + " -o " + at("label.json"),
        "fit --returns " + at("returns.csv") + " --order 2,1 -o " + at("model.json"),
        "forecast --returns " + at("returns.csv") + " --model " + at("model.json") +
            " --horizon 5 -o " + at("forecast.csv"),
        "backtest --counts " + at("sim.csv") + " --order auto --window 120 -o " +
            at("result.json") + " --csv " + at("result.csv") + " --plot " + at("plot"),
        "compare --counts " + at("sim.csv") + " --orders \"2,1;3,0\" --window 120 -o " +
            at("cmp.txt"),
        "report -i " + at("rows.csv") + " --format json -o " + at("rep.json"),
    };
    const std::vector<std::string> outputs{
        "sim.csv",      "sim.csv.manifest.json",   "binned.csv",  "binned.csv.manifest.json",
        "returns.csv",  "acf.csv",                 "label.json",  "model.json",
        "forecast.csv", "result.json",             "result.csv",  "plot.csv",
        "plot.svg",     "cmp.txt",                 "rep.json",    "rep.json.manifest.json",
        "result.json.manifest.json"};

    bool ok = true;
    std::string detail;
    auto run_all = [&] {
        for (const auto& c : commands) {
            if (shell(cli + " " + c + " >/dev/null 2>&1") != 0) {
                ok = false;
                detail = "command failed: " + c.substr(0, c.find(' '));
                return;
            }
        }
    };
    run_all();
    std::map<std::string, std::string> first;
    if (ok)
        for (const auto& o : outputs) first[o] = slurp(dir / o);
    if (ok) run_all();
    if (ok) {
        for (const auto& o : outputs) {
            if (slurp(dir / o) != first[o]) {
                ok = false;
                detail = "output differs: " + o;
                break;
            }
        }
    }
    fs::remove_all(dir);
    report_line("cli determinism", ok, detail);
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: acceptance <cli-binary> <data-dir>\n";
        return 2;
    }
    parameter_recovery();
    forecast_oracle();
    noiseless_backtest();
    transform_round_trip();
    conservation();
    classifier_accuracy();
    direction_of_effect();
    mse_oracle();
    report_fixture(argv[2]);
    cli_determinism(argv[1]);
    if (failures) std::cout << failures << " criterion(s) failed\n";
    return failures == 0 ? 0 : 1;
}
