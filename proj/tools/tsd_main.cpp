// tsd: decomposition, phase-state and grey-forecast pipeline over CSV series.
// Every subcommand reads one value column, writes CSV/JSON artifacts into the
// output directory, and is byte-deterministic for fixed inputs and seed.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>

#include "tsd/backtest.hpp"
#include "tsd/config.hpp"
#include "tsd/emd.hpp"
#include "tsd/error.hpp"
#include "tsd/grey.hpp"
#include "tsd/io.hpp"
#include "tsd/itd.hpp"
#include "tsd/physiology.hpp"
#include "tsd/series.hpp"
#include "tsd/skeleton.hpp"

namespace {

struct CliArgs {
    std::string input;
    std::string output_dir = "out";
    std::string column = "0";
    std::string config_path;
    double alpha = 0.5;
    double noise_std = 0.0;
    int rounds = 1;
    std::uint64_t seed = 1;
    double sd_threshold = 0.2;
    int max_sifts = 10;
    int max_imfs = 10;
    long ext_len = 10;
    long gm_window = 10;
    std::string horizons = "1,2,3,4,5";
    long start = 0;
    long days = 0;
    long lookback = 256;
    int levels = 5;
    bool plot = false;
};

void add_common_options(CLI::App* cmd, CliArgs& args) {
    cmd->add_option("--input", args.input, "input CSV file")->required();
    cmd->add_option("--output-dir", args.output_dir, "directory for artifacts");
    cmd->add_option("--column", args.column, "value column (index or header name)");
    cmd->add_option("--config", args.config_path, "key=value config file (flags override)");
    cmd->add_option("--alpha", args.alpha, "ITD baseline parameter in (0,1)");
    cmd->add_option("--noise-std", args.noise_std, "EEMD noise sd relative to the signal sd");
    cmd->add_option("--rounds", args.rounds, "EEMD ensemble size");
    cmd->add_option("--seed", args.seed, "EEMD seed (no wall-clock seeding)");
    cmd->add_option("--sd-threshold", args.sd_threshold, "sift stop threshold");
    cmd->add_option("--max-sifts", args.max_sifts, "sift passes per IMF");
    cmd->add_option("--max-imfs", args.max_imfs, "IMF cap");
    cmd->add_option("--ext-len", args.ext_len, "GM(1,1) end extension per side");
    cmd->add_option("--gm-window", args.gm_window, "GM(1,1) fitting window");
    cmd->add_option("--horizons", args.horizons, "comma-separated forecast horizons");
    cmd->add_option("--start", args.start, "first walk-forward day");
    cmd->add_option("--days", args.days, "walk-forward day count");
    cmd->add_option("--lookback", args.lookback, "trailing samples per forecast (0 = all)");
    cmd->add_option("--levels", args.levels, "ITD level cap");
    cmd->add_flag("--plot", args.plot, "also write SVG plots");
}

tsd::PipelineConfig build_config(const CLI::App* cmd, const CliArgs& args) {
    tsd::PipelineConfig cfg;
    if (!args.config_path.empty()) cfg = tsd::parse_config_file(args.config_path);
    auto override_if = [&](const char* flag, auto apply) {
        if (cmd->count(flag) > 0) apply();
    };
    override_if("--alpha", [&] { cfg.alpha = args.alpha; });
    override_if("--noise-std", [&] { cfg.noise_std = args.noise_std; });
    override_if("--rounds", [&] { cfg.rounds = args.rounds; });
    override_if("--seed", [&] { cfg.seed = args.seed; });
    override_if("--sd-threshold", [&] { cfg.sd_threshold = args.sd_threshold; });
    override_if("--max-sifts", [&] { cfg.max_sifts = args.max_sifts; });
    override_if("--max-imfs", [&] { cfg.max_imfs = args.max_imfs; });
    override_if("--ext-len", [&] { cfg.ext_len = args.ext_len; });
    override_if("--gm-window", [&] { cfg.gm_window = args.gm_window; });
    override_if("--horizons", [&] { tsd::apply_config_entry(cfg, "horizons", args.horizons); });
    override_if("--lookback", [&] { cfg.lookback = args.lookback; });
    override_if("--levels", [&] { cfg.levels = args.levels; });
    return cfg;
}

std::string out_path(const CliArgs& args, const std::string& name) {
    std::filesystem::create_directories(args.output_dir);
    return (std::filesystem::path(args.output_dir) / name).string();
}

tsd::SiftConfig sift_config(const tsd::PipelineConfig& cfg) {
    tsd::SiftConfig s;
    s.sd_threshold = cfg.sd_threshold;
    s.max_sifts = cfg.max_sifts;
    s.max_imfs = cfg.max_imfs;
    s.extension_len = static_cast<int>(cfg.ext_len);
    s.gm_window = static_cast<int>(cfg.gm_window);
    return s;
}

void run_decompose_emd(const CliArgs& args, const tsd::PipelineConfig& cfg) {
    const tsd::TimeSeries series = tsd::load_csv(args.input, args.column);
    const tsd::ImfSet set =
        tsd::eemd(series.values, cfg.noise_std, cfg.rounds, cfg.seed, sift_config(cfg));
    std::vector<std::string> names;
    std::vector<const tsd::Series*> cols;
    for (std::size_t i = 0; i < set.imfs.size(); ++i) {
        names.push_back("imf_" + std::to_string(i + 1));
        cols.push_back(&set.imfs[i]);
    }
    names.push_back("residue");
    cols.push_back(&set.residue);
    tsd::write_csv(out_path(args, "imfs.csv"), names, cols);
    tsd::write_text(out_path(args, "imfs.json"), tsd::to_json(set) + "\n");
}

void run_decompose_itd(const CliArgs& args, const tsd::PipelineConfig& cfg) {
    const tsd::TimeSeries series = tsd::load_csv(args.input, args.column);
    const tsd::ItdSet set = tsd::itd(series.values, cfg.levels, cfg.alpha);
    std::vector<std::string> names;
    std::vector<const tsd::Series*> cols;
    for (std::size_t i = 0; i < set.levels.size(); ++i) {
        names.push_back("itd_" + std::to_string(i + 1));
        cols.push_back(&set.levels[i]);
    }
    names.push_back("trend");
    cols.push_back(&set.trend);
    tsd::write_csv(out_path(args, "itd.csv"), names, cols);
    tsd::write_text(out_path(args, "itd.json"), tsd::to_json(set) + "\n");
}

tsd::Skeleton chain_of(const CliArgs& args, const tsd::PipelineConfig& cfg) {
    const tsd::TimeSeries series = tsd::load_csv(args.input, args.column);
    return tsd::itd_imf_chain1(series.values, cfg.chain_config());
}

void run_chain(const CliArgs& args, const tsd::PipelineConfig& cfg) {
    const tsd::Skeleton skel = chain_of(args, cfg);
    tsd::write_csv(out_path(args, "chain.csv"), {"chain"}, {&skel.chain});
    tsd::write_text(out_path(args, "chain.json"), tsd::skeleton_to_json(skel) + "\n");
    tsd::write_text(out_path(args, "chain_extrema.json"), tsd::to_json(skel.extrema) + "\n");
}

void run_hilbert(const CliArgs& args, const tsd::PipelineConfig&) {
    const tsd::TimeSeries series = tsd::load_csv(args.input, args.column);
    const tsd::AnalyticSignal a = tsd::analytic_signal(series.values);
    tsd::write_csv(out_path(args, "hilbert.csv"), {"real", "imag", "amplitude", "phase"},
                   {&a.real_part, &a.imag_part, &a.amplitude, &a.phase});
    if (args.plot) tsd::write_text(out_path(args, "hilbert.svg"), tsd::analytic_svg(a));
}

void run_cycles(const CliArgs& args, const tsd::PipelineConfig& cfg) {
    const tsd::Skeleton skel = chain_of(args, cfg);
    const auto cycles = tsd::extract_cycles(skel);
    tsd::write_cycles_csv(out_path(args, "cycles.csv"), cycles);
}

void run_corr(const CliArgs& args, const tsd::PipelineConfig& cfg) {
    const tsd::Skeleton skel = chain_of(args, cfg);
    const auto cycles = tsd::extract_cycles(skel);
    const auto corr = tsd::state_time_correlation(cycles);
    tsd::write_text(out_path(args, "corr.json"), tsd::to_json(corr) + "\n");
}

void run_grey_fit(const CliArgs& args, const tsd::PipelineConfig& cfg) {
    const tsd::TimeSeries series = tsd::load_csv(args.input, args.column);
    const Eigen::Index w = std::min<Eigen::Index>(cfg.gm_window, series.size());
    const tsd::GreyModel model = tsd::fit_gm11(series.values.tail(w));
    tsd::write_text(out_path(args, "gm.json"), tsd::to_json(model) + "\n");
    const tsd::Series deriv =
        tsd::improved_gm11_derivatives(model.window + model.shift, model.a, model.b);
    tsd::write_csv(out_path(args, "gm_derivatives.csv"), {"derivative"}, {&deriv});
}

void run_forecast(const CliArgs& args, const tsd::PipelineConfig& cfg) {
    const tsd::TimeSeries series = tsd::load_csv(args.input, args.column);
    std::string body = "[\n";
    for (std::size_t i = 0; i < cfg.horizons.size(); ++i) {
        const tsd::DirectionForecast f = tsd::directional_forecast(series, cfg.horizons[i], cfg);
        body += tsd::to_json(f);
        body += i + 1 < cfg.horizons.size() ? ",\n" : "\n";
    }
    body += "]\n";
    tsd::write_text(out_path(args, "forecast.json"), body);
}

void run_backtest_cmd(const CliArgs& args, const tsd::PipelineConfig& cfg) {
    const tsd::TimeSeries series = tsd::load_csv(args.input, args.column);
    const tsd::BacktestReport report =
        tsd::run_backtest(series, args.start, args.days, cfg.horizons, cfg);
    tsd::write_text(out_path(args, "report.json"), tsd::to_json(report) + "\n");
    tsd::write_trades_csv(out_path(args, "trades.csv"), report.trades);
    if (args.plot) tsd::write_text(out_path(args, "equity.svg"), tsd::equity_svg(report));
    std::printf("average accuracy at %.2f%% with standard deviation (SD) at %.9f\n",
                report.accuracy * 100.0, report.accuracy_sd);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"time-series decomposition, phase states and directional forecasting"};
    app.require_subcommand(1);

    CliArgs args;
    const struct {
        const char* name;
        const char* help;
        void (*run)(const CliArgs&, const tsd::PipelineConfig&);
    } commands[] = {
        {"decompose-emd", "ensemble EMD of the input column", run_decompose_emd},
        {"decompose-itd", "intrinsic time-scale decomposition", run_decompose_itd},
        {"chain", "first ensemble-EMD IMF of the first ITD rotation", run_chain},
        {"hilbert", "analytic signal of the input column", run_hilbert},
        {"cycles", "cycle records of the chain", run_cycles},
        {"corr", "state/time correlation matrix of the chain cycles", run_corr},
        {"grey-fit", "GM(1,1) fit on the trailing window", run_grey_fit},
        {"forecast", "directional forecast from the chain endpoint", run_forecast},
        {"backtest", "walk-forward directional evaluation", run_backtest_cmd},
    };
    for (const auto& c : commands) add_common_options(app.add_subcommand(c.name, c.help), args);

    CLI11_PARSE(app, argc, argv);

    try {
        for (const auto& c : commands) {
            const CLI::App* sub = app.get_subcommand(c.name);
            if (sub->parsed()) {
                c.run(args, build_config(sub, args));
                return 0;
            }
        }
        std::cerr << "error: cli: no subcommand\n";
        return 1;
    } catch (const tsd::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << "\n";
        return 2;
    }
}
