#include "tsd/backtest.hpp"

#include <algorithm>
#include <cmath>
#include <future>

#include "tsd/error.hpp"
#include "tsd/random.hpp"

namespace tsd {

ChainConfig PipelineConfig::chain_config() const {
    ChainConfig c;
    c.alpha = alpha;
    c.noise_std = noise_std;
    c.rounds = rounds;
    c.seed = seed;
    c.sift.sd_threshold = sd_threshold;
    c.sift.max_sifts = max_sifts;
    c.sift.max_imfs = max_imfs;
    c.ext_len = ext_len;
    c.gm_window = gm_window;
    return c;
}

bool detect_entanglement(const Skeleton& skel) {
    const auto merged = skel.extrema.merged();
    if (merged.size() < 2) throw Error("backtest", "need at least 2 extrema for loopback detection");

    // the last extremum is not yet confirmed by a successor; anchor at the
    // one before it and look for values on both sides of its level
    const auto& anchor = merged[merged.size() - 2];
    const double level = anchor.value;
    bool above = false;
    bool below = false;
    for (Eigen::Index i = anchor.pos + 1; i < skel.chain.size(); ++i) {
        if (skel.chain[i] > level) above = true;
        if (skel.chain[i] < level) below = true;
    }
    return above && below;
}

DirectionForecast directional_forecast(const TimeSeries& series, int horizon,
                                       const PipelineConfig& cfg) {
    if (horizon < 1) throw Error("backtest", "horizon must be >= 1");
    if (series.size() < 64) throw Error("backtest", "series too short for the pipeline (need >= 64)");

    const Skeleton skel = itd_imf_chain1(series.values, cfg.chain_config());
    const EndpointState end = endpoint_state(skel);

    DirectionForecast out;
    out.horizon = horizon;
    out.endpoint = end;
    // crest and fall resolve down (a maximum opens a short), trough and rise up
    out.direction = (end.state == Phase::crest || end.state == Phase::fall) ? Direction::down
                                                                            : Direction::up;
    out.entangled = skel.extrema.maxima.size() + skel.extrema.minima.size() >= 2
                        ? detect_entanglement(skel)
                        : false;
    return out;
}

BacktestReport run_backtest(const TimeSeries& series, Eigen::Index start, Eigen::Index n_days,
                            const std::vector<int>& horizons, const PipelineConfig& cfg) {
    if (horizons.empty()) throw Error("backtest", "no horizons given");
    const int max_h = *std::max_element(horizons.begin(), horizons.end());
    if (start < 0 || n_days < 1 || start + n_days + max_h > series.size())
        throw Error("backtest", "walk-forward window exceeds the series bounds");

    // each day sees only samples <= day (a trailing window when lookback > 0)
    auto forecast_day = [&](Eigen::Index day) {
        const Eigen::Index lo = cfg.lookback > 0 ? std::max<Eigen::Index>(0, day + 1 - cfg.lookback) : 0;
        const TimeSeries prefix = make_series(series.values.segment(lo, day + 1 - lo));
        std::vector<TradeRecord> trades;
        trades.reserve(horizons.size());
        for (int h : horizons) {
            const DirectionForecast f = directional_forecast(prefix, h, cfg);
            TradeRecord t;
            t.day = day;
            t.horizon = h;
            t.direction = f.direction;
            t.realized = series.values[day + h] - series.values[day];
            t.hit = f.direction == Direction::up ? t.realized > 0.0 : t.realized < 0.0;
            trades.push_back(t);
        }
        return trades;
    };

    // days run concurrently in fixed chunks; the report is assembled in day
    // order so the result does not depend on the schedule
    constexpr Eigen::Index kChunk = 32;
    const Eigen::Index n_chunks = (n_days + kChunk - 1) / kChunk;
    std::vector<std::future<std::vector<TradeRecord>>> futures;
    futures.reserve(n_chunks);
    for (Eigen::Index c = 0; c < n_chunks; ++c) {
        futures.push_back(std::async(
            c == 0 ? std::launch::deferred : std::launch::async,
            [&, c]() {
                std::vector<TradeRecord> chunk;
                const Eigen::Index lastd = std::min(n_days, (c + 1) * kChunk);
                for (Eigen::Index d = c * kChunk; d < lastd; ++d) {
                    auto day_trades = forecast_day(start + d);
                    chunk.insert(chunk.end(), day_trades.begin(), day_trades.end());
                }
                return chunk;
            }));
    }

    BacktestReport report;
    for (auto& f : futures) {
        auto chunk = f.get();
        report.trades.insert(report.trades.end(), chunk.begin(), chunk.end());
    }

    report.n_trades = static_cast<Eigen::Index>(report.trades.size());
    Eigen::Index hits = 0;
    for (const auto& t : report.trades) {
        hits += t.hit ? 1 : 0;
        auto& hs = report.per_horizon[t.horizon];
        hs.pnl += (t.direction == Direction::up ? 1.0 : -1.0) * t.realized;
    }
    report.accuracy = static_cast<double>(hits) / static_cast<double>(report.n_trades);

    const double mean = report.accuracy;
    double ss = 0.0;
    for (const auto& t : report.trades) {
        const double d = (t.hit ? 1.0 : 0.0) - mean;
        ss += d * d;
    }
    report.accuracy_sd =
        report.n_trades > 1 ? std::sqrt(ss / static_cast<double>(report.n_trades - 1)) : 0.0;

    for (auto& [h, hs] : report.per_horizon) {
        Eigen::Index h_hits = 0;
        Eigen::Index h_total = 0;
        for (const auto& t : report.trades) {
            if (t.horizon != h) continue;
            ++h_total;
            h_hits += t.hit ? 1 : 0;
        }
        hs.accuracy = static_cast<double>(h_hits) / static_cast<double>(h_total);
    }

    report.holding_rule = "enter each day, hold each horizon for its full span; zero change is a miss";
    return report;
}

bool audit_no_lookahead(const TimeSeries& series, Eigen::Index day, int horizon,
                        const PipelineConfig& cfg, std::uint64_t perturb_seed) {
    if (day < 0 || day >= series.size()) throw Error("backtest", "audit day out of range");

    const Eigen::Index lo = cfg.lookback > 0 ? std::max<Eigen::Index>(0, day + 1 - cfg.lookback) : 0;
    const TimeSeries prefix = make_series(series.values.segment(lo, day + 1 - lo));
    const DirectionForecast base = directional_forecast(prefix, horizon, cfg);

    // rewrite every future sample and re-run on the perturbed series
    Series mutated = series.values;
    GaussianStream g(perturb_seed, 0);
    for (Eigen::Index i = day + 1; i < mutated.size(); ++i)
        mutated[i] += 1.0 + std::abs(g.next()) * (1.0 + std::abs(mutated[i]));
    const TimeSeries perturbed_prefix = make_series(mutated.segment(lo, day + 1 - lo));
    const DirectionForecast alt = directional_forecast(perturbed_prefix, horizon, cfg);

    return base.direction == alt.direction && base.endpoint.state == alt.endpoint.state &&
           base.entangled == alt.entangled;
}

}  // namespace tsd
