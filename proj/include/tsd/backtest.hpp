#ifndef TSD_BACKTEST_HPP
#define TSD_BACKTEST_HPP

#include <cstdint>
#include <map>
#include <string>

#include "tsd/physiology.hpp"
#include "tsd/series.hpp"
#include "tsd/skeleton.hpp"

namespace tsd {

struct PipelineConfig {
    double alpha = 0.5;
    double noise_std = 0.0;
    int rounds = 1;
    std::uint64_t seed = 1;
    double sd_threshold = 0.2;
    int max_sifts = 10;
    int max_imfs = 10;
    Eigen::Index ext_len = 10;
    Eigen::Index gm_window = 10;
    std::vector<int> horizons = {1, 2, 3, 4, 5};
    Eigen::Index lookback = 256;  // trailing samples per forecast; 0 = full history
    int levels = 5;               // ITD levels (decompose-itd)

    ChainConfig chain_config() const;
};

struct DirectionForecast {
    int horizon = 1;
    Direction direction = Direction::up;
    EndpointState endpoint;
    bool entangled = false;
};

/// The directional pipeline: GM end extension, ITD rotation, ensemble EMD
/// chain, endpoint state. Crest/fall ends forecast down, trough/rise up.
/// Requires >= 64 samples.
DirectionForecast directional_forecast(const TimeSeries& series, int horizon,
                                       const PipelineConfig& cfg);

/// Loopback detection: true when the samples after the last confirmed
/// extremum (the last one already followed by another) hold values on both
/// sides of its level, i.e. the end oscillates between the extremal bands
/// instead of committing. Requires >= 2 extrema.
bool detect_entanglement(const Skeleton& skel);

struct TradeRecord {
    Eigen::Index day = 0;
    int horizon = 1;
    Direction direction = Direction::up;
    double realized = 0.0;  // x[day + horizon] - x[day]
    bool hit = false;
};

struct HorizonStats {
    double accuracy = 0.0;
    double pnl = 0.0;  // sum of direction * realized change, h-day holding
};

struct BacktestReport {
    std::vector<TradeRecord> trades;
    Eigen::Index n_trades = 0;
    double accuracy = 0.0;
    double accuracy_sd = 0.0;  // sample sd of the 0/1 hit sequence
    std::map<int, HorizonStats> per_horizon;
    std::string holding_rule;
};

/// Walk-forward evaluation over days [start, start + n_days): each forecast
/// sees only samples up to its day; a realized change of exactly zero counts
/// as a miss. Requires start + n_days + max(horizon) <= length.
BacktestReport run_backtest(const TimeSeries& series, Eigen::Index start, Eigen::Index n_days,
                            const std::vector<int>& horizons, const PipelineConfig& cfg);

/// No-look-ahead audit: perturbs samples after `day` and checks the forecast
/// at `day` is unchanged.
bool audit_no_lookahead(const TimeSeries& series, Eigen::Index day, int horizon,
                        const PipelineConfig& cfg, std::uint64_t perturb_seed);

}  // namespace tsd

#endif
