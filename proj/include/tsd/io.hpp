#ifndef TSD_IO_HPP
#define TSD_IO_HPP

#include <string>
#include <vector>

#include "tsd/backtest.hpp"
#include "tsd/emd.hpp"
#include "tsd/grey.hpp"
#include "tsd/itd.hpp"
#include "tsd/physiology.hpp"
#include "tsd/series.hpp"
#include "tsd/skeleton.hpp"

namespace tsd {

/// Shortest round-trip decimal form of a double (deterministic across runs).
std::string format_double(double v);

/// Write named columns as CSV with a leading index column. All columns must
/// share one length.
void write_csv(const std::string& path, const std::vector<std::string>& names,
               const std::vector<const Series*>& columns);

std::string to_json(const ExtremaList& e);
std::string to_json(const ImfSet& set);
std::string to_json(const ItdSet& set);
std::string skeleton_to_json(const Skeleton& skel);
std::string to_json(const StateTimeCorrelation& corr);
std::string to_json(const GreyModel& model);
std::string to_json(const DirectionForecast& f);
std::string to_json(const BacktestReport& report);

void write_text(const std::string& path, const std::string& text);

void write_cycles_csv(const std::string& path, const std::vector<CycleRecord>& cycles);
void write_trades_csv(const std::string& path, const std::vector<TradeRecord>& trades);

/// Complex-plane cycle plot of an analytic signal.
std::string analytic_svg(const AnalyticSignal& a);

/// Cumulative pnl-proxy curves, one polyline per horizon.
std::string equity_svg(const BacktestReport& report);

}  // namespace tsd

#endif
