#ifndef TSD_CONFIG_HPP
#define TSD_CONFIG_HPP

#include <string>

#include "tsd/backtest.hpp"

namespace tsd {

/// Parse a plain key-value config file ("key = value", '#' comments).
/// Unknown keys are an error. Keys mirror PipelineConfig fields.
PipelineConfig parse_config_file(const std::string& path);

/// Apply one "key = value" assignment to cfg (shared by file and CLI paths).
void apply_config_entry(PipelineConfig& cfg, const std::string& key, const std::string& value);

/// Round-trip stable text form of a config.
std::string format_config(const PipelineConfig& cfg);

}  // namespace tsd

#endif
