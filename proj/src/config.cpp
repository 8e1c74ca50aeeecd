#include "tsd/config.hpp"

#include <fstream>
#include <sstream>

#include "tsd/error.hpp"
#include "tsd/io.hpp"

namespace tsd {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return {};
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<int> parse_int_list(const std::string& value) {
    std::vector<int> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const std::string t = trim(item);
        if (t.empty()) continue;
        out.push_back(std::stoi(t));
    }
    if (out.empty()) throw Error("config", "empty integer list");
    return out;
}

}  // namespace

void apply_config_entry(PipelineConfig& cfg, const std::string& key, const std::string& value) {
    try {
        if (key == "alpha")
            cfg.alpha = std::stod(value);
        else if (key == "noise_std")
            cfg.noise_std = std::stod(value);
        else if (key == "rounds")
            cfg.rounds = std::stoi(value);
        else if (key == "seed")
            cfg.seed = std::stoull(value);
        else if (key == "sd_threshold")
            cfg.sd_threshold = std::stod(value);
        else if (key == "max_sifts")
            cfg.max_sifts = std::stoi(value);
        else if (key == "max_imfs")
            cfg.max_imfs = std::stoi(value);
        else if (key == "ext_len")
            cfg.ext_len = std::stol(value);
        else if (key == "gm_window")
            cfg.gm_window = std::stol(value);
        else if (key == "horizons")
            cfg.horizons = parse_int_list(value);
        else if (key == "lookback")
            cfg.lookback = std::stol(value);
        else if (key == "levels")
            cfg.levels = std::stoi(value);
        else
            throw Error("config", "unknown key: " + key);
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw Error("config", "bad value for " + key + ": " + value);
    }
}

PipelineConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("config", "cannot open config file: " + path);
    PipelineConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw Error("config", "missing '=' at line " + std::to_string(lineno));
        apply_config_entry(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return cfg;
}

std::string format_config(const PipelineConfig& cfg) {
    std::ostringstream out;
    out << "alpha = " << format_double(cfg.alpha) << '\n';
    out << "noise_std = " << format_double(cfg.noise_std) << '\n';
    out << "rounds = " << cfg.rounds << '\n';
    out << "seed = " << cfg.seed << '\n';
    out << "sd_threshold = " << format_double(cfg.sd_threshold) << '\n';
    out << "max_sifts = " << cfg.max_sifts << '\n';
    out << "max_imfs = " << cfg.max_imfs << '\n';
    out << "ext_len = " << cfg.ext_len << '\n';
    out << "gm_window = " << cfg.gm_window << '\n';
    out << "horizons = ";
    for (std::size_t i = 0; i < cfg.horizons.size(); ++i)
        out << (i ? "," : "") << cfg.horizons[i];
    out << '\n';
    out << "lookback = " << cfg.lookback << '\n';
    out << "levels = " << cfg.levels << '\n';
    return out.str();
}

}  // namespace tsd
