#include "tsd/io.hpp"

#include <nlohmann/json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "tsd/error.hpp"

namespace tsd {

using json = nlohmann::ordered_json;

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("io", "cannot open " + path + " for writing");
    out << text;
}

void write_csv(const std::string& path, const std::vector<std::string>& names,
               const std::vector<const Series*>& columns) {
    if (names.size() != columns.size()) throw Error("io", "column name/count mismatch");
    if (columns.empty()) throw Error("io", "no columns to write");
    const Eigen::Index n = columns[0]->size();
    for (const auto* c : columns)
        if (c->size() != n) throw Error("io", "column lengths differ");

    std::ostringstream out;
    out << "index";
    for (const auto& name : names) out << ',' << name;
    out << '\n';
    for (Eigen::Index i = 0; i < n; ++i) {
        out << i;
        for (const auto* c : columns) out << ',' << format_double((*c)[i]);
        out << '\n';
    }
    write_text(path, out.str());
}

namespace {

json series_json(const Series& s) {
    json arr = json::array();
    for (Eigen::Index i = 0; i < s.size(); ++i) arr.push_back(s[i]);
    return arr;
}

const char* phase_name(Phase p) {
    switch (p) {
        case Phase::rise: return "s1";
        case Phase::crest: return "s2";
        case Phase::fall: return "s3";
        case Phase::trough: return "s4";
    }
    return "?";
}

}  // namespace

std::string to_json(const ExtremaList& e) {
    json j;
    j["maxima"] = json::array();
    j["minima"] = json::array();
    for (const auto& [pos, val] : e.maxima) j["maxima"].push_back(json::array({pos, val}));
    for (const auto& [pos, val] : e.minima) j["minima"].push_back(json::array({pos, val}));
    return j.dump();
}

std::string to_json(const ImfSet& set) {
    json j;
    j["n_imfs"] = set.imfs.size();
    j["length"] = set.residue.size();
    j["noise_std"] = set.noise_std;
    j["rounds"] = set.rounds;
    j["seed"] = set.seed;
    j["sd_threshold"] = set.config.sd_threshold;
    j["max_sifts"] = set.config.max_sifts;
    j["max_imfs"] = set.config.max_imfs;
    j["extension_len"] = set.config.extension_len;
    j["gm_window"] = set.config.gm_window;
    return j.dump(2);
}

std::string to_json(const ItdSet& set) {
    json j;
    j["n_levels"] = set.levels.size();
    j["length"] = set.trend.size();
    j["alpha"] = set.alpha;
    return j.dump(2);
}

std::string skeleton_to_json(const Skeleton& skel) {
    json j;
    j["length"] = skel.source_len;
    j["n_zero_crossings"] = skel.zero_crossings.size();
    j["n_maxima"] = skel.extrema.maxima.size();
    j["n_minima"] = skel.extrema.minima.size();
    return j.dump(2);
}

std::string to_json(const StateTimeCorrelation& corr) {
    json j;
    for (int i = 0; i < 4; ++i) {
        json row = json::array();
        for (int k = 0; k < 4; ++k) {
            if (corr.present[i][k])
                row.push_back(corr.values(i, k));
            else
                row.push_back(nullptr);
        }
        j[std::string("s") + std::to_string(i + 1)] = row;
    }
    return j.dump(2);
}

std::string to_json(const GreyModel& model) {
    json j;
    j["a"] = model.a;
    j["b"] = model.b;
    j["shift"] = model.shift;
    j["window_len"] = model.window.size();
    return j.dump(2);
}

std::string to_json(const DirectionForecast& f) {
    json j;
    j["horizon"] = f.horizon;
    j["direction"] = f.direction == Direction::up ? "up" : "down";
    j["endpoint_state"] = phase_name(f.endpoint.state);
    j["lambda"] = f.endpoint.lambda;
    j["entangled"] = f.entangled;
    return j.dump(2);
}

std::string to_json(const BacktestReport& report) {
    json j;
    j["n_trades"] = report.n_trades;
    j["accuracy"] = report.accuracy;
    j["accuracy_sd"] = report.accuracy_sd;
    j["holding_rule"] = report.holding_rule;
    json per;
    for (const auto& [h, stats] : report.per_horizon) {
        json entry;
        entry["accuracy"] = stats.accuracy;
        entry["pnl"] = stats.pnl;
        per[std::to_string(h)] = entry;
    }
    j["per_horizon"] = per;
    return j.dump(2);
}

void write_cycles_csv(const std::string& path, const std::vector<CycleRecord>& cycles) {
    std::ostringstream out;
    out << "start_min,t1,t2,t3,t4,s1_val,s2_val,s3_val,s4_val,s1_present,s3_present\n";
    for (const auto& c : cycles) {
        out << c.start_min << ',';
        if (c.t1) out << *c.t1;
        out << ',' << c.t2 << ',';
        if (c.t3) out << *c.t3;
        out << ',' << c.t4 << ',';
        if (c.s1_val) out << format_double(*c.s1_val);
        out << ',' << format_double(c.s2_val) << ',';
        if (c.s3_val) out << format_double(*c.s3_val);
        out << ',' << format_double(c.s4_val) << ',' << (c.t1 ? 1 : 0) << ',' << (c.t3 ? 1 : 0)
            << '\n';
    }
    write_text(path, out.str());
}

void write_trades_csv(const std::string& path, const std::vector<TradeRecord>& trades) {
    std::ostringstream out;
    out << "day,horizon,direction,realized,hit\n";
    for (const auto& t : trades) {
        out << t.day << ',' << t.horizon << ',' << (t.direction == Direction::up ? "up" : "down")
            << ',' << format_double(t.realized) << ',' << (t.hit ? 1 : 0) << '\n';
    }
    write_text(path, out.str());
}

namespace {

struct SvgFrame {
    double x0, x1, y0, y1;  // data range
    static constexpr double width = 640.0;
    static constexpr double height = 640.0;
    static constexpr double margin = 40.0;

    double px(double x) const {
        return margin + (x - x0) / (x1 - x0 + 1e-300) * (width - 2 * margin);
    }
    double py(double y) const {
        return height - margin - (y - y0) / (y1 - y0 + 1e-300) * (height - 2 * margin);
    }
};

void polyline(std::ostringstream& out, const SvgFrame& f, const Series& xs, const Series& ys,
              const char* color) {
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1\" points=\"";
    for (Eigen::Index i = 0; i < xs.size(); ++i) {
        if (i) out << ' ';
        out << format_double(f.px(xs[i])) << ',' << format_double(f.py(ys[i]));
    }
    out << "\"/>\n";
}

std::string svg_document(const std::string& body) {
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << SvgFrame::width
        << "\" height=\"" << SvgFrame::height << "\">\n"
        << body << "</svg>\n";
    return out.str();
}

}  // namespace

std::string analytic_svg(const AnalyticSignal& a) {
    SvgFrame f{a.real_part.minCoeff(), a.real_part.maxCoeff(), a.imag_part.minCoeff(),
               a.imag_part.maxCoeff()};
    std::ostringstream body;
    body << "<line x1=\"" << f.px(0) << "\" y1=\"" << f.py(f.y0) << "\" x2=\"" << f.px(0)
         << "\" y2=\"" << f.py(f.y1) << "\" stroke=\"#cccccc\"/>\n";
    body << "<line x1=\"" << f.px(f.x0) << "\" y1=\"" << f.py(0) << "\" x2=\"" << f.px(f.x1)
         << "\" y2=\"" << f.py(0) << "\" stroke=\"#cccccc\"/>\n";
    polyline(body, f, a.real_part, a.imag_part, "#1f77b4");
    return svg_document(body.str());
}

std::string equity_svg(const BacktestReport& report) {
    static const char* colors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                   "#8c564b", "#e377c2", "#7f7f7f"};
    // cumulative pnl per horizon, in day order
    std::map<int, std::vector<double>> curves;
    for (const auto& t : report.trades) {
        auto& c = curves[t.horizon];
        const double step = (t.direction == Direction::up ? 1.0 : -1.0) * t.realized;
        c.push_back((c.empty() ? 0.0 : c.back()) + step);
    }

    double lo = 0.0, hi = 0.0;
    std::size_t longest = 1;
    for (const auto& [h, c] : curves) {
        for (double v : c) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        longest = std::max(longest, c.size());
    }

    SvgFrame f{0.0, static_cast<double>(longest - 1), lo, hi};
    std::ostringstream body;
    body << "<line x1=\"" << f.px(f.x0) << "\" y1=\"" << f.py(0) << "\" x2=\"" << f.px(f.x1)
         << "\" y2=\"" << f.py(0) << "\" stroke=\"#cccccc\"/>\n";
    int ci = 0;
    for (const auto& [h, c] : curves) {
        Series xs(static_cast<Eigen::Index>(c.size()));
        Series ys(static_cast<Eigen::Index>(c.size()));
        for (std::size_t i = 0; i < c.size(); ++i) {
            xs[static_cast<Eigen::Index>(i)] = static_cast<double>(i);
            ys[static_cast<Eigen::Index>(i)] = c[i];
        }
        polyline(body, f, xs, ys, colors[ci++ % 8]);
    }
    return svg_document(body.str());
}

}  // namespace tsd
