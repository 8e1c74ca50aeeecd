#include "tsd/series.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "tsd/error.hpp"

namespace tsd {

TimeSeries make_series(Series values, std::vector<std::string> timestamps) {
    if (values.size() < 1) throw Error("core", "series must not be empty");
    if (!values.isFinite().all()) throw Error("core", "series contains NaN or Inf");
    if (!timestamps.empty() && static_cast<Eigen::Index>(timestamps.size()) != values.size())
        throw Error("core", "timestamp count does not match value count");
    return TimeSeries{std::move(values), std::move(timestamps)};
}

namespace {

std::vector<std::string> split_csv_row(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return {};
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

bool parse_double(const std::string& s, double& out) {
    const std::string t = trim(s);
    if (t.empty()) return false;
    try {
        std::size_t used = 0;
        out = std::stod(t, &used);
        return used == t.size() && std::isfinite(out);
    } catch (const std::exception&) {
        return false;
    }
}

}  // namespace

TimeSeries load_csv(const std::string& path, const std::string& column) {
    std::ifstream in(path);
    if (!in) throw Error("core", "cannot open file: " + path);

    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
    if (lines.empty()) throw Error("core", "empty series in " + path);

    // header row auto-detection: a first row whose fields do not all parse
    const auto first = split_csv_row(lines[0]);
    double probe = 0.0;
    bool has_header = false;
    for (const auto& f : first) {
        if (!parse_double(f, probe)) {
            has_header = true;
            break;
        }
    }

    Eigen::Index col = -1;
    if (std::all_of(column.begin(), column.end(), [](char c) { return std::isdigit(c) != 0; }) &&
        !column.empty()) {
        col = std::stol(column);
    } else {
        if (!has_header) throw Error("core", "column name '" + column + "' given but file has no header");
        for (std::size_t i = 0; i < first.size(); ++i) {
            if (trim(first[i]) == column) {
                col = static_cast<Eigen::Index>(i);
                break;
            }
        }
        if (col < 0) throw Error("core", "column '" + column + "' not found in header");
    }

    std::vector<double> values;
    values.reserve(lines.size());
    for (std::size_t row = has_header ? 1 : 0; row < lines.size(); ++row) {
        if (trim(lines[row]).empty()) continue;
        const auto fields = split_csv_row(lines[row]);
        double v = 0.0;
        if (col >= static_cast<Eigen::Index>(fields.size()) || !parse_double(fields[col], v))
            throw Error("core", "malformed row at line " + std::to_string(row + 1) + " in " + path);
        values.push_back(v);
    }
    if (values.empty()) throw Error("core", "empty series in " + path);

    Series out(static_cast<Eigen::Index>(values.size()));
    std::copy(values.begin(), values.end(), out.data());
    return make_series(std::move(out));
}

std::vector<ExtremaList::Point> ExtremaList::merged() const {
    std::vector<Point> out;
    out.reserve(maxima.size() + minima.size());
    std::size_t i = 0, j = 0;
    while (i < maxima.size() || j < minima.size()) {
        const bool take_max =
            j >= minima.size() || (i < maxima.size() && maxima[i].first < minima[j].first);
        if (take_max) {
            out.push_back({maxima[i].first, maxima[i].second, true});
            ++i;
        } else {
            out.push_back({minima[j].first, minima[j].second, false});
            ++j;
        }
    }
    return out;
}

ExtremaList find_extrema(const Series& x) {
    const Eigen::Index n = x.size();
    if (n < 3) throw Error("core", "series too short for extrema detection (need >= 3 samples)");

    std::vector<ExtremaList::Point> points;

    // scan runs of equal values; a run is one extremum at its midpoint when
    // both neighbours lie on the same side
    Eigen::Index i = 1;
    while (i < n - 1) {
        Eigen::Index j = i;
        while (j + 1 < n && x[j + 1] == x[i]) ++j;
        if (j >= n - 1) break;  // run touches the right endpoint
        const double left = x[i - 1];
        const double right = x[j + 1];
        const double v = x[i];
        const Eigen::Index mid = (i + j) / 2;
        if (left < v && right < v)
            points.push_back({mid, v, true});
        else if (left > v && right > v)
            points.push_back({mid, v, false});
        i = j + 1;
    }

    // enforce strict alternation: of two consecutive same-kind extrema keep
    // the stronger (earlier on ties)
    std::vector<ExtremaList::Point> alt;
    for (const auto& p : points) {
        if (!alt.empty() && alt.back().is_max == p.is_max) {
            const bool replace = p.is_max ? (p.value > alt.back().value) : (p.value < alt.back().value);
            if (replace) alt.back() = p;
        } else {
            alt.push_back(p);
        }
    }

    ExtremaList out;
    for (const auto& p : alt) {
        if (p.is_max)
            out.maxima.emplace_back(p.pos, p.value);
        else
            out.minima.emplace_back(p.pos, p.value);
    }
    return out;
}

std::vector<MonotoneSegment> monotone_segments(const Series& x) {
    const Eigen::Index n = x.size();
    if (n < 2) throw Error("core", "series too short for monotone segments (need >= 2 samples)");

    std::vector<MonotoneSegment> out;
    Eigen::Index start = 0;
    int dir = 0;  // 0 undecided, +1 up, -1 down
    for (Eigen::Index i = 1; i < n; ++i) {
        const double d = x[i] - x[i - 1];
        const int s = d > 0 ? 1 : (d < 0 ? -1 : 0);
        if (s == 0 || dir == 0 || s == dir) {
            if (dir == 0) dir = s;
            continue;
        }
        out.push_back({start, i - 1, dir > 0 ? Direction::up : Direction::down});
        start = i - 1;
        dir = s;
    }
    out.push_back({start, n - 1, dir < 0 ? Direction::down : Direction::up});
    return out;
}

}  // namespace tsd
