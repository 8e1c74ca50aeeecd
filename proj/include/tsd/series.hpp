#ifndef TSD_SERIES_HPP
#define TSD_SERIES_HPP

#include <Eigen/Dense>

#include <string>
#include <utility>
#include <vector>

namespace tsd {

using Series = Eigen::ArrayXd;

/// A uniformly sampled real-valued sequence. The sample index is implicit
/// (0..n-1, unit step); timestamps, when present, are informational only.
struct TimeSeries {
    Series values;
    std::vector<std::string> timestamps;  // optional, same length as values when non-empty

    Eigen::Index size() const { return values.size(); }
};

/// Validates the TimeSeries invariants (non-empty, all values finite).
/// Throws tsd::Error on violation.
TimeSeries make_series(Series values, std::vector<std::string> timestamps = {});

/// Load one numeric column from a CSV file. `column` is either a 0-based
/// column index or a header name. A single header row is auto-detected by a
/// non-numeric first row. Unparseable rows are an error, never skipped.
TimeSeries load_csv(const std::string& path, const std::string& column = "0");

/// Interior local extrema of a series, strictly alternating in kind.
struct ExtremaList {
    // (sample position, value), positions strictly increasing per list
    std::vector<std::pair<Eigen::Index, double>> maxima;
    std::vector<std::pair<Eigen::Index, double>> minima;

    struct Point {
        Eigen::Index pos;
        double value;
        bool is_max;
    };
    /// Maxima and minima merged by position.
    std::vector<Point> merged() const;
};

/// Three-point interior extrema detection. Plateaus of equal values yield a
/// single extremum at the plateau midpoint (rounded down); endpoints are
/// never extrema. Alternation is enforced by dropping the weaker of two
/// consecutive same-kind extrema. Requires length >= 3.
ExtremaList find_extrema(const Series& x);

enum class Direction { up, down };

struct MonotoneSegment {
    Eigen::Index start;
    Eigen::Index end;  // inclusive
    Direction direction;
};

/// Maximal non-decreasing / non-increasing runs, ordered by start. Adjacent
/// segments share their boundary sample. Requires length >= 2.
std::vector<MonotoneSegment> monotone_segments(const Series& x);

}  // namespace tsd

#endif
