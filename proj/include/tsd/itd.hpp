#ifndef TSD_ITD_HPP
#define TSD_ITD_HPP

#include "tsd/series.hpp"

namespace tsd {

/// Intrinsic time-scale decomposition result: proper rotations in extraction
/// order plus the final baseline as trend. sum(levels) + trend reconstructs
/// the input exactly to rounding.
struct ItdSet {
    std::vector<Series> levels;
    Series trend;
    double alpha = 0.5;
};

/// Baseline knot value at the middle of three consecutive extrema
/// (x_k, x_k1, x_k2) at strictly increasing positions (tau_k, tau_k1, tau_k2):
///   L = alpha * [x_k + (tau_k1 - tau_k)/(tau_k2 - tau_k) * (x_k2 - x_k)]
///       + (1 - alpha) * x_k1
double baseline_knot(double x_k, double x_k1, double x_k2,
                     Eigen::Index tau_k, Eigen::Index tau_k1, Eigen::Index tau_k2,
                     double alpha);

struct ItdStep {
    Series baseline;
    Series rotation;  // signal - baseline, exact split
};

/// One ITD level. Knots at every extremum (ends pinned to the first/last
/// extremum values); between knots the baseline is interpolated in signal
/// value, falling back to sample position when adjacent extrema share a
/// value. Outside the extremal span the baseline equals the signal.
/// Requires >= 4 alternating extrema.
ItdStep itd_step(const Series& signal, double alpha = 0.5);

/// Full decomposition: iterates itd_step on successive baselines until the
/// baseline has fewer than 4 extrema or max_levels is reached.
/// Requires length >= 8.
ItdSet itd(const Series& signal, int max_levels = 5, double alpha = 0.5);

}  // namespace tsd

#endif
