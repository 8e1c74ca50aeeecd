#include "tsd/itd.hpp"

#include <cmath>

#include "tsd/error.hpp"

namespace tsd {

double baseline_knot(double x_k, double x_k1, double x_k2,
                     Eigen::Index tau_k, Eigen::Index tau_k1, Eigen::Index tau_k2,
                     double alpha) {
    if (!(tau_k < tau_k1 && tau_k1 < tau_k2))
        throw Error("itd", "extrema positions must be strictly increasing");
    if (!(alpha > 0.0 && alpha < 1.0)) throw Error("itd", "alpha must lie in (0, 1)");
    const double w = static_cast<double>(tau_k1 - tau_k) / static_cast<double>(tau_k2 - tau_k);
    return alpha * (x_k + w * (x_k2 - x_k)) + (1.0 - alpha) * x_k1;
}

ItdStep itd_step(const Series& signal, double alpha) {
    const Eigen::Index n = signal.size();
    if (n < 3) throw Error("itd", "signal too short for an ITD step");
    const auto ex = find_extrema(signal).merged();
    const auto m = static_cast<Eigen::Index>(ex.size());
    if (m < 4) throw Error("itd", "too few extrema for an ITD step (need >= 4)");

    // knot values: ends pinned to the extremum values, interior by the
    // three-extrema baseline formula
    Eigen::ArrayXd knots(m);
    knots[0] = ex[0].value;
    knots[m - 1] = ex[m - 1].value;
    for (Eigen::Index k = 1; k + 1 < m; ++k)
        knots[k] = baseline_knot(ex[k - 1].value, ex[k].value, ex[k + 1].value,
                                 ex[k - 1].pos, ex[k].pos, ex[k + 1].pos, alpha);

    ItdStep out;
    out.baseline = signal;  // outside the extremal span the baseline is the signal

    for (Eigen::Index k = 0; k + 1 < m; ++k) {
        const Eigen::Index p0 = ex[k].pos;
        const Eigen::Index p1 = ex[k + 1].pos;
        const double x0 = ex[k].value;
        const double x1 = ex[k + 1].value;
        const double l0 = knots[k];
        const double l1 = knots[k + 1];
        const double dx = x1 - x0;
        const double scale = std::max({std::abs(x0), std::abs(x1), 1.0});
        const bool degenerate = std::abs(dx) <= 1e-12 * scale;
        for (Eigen::Index t = p0 + 1; t <= p1; ++t) {
            // interpolate in signal value; fall back to sample position when
            // the bracketing extrema share a value
            const double frac = degenerate
                                    ? static_cast<double>(t - p0) / static_cast<double>(p1 - p0)
                                    : (signal[t] - x0) / dx;
            out.baseline[t] = l0 + (l1 - l0) * frac;
        }
        out.baseline[p0] = l0;
    }
    out.baseline[ex[m - 1].pos] = knots[m - 1];

    out.rotation = signal - out.baseline;
    return out;
}

ItdSet itd(const Series& signal, int max_levels, double alpha) {
    if (signal.size() < 8) throw Error("itd", "signal too short for decomposition (need >= 8 samples)");
    if (max_levels < 1) throw Error("itd", "max_levels must be >= 1");

    ItdSet out;
    out.alpha = alpha;
    Series current = signal;
    for (int level = 0; level < max_levels; ++level) {
        const auto ex = find_extrema(current).merged();
        if (static_cast<Eigen::Index>(ex.size()) < 4) break;
        ItdStep step = itd_step(current, alpha);
        out.levels.push_back(std::move(step.rotation));
        current = std::move(step.baseline);
    }
    out.trend = std::move(current);
    return out;
}

}  // namespace tsd
