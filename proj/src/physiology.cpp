#include "tsd/physiology.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "tsd/error.hpp"

namespace tsd {

namespace {

enum class Crossing { none, rising, falling };

Crossing crossing_at(const Series& chain, Eigen::Index i) {
    const double a = chain[i];
    const double b = chain[i + 1];
    if (a < 0.0 && b > 0.0) return Crossing::rising;
    if (a > 0.0 && b < 0.0) return Crossing::falling;
    if (a == 0.0 && b > 0.0) return Crossing::rising;
    if (a == 0.0 && b < 0.0) return Crossing::falling;
    return Crossing::none;
}

}  // namespace

std::vector<CycleRecord> extract_cycles(const Skeleton& skel) {
    const auto& minima = skel.extrema.minima;
    const auto& maxima = skel.extrema.maxima;
    if (minima.size() < 2) throw Error("physiology", "need at least 2 chain minima to form cycles");

    std::vector<CycleRecord> cycles;
    cycles.reserve(minima.size() - 1);
    std::size_t mi = 0;
    for (std::size_t c = 0; c + 1 < minima.size(); ++c) {
        const Eigen::Index m0 = minima[c].first;
        const Eigen::Index m1 = minima[c + 1].first;

        // the (unique, by alternation) maximum between the two minima
        while (mi < maxima.size() && maxima[mi].first <= m0) ++mi;
        if (mi >= maxima.size() || maxima[mi].first >= m1) continue;
        const Eigen::Index p2 = maxima[mi].first;

        CycleRecord rec;
        rec.start_min = m0;
        rec.s2_pos = p2;
        rec.s2_val = maxima[mi].second;
        rec.s4_pos = m1;
        rec.s4_val = minima[c + 1].second;
        rec.t2 = p2 - m0;
        rec.t4 = m1 - m0;

        for (Eigen::Index i = m0 + 1; i < p2; ++i) {
            if (crossing_at(skel.chain, i) == Crossing::rising) {
                rec.s1_pos = i;
                rec.s1_val = skel.chain[i];
                rec.t1 = i - m0;
                break;
            }
        }
        for (Eigen::Index i = p2 + 1; i < m1; ++i) {
            if (crossing_at(skel.chain, i) == Crossing::falling) {
                rec.s3_pos = i;
                rec.s3_val = skel.chain[i];
                rec.t3 = i - m0;
                break;
            }
        }
        cycles.push_back(std::move(rec));
    }
    return cycles;
}

EndpointState endpoint_state(const Skeleton& skel) {
    const auto merged = skel.extrema.merged();
    if (merged.empty()) throw Error("physiology", "no extrema to classify the endpoint");
    const auto& last = merged.back();
    const double v_end = skel.chain[skel.chain.size() - 1];

    double ref_max = skel.chain.maxCoeff();
    double ref_min = skel.chain.minCoeff();
    if (!skel.extrema.maxima.empty()) ref_max = skel.extrema.maxima.back().second;
    if (!skel.extrema.minima.empty()) ref_min = skel.extrema.minima.back().second;

    const double mid = 0.5 * (ref_max + ref_min);
    const double half = 0.5 * (ref_max - ref_min);
    // crest/trough bands cover the quarter cycle around the extremum of a
    // pure tone: |value - mid| >= cos(pi/4) * half
    const double band = std::cos(std::numbers::pi / 4.0) * half;

    Phase state;
    if (half <= 0.0) {
        state = last.is_max ? Phase::crest : Phase::trough;
    } else if (last.is_max) {
        if (v_end >= mid + band)
            state = Phase::crest;
        else if (v_end <= mid - band)
            state = Phase::trough;
        else
            state = Phase::fall;
    } else {
        if (v_end <= mid - band)
            state = Phase::trough;
        else if (v_end >= mid + band)
            state = Phase::crest;
        else
            state = Phase::rise;
    }

    EndpointState out;
    out.state = state;
    out.lambda = {0.0, 0.0, 0.0, 0.0};
    out.lambda[static_cast<std::size_t>(static_cast<int>(state) - 1)] = 1.0;
    return out;
}

namespace {

bool near_constant(const std::vector<double>& v, double mean) {
    const double scale = std::max(std::abs(mean), 1.0);
    for (double x : v)
        if (std::abs(x - mean) > 1e-12 * scale) return false;
    return true;
}

}  // namespace

StateTimeCorrelation state_time_correlation(const std::vector<CycleRecord>& cycles) {
    if (cycles.size() < 3) throw Error("physiology", "need at least 3 cycles for the correlation matrix");

    StateTimeCorrelation out;
    out.values.setConstant(std::numeric_limits<double>::quiet_NaN());

    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            std::vector<double> sv;
            std::vector<double> tv;
            for (const auto& c : cycles) {
                std::optional<double> s;
                std::optional<double> t;
                switch (i) {
                    case 0: s = c.s1_val; break;
                    case 1: s = c.s2_val; break;
                    case 2: s = c.s3_val; break;
                    case 3: s = c.s4_val; break;
                }
                switch (j) {
                    case 0: if (c.t1) t = static_cast<double>(*c.t1); break;
                    case 1: t = static_cast<double>(c.t2); break;
                    case 2: if (c.t3) t = static_cast<double>(*c.t3); break;
                    case 3: t = static_cast<double>(c.t4); break;
                }
                if (s && t) {
                    sv.push_back(*s);
                    tv.push_back(*t);
                }
            }
            out.present[i][j] = false;
            if (sv.size() < 3) continue;

            const auto n = static_cast<double>(sv.size());
            double sm = 0.0, tm = 0.0;
            for (std::size_t k = 0; k < sv.size(); ++k) {
                sm += sv[k];
                tm += tv[k];
            }
            sm /= n;
            tm /= n;
            if (near_constant(sv, sm) || near_constant(tv, tm)) continue;

            double sxy = 0.0, sxx = 0.0, syy = 0.0;
            for (std::size_t k = 0; k < sv.size(); ++k) {
                const double dx = sv[k] - sm;
                const double dy = tv[k] - tm;
                sxy += dx * dy;
                sxx += dx * dx;
                syy += dy * dy;
            }
            out.values(i, j) = sxy / std::sqrt(sxx * syy);
            out.present[i][j] = true;
        }
    }
    return out;
}

double phase_geometry_agreement(const Skeleton& skel, const std::vector<CycleRecord>& cycles) {
    if (cycles.empty()) throw Error("physiology", "no cycles for the agreement report");
    const AnalyticSignal a = analytic_signal(skel.chain);
    const std::vector<Phase> states = phase_states(a);

    Eigen::Index agree = 0;
    Eigen::Index total = 0;
    for (const auto& c : cycles) {
        agree += states[static_cast<std::size_t>(c.s2_pos)] == Phase::crest ? 1 : 0;
        agree += states[static_cast<std::size_t>(c.s4_pos)] == Phase::trough ? 1 : 0;
        total += 2;
    }
    return static_cast<double>(agree) / static_cast<double>(total);
}

}  // namespace tsd
