#ifndef TSD_PHYSIOLOGY_HPP
#define TSD_PHYSIOLOGY_HPP

#include <array>
#include <optional>

#include "tsd/skeleton.hpp"

namespace tsd {

/// One oscillation cycle of the chain, anchored at a minimum. The rise point
/// (s1) and fall point (s3) are the rising/falling zero crossings and may be
/// absent. T1..T4 are sample distances from the anchoring minimum.
struct CycleRecord {
    Eigen::Index start_min = 0;

    std::optional<Eigen::Index> s1_pos;
    std::optional<double> s1_val;
    Eigen::Index s2_pos = 0;
    double s2_val = 0.0;
    std::optional<Eigen::Index> s3_pos;
    std::optional<double> s3_val;
    Eigen::Index s4_pos = 0;  // the closing minimum
    double s4_val = 0.0;

    std::optional<Eigen::Index> t1;
    Eigen::Index t2 = 0;
    std::optional<Eigen::Index> t3;
    Eigen::Index t4 = 0;
};

/// One record per consecutive pair of chain minima. Requires >= 2 minima.
std::vector<CycleRecord> extract_cycles(const Skeleton& skel);

/// Classification of the final partial cycle, with the one-hot weights of
/// the endpoint decomposition (the coordinate transform is the identity).
struct EndpointState {
    Phase state = Phase::rise;
    std::array<double, 4> lambda{};  // exactly one entry is 1
};

/// Classifies the series end from the last extrema: crest/trough when the
/// end value is inside the band within cos(pi/4) of the last maximum/minimum
/// level, else rise or fall by the side of the last extremum.
/// Requires >= 1 extremum.
EndpointState endpoint_state(const Skeleton& skel);

/// 4x4 Pearson correlation between cycle state values (s1..s4) and cyclic
/// time coordinates (T1..T4). Entries with fewer than 3 paired cycles or
/// zero variance are reported missing, never zero. Requires >= 3 cycles.
struct StateTimeCorrelation {
    Eigen::Matrix4d values;              // row i: s_{i+1}; col j: T_{j+1}
    std::array<std::array<bool, 4>, 4> present{};
};

StateTimeCorrelation state_time_correlation(const std::vector<CycleRecord>& cycles);

/// Fraction of cycle crest/trough samples whose phase-derived state matches
/// the extrema-geometry state (crest at s2 positions, trough at s4).
double phase_geometry_agreement(const Skeleton& skel, const std::vector<CycleRecord>& cycles);

}  // namespace tsd

#endif
