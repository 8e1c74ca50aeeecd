#ifndef TSD_SKELETON_HPP
#define TSD_SKELETON_HPP

#include <cstdint>

#include "tsd/emd.hpp"
#include "tsd/series.hpp"

namespace tsd {

/// The minimal oscillation extracted from a series: the first ensemble-EMD
/// IMF of the first ITD rotation, with its extrema and zero crossings.
struct Skeleton {
    Series chain;
    Eigen::Index source_len = 0;
    std::vector<Eigen::Index> zero_crossings;  // i where chain(i)*chain(i+1) < 0 or chain(i) == 0
    ExtremaList extrema;

    static Skeleton from_chain(Series chain);
};

struct ChainConfig {
    double alpha = 0.5;
    double noise_std = 0.0;
    int rounds = 1;
    std::uint64_t seed = 0;
    SiftConfig sift;
    Eigen::Index ext_len = 0;   // GM(1,1) end extension, cropped after the chain is built
    Eigen::Index gm_window = 10;
};

/// Chain pipeline: optional GM end extension, one ITD split, ensemble EMD of
/// the rotation, first IMF, cropped back to the source length.
Skeleton itd_imf_chain1(const Series& signal, const ChainConfig& cfg = {});

struct AnalyticSignal {
    Series real_part;  // equals the input exactly
    Series imag_part;  // discrete Hilbert transform
    Series amplitude;
    Series phase;      // atan2(imag, real) mapped to [0, 2*pi)
};

/// FFT analytic signal (zero-padded to the next power of two, cropped back):
/// negative frequencies zeroed, positive doubled, DC and Nyquist kept.
/// Requires length >= 4.
AnalyticSignal analytic_signal(const Series& x);

/// One cycle phase of the four-state oscillation physiology.
enum class Phase : int {
    rise = 1,    // monotone up, between minimum and maximum
    crest = 2,   // maximum
    fall = 3,    // monotone down
    trough = 4,  // minimum
};

/// Quadrant of a phase angle in [0, 2*pi):
/// [0, pi/2) -> rise, [pi/2, pi) -> crest, [pi, 3pi/2) -> fall, else trough.
Phase phase_quadrant(double phase);

/// Per-sample states from the analytic phase. Quadrants are anchored so that
/// a pure tone's crest sits at the centre of the crest quadrant (and likewise
/// trough/crossings), which keeps the labels off the quadrant boundaries.
std::vector<Phase> phase_states(const AnalyticSignal& a);

}  // namespace tsd

#endif
