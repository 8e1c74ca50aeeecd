#ifndef TSD_EMD_HPP
#define TSD_EMD_HPP

#include <cstdint>

#include "tsd/series.hpp"

namespace tsd {

struct SiftConfig {
    double sd_threshold = 0.2;  // Cauchy-type stop per sift pass
    int max_sifts = 10;         // sift passes per IMF
    int max_imfs = 10;          // capped further by the dyadic bound
    int extension_len = 0;      // GM(1,1) samples appended per end before sifting
    int gm_window = 10;         // trailing/leading window for the end extension
};

/// Decomposition result. imfs[i] has the input length and
/// sum(imfs) + residue reconstructs the input (for eemd: the noise-averaged
/// input) to rounding.
struct ImfSet {
    std::vector<Series> imfs;
    Series residue;
    // config echo
    SiftConfig config;
    double noise_std = 0.0;
    int rounds = 1;
    std::uint64_t seed = 0;
};

struct SiftResult {
    Series proto_imf;
    Series mean_envelope;
};

/// One sifting pass: upper/lower cubic-spline envelopes through the
/// maxima/minima (with mirrored boundary knots), proto_imf = signal - mean.
/// Requires >= 2 maxima and >= 2 minima.
SiftResult sift_once(const Series& signal);

/// True when the signal has enough extrema for a sifting pass.
bool can_sift(const Series& signal);

/// Classical EMD: sift until the SD stop or max_sifts, subtract, repeat
/// until the residue runs out of extrema or the IMF cap is reached.
/// Requires length >= 8.
ImfSet emd(const Series& signal, const SiftConfig& cfg = {});

/// Ensemble EMD: average member decompositions of the signal perturbed with
/// Gaussian noise of sd noise_std * sd(signal), one substream per member
/// derived from (seed, member). Members with fewer IMFs contribute zeros.
/// Output is a pure function of (signal, noise_std, rounds, seed, cfg).
ImfSet eemd(const Series& signal, double noise_std, int rounds, std::uint64_t seed,
            const SiftConfig& cfg = {});

/// Per-member perturbation noise, exposed so the averaged-input
/// reconstruction target can be regenerated independently.
Series eemd_member_noise(Eigen::Index n, double noise_scale, std::uint64_t seed, int member);

/// GM(1,1) end extension: appends `ext` forecast samples on the right from a
/// fit on the trailing window, and on the left from a fit on the reversed
/// leading window. Returns length n + 2*ext. Requires length >= 5.
Series extend_endpoints_gm(const Series& signal, Eigen::Index ext, Eigen::Index gm_window = 10);

}  // namespace tsd

#endif
