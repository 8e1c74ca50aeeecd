#include "tsd/skeleton.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>
#include <complex>
#include <numbers>

#include "tsd/error.hpp"
#include "tsd/itd.hpp"

namespace tsd {

Skeleton Skeleton::from_chain(Series chain) {
    Skeleton s;
    s.source_len = chain.size();
    s.chain = std::move(chain);
    if (s.source_len >= 3) s.extrema = find_extrema(s.chain);
    for (Eigen::Index i = 0; i + 1 < s.source_len; ++i)
        if (s.chain[i] * s.chain[i + 1] < 0.0 || s.chain[i] == 0.0) s.zero_crossings.push_back(i);
    return s;
}

Skeleton itd_imf_chain1(const Series& signal, const ChainConfig& cfg) {
    const Eigen::Index n = signal.size();
    const Eigen::Index ext = cfg.ext_len;
    const Series work = ext > 0 ? extend_endpoints_gm(signal, ext, cfg.gm_window) : signal;

    ItdStep split = itd_step(work, cfg.alpha);
    ImfSet dec = eemd(split.rotation, cfg.noise_std, cfg.rounds, cfg.seed, cfg.sift);
    if (dec.imfs.empty()) throw Error("skeleton", "rotation admits no IMF");

    Series chain = ext > 0 ? Series(dec.imfs[0].segment(ext, n)) : std::move(dec.imfs[0]);
    return Skeleton::from_chain(std::move(chain));
}

AnalyticSignal analytic_signal(const Series& x) {
    const Eigen::Index n = x.size();
    if (n < 4) throw Error("skeleton", "signal too short for the analytic transform (need >= 4)");

    Eigen::Index padded = 1;
    while (padded < n) padded *= 2;

    std::vector<double> buf(static_cast<std::size_t>(padded), 0.0);
    for (Eigen::Index i = 0; i < n; ++i) buf[i] = x[i];

    Eigen::FFT<double> fft;
    std::vector<std::complex<double>> spec;
    fft.fwd(spec, buf);

    // zero the negative frequencies, double the positive, keep DC and Nyquist
    for (Eigen::Index k = 1; k < padded / 2; ++k) spec[k] *= 2.0;
    for (Eigen::Index k = padded / 2 + 1; k < padded; ++k) spec[k] = 0.0;

    std::vector<std::complex<double>> z;
    fft.inv(z, spec);

    AnalyticSignal out;
    out.real_part = x;
    out.imag_part.resize(n);
    out.amplitude.resize(n);
    out.phase.resize(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        out.imag_part[i] = z[i].imag();
        out.amplitude[i] = std::hypot(x[i], out.imag_part[i]);
        double p = std::atan2(out.imag_part[i], x[i]);
        if (p < 0.0) p += 2.0 * std::numbers::pi;
        out.phase[i] = p;
    }
    return out;
}

Phase phase_quadrant(double phase) {
    constexpr double half_pi = std::numbers::pi / 2.0;
    if (!(phase >= 0.0 && phase < 2.0 * std::numbers::pi))
        throw Error("skeleton", "phase must lie in [0, 2*pi)");
    if (phase < half_pi) return Phase::rise;
    if (phase < 2.0 * half_pi) return Phase::crest;
    if (phase < 3.0 * half_pi) return Phase::fall;
    return Phase::trough;
}

std::vector<Phase> phase_states(const AnalyticSignal& a) {
    // For a pure tone the crest carries raw phase 0, the trough pi, and the
    // rising crossing 3*pi/2. Shifting by 3*pi/4 centres each of those points
    // inside its quadrant, so sampling jitter cannot flip the label across a
    // boundary.
    constexpr double two_pi = 2.0 * std::numbers::pi;
    constexpr double shift = 0.75 * std::numbers::pi;
    std::vector<Phase> states;
    states.reserve(static_cast<std::size_t>(a.phase.size()));
    for (Eigen::Index i = 0; i < a.phase.size(); ++i) {
        double p = a.phase[i] + shift;
        if (p >= two_pi) p -= two_pi;
        states.push_back(phase_quadrant(p));
    }
    return states;
}

}  // namespace tsd
