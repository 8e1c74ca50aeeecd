#include "tsd/emd.hpp"

#include <cmath>
#include <future>
#include <vector>

#include "tsd/error.hpp"
#include "tsd/grey.hpp"
#include "tsd/random.hpp"
#include "tsd/spline.hpp"

namespace tsd {

namespace {

// envelope spline through one kind of extrema, with the first/last extremum
// mirrored across the series ends so the spline covers [0, n-1]
Eigen::ArrayXd envelope(const std::vector<std::pair<Eigen::Index, double>>& knots, Eigen::Index n) {
    const auto m = static_cast<Eigen::Index>(knots.size());
    Eigen::ArrayXd kx(m + 2), ky(m + 2);
    kx[0] = -static_cast<double>(knots.front().first);
    ky[0] = knots.front().second;
    for (Eigen::Index i = 0; i < m; ++i) {
        kx[i + 1] = static_cast<double>(knots[i].first);
        ky[i + 1] = knots[i].second;
    }
    kx[m + 1] = static_cast<double>(2 * (n - 1) - knots.back().first);
    ky[m + 1] = knots.back().second;
    return CubicSpline(kx, ky).sample(n);
}

double sample_sd(const Series& x) {
    const auto n = static_cast<double>(x.size());
    if (n < 2) return 0.0;
    const double mean = x.mean();
    return std::sqrt((x - mean).square().sum() / (n - 1.0));
}

int dyadic_imf_cap(Eigen::Index n) {
    return static_cast<int>(std::ceil(std::log2(static_cast<double>(n)))) + 1;
}

struct Accumulator {
    std::vector<Series> imf_sum;
    Series residue_sum;
};

}  // namespace

bool can_sift(const Series& signal) {
    if (signal.size() < 3) return false;
    const ExtremaList ex = find_extrema(signal);
    return ex.maxima.size() >= 2 && ex.minima.size() >= 2;
}

SiftResult sift_once(const Series& signal) {
    const Eigen::Index n = signal.size();
    if (n < 3) throw Error("emd", "signal too short to sift");
    const ExtremaList ex = find_extrema(signal);
    if (ex.maxima.size() < 2 || ex.minima.size() < 2)
        throw Error("emd", "too few extrema to sift (need >= 2 maxima and >= 2 minima)");

    const Eigen::ArrayXd upper = envelope(ex.maxima, n);
    const Eigen::ArrayXd lower = envelope(ex.minima, n);
    SiftResult r;
    r.mean_envelope = 0.5 * (upper + lower);
    r.proto_imf = signal - r.mean_envelope;
    return r;
}

ImfSet emd(const Series& signal, const SiftConfig& cfg) {
    const Eigen::Index n = signal.size();
    if (n < 8) throw Error("emd", "signal too short for decomposition (need >= 8 samples)");
    if (cfg.sd_threshold <= 0.0 || cfg.max_sifts < 1 || cfg.max_imfs < 1 || cfg.extension_len < 0)
        throw Error("emd", "invalid sift configuration");

    const Eigen::Index ext = cfg.extension_len;
    const Series work = ext > 0 ? extend_endpoints_gm(signal, ext, cfg.gm_window) : signal;
    const int imf_cap = std::min(cfg.max_imfs, dyadic_imf_cap(n));

    ImfSet out;
    out.config = cfg;
    Series residue = work;

    while (static_cast<int>(out.imfs.size()) < imf_cap && can_sift(residue)) {
        Series h = residue;
        for (int pass = 0; pass < cfg.max_sifts; ++pass) {
            const SiftResult r = sift_once(h);
            double sd = 0.0;
            for (Eigen::Index t = 0; t < h.size(); ++t) {
                const double d = h[t] - r.proto_imf[t];
                if (h[t] != 0.0) sd += d * d / (h[t] * h[t]);
            }
            h = r.proto_imf;
            if (sd < cfg.sd_threshold || !can_sift(h)) break;
        }
        residue -= h;
        out.imfs.push_back(std::move(h));
    }

    if (ext > 0) {
        for (auto& imf : out.imfs) imf = Series(imf.segment(ext, n));
        out.residue = residue.segment(ext, n);
    } else {
        out.residue = std::move(residue);
    }
    return out;
}

Series eemd_member_noise(Eigen::Index n, double noise_scale, std::uint64_t seed, int member) {
    GaussianStream g(seed, static_cast<std::uint64_t>(member));
    Series noise(n);
    for (Eigen::Index i = 0; i < n; ++i) noise[i] = noise_scale * g.next();
    return noise;
}

ImfSet eemd(const Series& signal, double noise_std, int rounds, std::uint64_t seed,
            const SiftConfig& cfg) {
    if (noise_std < 0.0) throw Error("emd", "noise_std must be >= 0");
    if (rounds < 1) throw Error("emd", "rounds must be >= 1");
    const Eigen::Index n = signal.size();
    const double noise_scale = noise_std * sample_sd(signal);

    // members are averaged over fixed-size chunks so the reduction tree (and
    // hence the rounding) is independent of the execution schedule
    constexpr int kChunk = 16;
    const int n_chunks = (rounds + kChunk - 1) / kChunk;

    auto run_chunk = [&](int chunk) {
        Accumulator acc;
        acc.residue_sum = Series::Zero(n);
        const int first = chunk * kChunk + 1;
        const int last = std::min(rounds, chunk * kChunk + kChunk);
        for (int member = first; member <= last; ++member) {
            Series perturbed = signal + eemd_member_noise(n, noise_scale, seed, member);
            ImfSet dec = emd(perturbed, cfg);
            for (std::size_t i = 0; i < dec.imfs.size(); ++i) {
                if (i >= acc.imf_sum.size()) acc.imf_sum.push_back(Series::Zero(n));
                acc.imf_sum[i] += dec.imfs[i];
            }
            acc.residue_sum += dec.residue;
        }
        return acc;
    };

    std::vector<std::future<Accumulator>> futures;
    futures.reserve(n_chunks);
    for (int c = 0; c < n_chunks; ++c)
        futures.push_back(std::async(c == 0 ? std::launch::deferred : std::launch::async, run_chunk, c));

    Accumulator total;
    total.residue_sum = Series::Zero(n);
    for (auto& f : futures) {
        Accumulator acc = f.get();
        for (std::size_t i = 0; i < acc.imf_sum.size(); ++i) {
            if (i >= total.imf_sum.size()) total.imf_sum.push_back(Series::Zero(n));
            total.imf_sum[i] += acc.imf_sum[i];
        }
        total.residue_sum += acc.residue_sum;
    }

    ImfSet out;
    out.config = cfg;
    out.noise_std = noise_std;
    out.rounds = rounds;
    out.seed = seed;
    const double inv = 1.0 / static_cast<double>(rounds);
    out.imfs.reserve(total.imf_sum.size());
    for (auto& s : total.imf_sum) out.imfs.push_back(s * inv);
    out.residue = total.residue_sum * inv;
    return out;
}

Series extend_endpoints_gm(const Series& signal, Eigen::Index ext, Eigen::Index gm_window) {
    const Eigen::Index n = signal.size();
    if (ext < 0) throw Error("emd", "extension length must be >= 0");
    if (ext == 0) return signal;
    if (n < 5) throw Error("emd", "signal too short for GM end extension (need >= 5 samples)");
    const Eigen::Index w = std::min(gm_window, n);
    if (w < 4) throw Error("emd", "GM extension window must span at least 4 samples");

    const GreyModel right = fit_gm11(signal.tail(w));
    const GreyModel left = fit_gm11(Series(signal.head(w).reverse()));

    Series out(n + 2 * ext);
    for (Eigen::Index h = 1; h <= ext; ++h) {
        out[ext - h] = forecast_gm11(left, w, h);
        out[ext + n - 1 + h] = forecast_gm11(right, w, h);
    }
    out.segment(ext, n) = signal;
    return out;
}

}  // namespace tsd
