// Independent reference implementations used to compute expected values.
// Everything here deliberately takes a different numerical route than the
// library (dense solves instead of tridiagonal sweeps, SVD instead of normal
// equations) so the two sides can check each other.

#ifndef TSD_TESTS_ORACLES_HPP
#define TSD_TESTS_ORACLES_HPP

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include "tsd/random.hpp"
#include "tsd/series.hpp"

namespace oracle {

inline double rel_err(const tsd::Series& got, const tsd::Series& want) {
    const double scale = std::max(want.abs().maxCoeff(), 1e-30);
    return (got - want).abs().maxCoeff() / scale;
}

inline double rel_err(double got, double want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-30);
}

inline double pearson(const tsd::Series& x, const tsd::Series& y) {
    const double mx = x.mean();
    const double my = y.mean();
    const double sxy = ((x - mx) * (y - my)).sum();
    return sxy / std::sqrt((x - mx).square().sum() * (y - my).square().sum());
}

// --- signal generators -----------------------------------------------------

inline tsd::Series tone(Eigen::Index n, double period, double phase = 0.0, double amp = 1.0) {
    tsd::Series out(n);
    for (Eigen::Index t = 0; t < n; ++t)
        out[t] = amp * std::sin(2.0 * std::numbers::pi * static_cast<double>(t) / period + phase);
    return out;
}

inline tsd::Series gaussian_noise(Eigen::Index n, std::uint64_t seed, double sd = 1.0) {
    tsd::GaussianStream g(seed, 0x6f7261636c65ULL);
    tsd::Series out(n);
    for (Eigen::Index t = 0; t < n; ++t) out[t] = sd * g.next();
    return out;
}

// tones + trend + noise; the mix varies with the seed
inline tsd::Series random_series(Eigen::Index n, std::uint64_t seed) {
    tsd::SplitMix64 rng(seed);
    tsd::Series out = tsd::Series::Zero(n);
    const int n_tones = 2 + static_cast<int>(rng.next() % 3);
    for (int k = 0; k < n_tones; ++k) {
        const double period = 8.0 + static_cast<double>(rng.next() % 200);
        const double amp = 0.2 + rng.next_unit() * 2.0;
        const double phase = rng.next_unit() * 2.0 * std::numbers::pi;
        out += tone(n, period, phase, amp);
    }
    const double slope = (rng.next_unit() - 0.5) * 4.0 / static_cast<double>(n);
    for (Eigen::Index t = 0; t < n; ++t) out[t] += slope * static_cast<double>(t);
    out += gaussian_noise(n, rng.next(), 0.3);
    return out;
}

inline tsd::Series random_walk(Eigen::Index n, std::uint64_t seed) {
    tsd::GaussianStream g(seed, 0x77616c6bULL);
    tsd::Series out(n);
    double acc = 0.0;
    for (Eigen::Index t = 0; t < n; ++t) {
        acc += g.next();
        out[t] = acc;
    }
    return out;
}

// --- natural cubic spline via a dense solve ---------------------------------

inline double spline_eval(const Eigen::ArrayXd& kx, const Eigen::ArrayXd& ky,
                          const Eigen::ArrayXd& m2, double x) {
    const Eigen::Index m = kx.size();
    if (x <= kx[0]) {
        const double h = kx[1] - kx[0];
        const double slope = (ky[1] - ky[0]) / h - h * m2[1] / 6.0;
        return ky[0] + slope * (x - kx[0]);
    }
    if (x >= kx[m - 1]) {
        const double h = kx[m - 1] - kx[m - 2];
        const double slope = (ky[m - 1] - ky[m - 2]) / h + h * m2[m - 2] / 6.0;
        return ky[m - 1] + slope * (x - kx[m - 1]);
    }
    Eigen::Index i = 0;
    while (kx[i + 1] < x) ++i;
    const double h = kx[i + 1] - kx[i];
    const double u = (kx[i + 1] - x) / h;
    const double v = 1.0 - u;
    return u * ky[i] + v * ky[i + 1] +
           h * h / 6.0 * ((u * u * u - u) * m2[i] + (v * v * v - v) * m2[i + 1]);
}

inline tsd::Series spline_dense(const Eigen::ArrayXd& kx, const Eigen::ArrayXd& ky,
                                Eigen::Index n_samples) {
    const Eigen::Index m = kx.size();
    Eigen::ArrayXd m2 = Eigen::ArrayXd::Zero(m);
    if (m >= 3) {
        Eigen::MatrixXd A = Eigen::MatrixXd::Zero(m, m);
        Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m);
        A(0, 0) = 1.0;
        A(m - 1, m - 1) = 1.0;
        for (Eigen::Index i = 1; i + 1 < m; ++i) {
            const double hm = kx[i] - kx[i - 1];
            const double hp = kx[i + 1] - kx[i];
            A(i, i - 1) = hm / 6.0;
            A(i, i) = (hm + hp) / 3.0;
            A(i, i + 1) = hp / 6.0;
            rhs(i) = (ky[i + 1] - ky[i]) / hp - (ky[i] - ky[i - 1]) / hm;
        }
        m2 = A.fullPivLu().solve(rhs).array();
    }
    tsd::Series out(n_samples);
    for (Eigen::Index t = 0; t < n_samples; ++t)
        out[t] = spline_eval(kx, ky, m2, static_cast<double>(t));
    return out;
}

// strict three-point extrema, no plateau handling; enough for tie-free signals
inline std::pair<std::vector<Eigen::Index>, std::vector<Eigen::Index>> strict_extrema(
    const tsd::Series& x) {
    std::vector<Eigen::Index> maxima, minima;
    for (Eigen::Index i = 1; i + 1 < x.size(); ++i) {
        if (x[i] > x[i - 1] && x[i] > x[i + 1]) maxima.push_back(i);
        if (x[i] < x[i - 1] && x[i] < x[i + 1]) minima.push_back(i);
    }
    return {maxima, minima};
}

// one envelope through the given extrema with the library's mirror rule,
// but evaluated through the dense spline
inline tsd::Series envelope_dense(const tsd::Series& x, const std::vector<Eigen::Index>& pos) {
    const Eigen::Index n = x.size();
    const auto m = static_cast<Eigen::Index>(pos.size());
    Eigen::ArrayXd kx(m + 2), ky(m + 2);
    kx[0] = -static_cast<double>(pos.front());
    ky[0] = x[pos.front()];
    for (Eigen::Index i = 0; i < m; ++i) {
        kx[i + 1] = static_cast<double>(pos[i]);
        ky[i + 1] = x[pos[i]];
    }
    kx[m + 1] = static_cast<double>(2 * (n - 1) - pos.back());
    ky[m + 1] = x[pos.back()];
    return spline_dense(kx, ky, n);
}

// --- GM(1,1) references ------------------------------------------------------

// least-squares (a, b) by SVD on the paper's design matrix
inline std::pair<double, double> gm_fit_svd(const tsd::Series& w) {
    const Eigen::Index n = w.size();
    tsd::Series x1(n);
    double acc = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        acc += w[i];
        x1[i] = acc;
    }
    Eigen::MatrixXd B(n - 1, 2);
    Eigen::VectorXd Y(n - 1);
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        B(k, 0) = -0.5 * (x1[k] + x1[k + 1]);
        B(k, 1) = 1.0;
        Y(k) = w[k + 1];
    }
    const Eigen::Vector2d sol = B.jacobiSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(Y);
    return {sol(0), sol(1)};
}

// the closed-form prediction of the raw value at 1-based time k >= 2
inline double gm_closed_form(double a, double b, double x0_first, Eigen::Index k) {
    if (k == 1) return x0_first;
    return (x0_first - b / a) * std::exp(-a * static_cast<double>(k - 1)) * (1.0 - std::exp(a));
}

// a sequence exactly consistent with the discrete fit equations
// x0(k) + a * z(k) = b, so the least-squares fit recovers (a, b) exactly
inline tsd::Series discrete_grey_sequence(double a, double b, double x0_first, Eigen::Index n) {
    tsd::Series x0(n);
    x0[0] = x0_first;
    double x1 = x0_first;
    for (Eigen::Index k = 1; k < n; ++k) {
        x0[k] = (b - a * x1) / (1.0 + a / 2.0);
        x1 += x0[k];
    }
    return x0;
}

// analytic fit parameters for data that is exactly geometric: x(k) = c*rho^(k-1)
inline std::pair<double, double> gm_exact_geometric(double c, double rho) {
    return {2.0 * (1.0 - rho) / (1.0 + rho), 2.0 * c / (1.0 + rho)};
}

// dense solve of the derivative-reconstruction system
inline tsd::Series improved_gm_dense(const tsd::Series& x0, double a, double b) {
    const Eigen::Index n = x0.size();
    tsd::Series x1(n);
    double acc = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        acc += x0[i];
        x1[i] = acc;
    }
    const double m_first = b - a * x1[0];
    const double m_last = b - a * x1[n - 1];
    const Eigen::Index k = n - 2;
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(k, k);
    Eigen::VectorXd G(k);
    for (Eigen::Index i = 0; i < k; ++i) {
        A(i, i) = 2.0;
        if (i > 0) A(i, i - 1) = 0.5;
        if (i + 1 < k) A(i, i + 1) = 0.5;
        G(i) = 1.5 * (x0[i + 1] + x0[i + 2]);
    }
    G(0) -= 0.5 * m_first;
    G(k - 1) -= 0.5 * m_last;
    const Eigen::VectorXd m = A.fullPivLu().solve(G);
    tsd::Series out(n);
    out[0] = m_first;
    for (Eigen::Index i = 0; i < k; ++i) out[i + 1] = m(i);
    out[n - 1] = m_last;
    return out;
}

}  // namespace oracle

#endif
