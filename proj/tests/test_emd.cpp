#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "tsd/emd.hpp"
#include "tsd/error.hpp"

using tsd::Series;

namespace {

Series reconstruct(const tsd::ImfSet& set) {
    Series sum = set.residue;
    for (const auto& imf : set.imfs) sum += imf;
    return sum;
}

Series ramp(Eigen::Index n) {
    Series s(n);
    for (Eigen::Index i = 0; i < n; ++i) s[i] = 1.0 + static_cast<double>(i);
    return s;
}

}  // namespace

TEST_CASE("sift_once: pure sinusoid has a near-zero mean envelope") {
    const Series x = oracle::tone(1024, 64.0);
    const auto r = tsd::sift_once(x);

    const Eigen::Index lo = 102, hi = 921;  // interior 80%
    CHECK(r.mean_envelope.segment(lo, hi - lo + 1).abs().maxCoeff() <= 0.05);

    // the independent dense-spline envelope agrees with the implementation
    const auto [maxima, minima] = oracle::strict_extrema(x);
    const Series upper = oracle::envelope_dense(x, maxima);
    const Series lower = oracle::envelope_dense(x, minima);
    const Series want = 0.5 * (upper + lower);
    CHECK(oracle::rel_err(r.mean_envelope.segment(lo, hi - lo + 1).eval(),
                          want.segment(lo, hi - lo + 1).eval()) < 1e-9);
    CHECK(oracle::rel_err(r.proto_imf, x - want) < 1e-9);
}

TEST_CASE("sift_once: an IMF-like signal passes through") {
    // period-4 tone: every extremum sits exactly on a sample at +-1
    const Series x = oracle::tone(256, 4.0);
    const auto r = tsd::sift_once(x);
    const Eigen::Index lo = 26, hi = 229;
    CHECK((r.proto_imf - x).segment(lo, hi - lo + 1).abs().maxCoeff() <= 1e-6);
}

TEST_CASE("sift_once: monotone input has too few extrema") {
    CHECK_THROWS_AS(tsd::sift_once(ramp(32)), tsd::Error);
    CHECK_FALSE(tsd::can_sift(ramp(32)));
}

TEST_CASE("emd separates a fast tone from a slow one") {
    const Series fast = oracle::tone(2048, 32.0);
    const Series slow = oracle::tone(2048, 256.0);
    const auto set = tsd::emd(fast + slow);
    REQUIRE(set.imfs.size() >= 2);
    CHECK(std::abs(oracle::pearson(set.imfs[0], fast)) >= 0.95);
}

TEST_CASE("emd of a monotone ramp is just the residue") {
    const Series x = ramp(64);
    const auto set = tsd::emd(x);
    CHECK(set.imfs.empty());
    CHECK((set.residue == x).all());
}

TEST_CASE("emd reconstruction identity and dyadic IMF cap") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        const Series x = oracle::random_series(512, seed);
        const auto set = tsd::emd(x);
        CHECK(oracle::rel_err(reconstruct(set), x) < 1e-9);
        CHECK(set.imfs.size() <= static_cast<std::size_t>(std::ceil(std::log2(512.0))) + 1);
    }
}

TEST_CASE("emd rejects short input and bad configs") {
    CHECK_THROWS_AS(tsd::emd(ramp(7)), tsd::Error);
    tsd::SiftConfig bad;
    bad.max_sifts = 0;
    CHECK_THROWS_AS(tsd::emd(ramp(64), bad), tsd::Error);
}

TEST_CASE("eemd with zero noise and one round degenerates to emd") {
    for (std::uint64_t seed = 11; seed <= 14; ++seed) {
        const Series x = oracle::random_series(400, seed);
        const auto plain = tsd::emd(x);
        const auto ensemble = tsd::eemd(x, 0.0, 1, 99);
        REQUIRE(ensemble.imfs.size() == plain.imfs.size());
        for (std::size_t i = 0; i < plain.imfs.size(); ++i)
            CHECK((ensemble.imfs[i] - plain.imfs[i]).abs().maxCoeff() <= 1e-12);
        CHECK((ensemble.residue - plain.residue).abs().maxCoeff() <= 1e-12);
    }
}

TEST_CASE("eemd is deterministic for a fixed seed") {
    const Series x = oracle::random_series(256, 5);
    const auto a = tsd::eemd(x, 0.1, 40, 1234);
    const auto b = tsd::eemd(x, 0.1, 40, 1234);
    REQUIRE(a.imfs.size() == b.imfs.size());
    for (std::size_t i = 0; i < a.imfs.size(); ++i) CHECK((a.imfs[i] == b.imfs[i]).all());
    CHECK((a.residue == b.residue).all());

    const auto c = tsd::eemd(x, 0.1, 40, 4321);
    CHECK((a.residue != c.residue).any());
}

TEST_CASE("eemd averages reconstruct the noise-averaged input") {
    const Series x = oracle::random_series(300, 21);
    const double noise_std = 0.1;
    const int rounds = 25;
    const std::uint64_t seed = 7;
    const auto set = tsd::eemd(x, noise_std, rounds, seed);

    const double sd = std::sqrt((x - x.mean()).square().sum() / static_cast<double>(x.size() - 1));
    Series target = x;
    Series noise_sum = Series::Zero(x.size());
    for (int member = 1; member <= rounds; ++member)
        noise_sum += tsd::eemd_member_noise(x.size(), noise_std * sd, seed, member);
    target += noise_sum / rounds;

    CHECK(oracle::rel_err(reconstruct(set), target) < 1e-9);
}

TEST_CASE("eemd accepts a 0.05/1000 configuration on a short series") {
    const Series x = oracle::random_series(100, 3);
    const auto set = tsd::eemd(x, 0.05, 1000, 42);
    CHECK(!set.imfs.empty());
    CHECK(set.residue.size() == x.size());
    CHECK(set.rounds == 1000);
}

TEST_CASE("eemd validates noise and rounds") {
    const Series x = oracle::random_series(128, 9);
    CHECK_THROWS_AS(tsd::eemd(x, -0.1, 10, 1), tsd::Error);
    CHECK_THROWS_AS(tsd::eemd(x, 0.1, 0, 1), tsd::Error);
}

TEST_CASE("extend_endpoints_gm: zero extension is the identity") {
    const Series x = oracle::random_series(64, 2);
    CHECK((tsd::extend_endpoints_gm(x, 0) == x).all());
}

TEST_CASE("extend_endpoints_gm continues an exact geometric law") {
    const double c = 5.0;
    const double rho = 0.9;
    const Eigen::Index n = 30;
    Series x(n);
    for (Eigen::Index t = 0; t < n; ++t) x[t] = c * std::pow(rho, static_cast<double>(t));

    const Eigen::Index ext = 5;
    const Eigen::Index w = 10;
    const Series out = tsd::extend_endpoints_gm(x, ext, w);
    REQUIRE(out.size() == n + 2 * ext);
    CHECK((out.segment(ext, n) == x).all());

    // right side: the trailing window is exactly geometric, so the fitted
    // model and its continuation are known in closed form
    const double c_right = x[n - w];
    const auto [ar, br] = oracle::gm_exact_geometric(c_right, rho);
    for (Eigen::Index h = 1; h <= ext; ++h) {
        const double want = oracle::gm_closed_form(ar, br, c_right, w + h);
        CHECK(oracle::rel_err(out[ext + n - 1 + h], want) < 1e-6);
    }

    // left side: the reversed leading window is geometric with ratio 1/rho
    const double c_left = x[w - 1];
    const auto [al, bl] = oracle::gm_exact_geometric(c_left, 1.0 / rho);
    for (Eigen::Index h = 1; h <= ext; ++h) {
        const double want = oracle::gm_closed_form(al, bl, c_left, w + h);
        CHECK(oracle::rel_err(out[ext - h], want) < 1e-6);
    }
}

TEST_CASE("extend_endpoints_gm keeps a constant tail constant") {
    const Series x = Series::Constant(20, 3.25);
    const Series out = tsd::extend_endpoints_gm(x, 4);
    REQUIRE(out.size() == 28);
    for (Eigen::Index i = 0; i < out.size(); ++i)
        CHECK(out[i] == doctest::Approx(3.25).epsilon(1e-9));
}

TEST_CASE("extend_endpoints_gm rejects short input") {
    CHECK_THROWS_AS(tsd::extend_endpoints_gm(ramp(4), 2), tsd::Error);
}
