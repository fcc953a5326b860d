#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "ecsim/model.hpp"

using namespace ecsim;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("spherical coordinates: single coupling has no angles") {
    const SphericalCoupling sc = spherical_from_couplings({0.7});
    CHECK(sc.total_coupling == doctest::Approx(0.7).epsilon(1e-14));
    CHECK(sc.angles.empty());
}

TEST_CASE("spherical coordinates: known decompositions") {
    const SphericalCoupling sc2 = spherical_from_couplings({1.0, 1.0});
    CHECK(sc2.total_coupling == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    REQUIRE(sc2.angles.size() == 1);
    CHECK(sc2.angles[0] == doctest::Approx(kPi / 4.0).epsilon(1e-14));

    const SphericalCoupling sc3 = spherical_from_couplings({3.0, 4.0, 0.0});
    CHECK(sc3.total_coupling == doctest::Approx(5.0).epsilon(1e-14));
    REQUIRE(sc3.angles.size() == 2);
    CHECK(sc3.angles[0] == doctest::Approx(std::acos(3.0 / 5.0)).epsilon(1e-14));
    CHECK(sc3.angles[1] == doctest::Approx(0.0));
}

TEST_CASE("spherical coordinates: forward map hits the expected couplings") {
    SphericalCoupling sc;
    sc.total_coupling = 2.0;
    sc.angles = {kPi / 3.0};
    const std::vector<double> g = couplings_from_spherical(sc);
    REQUIRE(g.size() == 2);
    CHECK(g[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(g[1] == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
}

TEST_CASE("spherical coordinates: round trip over random nonnegative vectors") {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> dist(0.0, 3.0);
    std::uniform_int_distribution<int> n_dist(1, 8);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> g(static_cast<size_t>(n_dist(rng)));
        double sum = 0.0;
        for (double& gi : g) {
            gi = dist(rng);
            sum += gi;
        }
        if (sum == 0.0) g[0] = 1.0;
        const SphericalCoupling sc = spherical_from_couplings(g);
        const std::vector<double> back = couplings_from_spherical(sc);
        REQUIRE(back.size() == g.size());
        for (size_t i = 0; i < g.size(); ++i)
            CHECK(back[i] == doctest::Approx(g[i]).epsilon(1e-12).scale(1.0));
        for (double phi : sc.angles) {
            CHECK(phi >= 0.0);
            CHECK(phi <= kPi / 2.0 + 1e-12);
        }
    }
}

TEST_CASE("spherical coordinates: rejects bad input") {
    CHECK_THROWS_AS(spherical_from_couplings({}), std::invalid_argument);
    CHECK_THROWS_AS(spherical_from_couplings({1.0, -0.5}), std::invalid_argument);
    CHECK_THROWS_AS(spherical_from_couplings({0.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(couplings_from_spherical(SphericalCoupling{0.0, {}}),
                    std::invalid_argument);
}

TEST_CASE("system config validation") {
    CHECK_THROWS_AS(SystemConfig::equal_couplings(0), std::invalid_argument);
    SystemConfig cfg;
    cfg.n_excitons = 2;
    cfg.couplings = {1.0};
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.couplings = {0.0, 0.0};
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.couplings = {1.0, -1.0};
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.couplings = {1.0, 1.0};
    cfg.alpha = 0.0;
    cfg.theta = kPi;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("lossless amplitudes at t = 0 reproduce the preparation") {
    const SystemConfig cfg = SystemConfig::equal_couplings(3, 1.0, {1.5, 0.5});
    const AmplitudeSet aset = lossless_amplitudes(cfg, 0.0);
    REQUIRE(aset.n_modes() == 4);
    CHECK(std::abs(aset.amps[0] - cfg.alpha) < 1e-15);
    for (int n = 1; n < 4; ++n) CHECK(std::abs(aset.amps[static_cast<size_t>(n)]) == 0.0);
    CHECK(aset.overlaps[0] ==
          doctest::Approx(std::exp(-2.0 * std::norm(cfg.alpha))).epsilon(1e-14));
    CHECK(aset.overlaps[1] == 1.0);
    CHECK(aset.m_factors[1] == 0.0);
}

TEST_CASE("lossless amplitudes: quarter period empties the cavity evenly") {
    const double omega = 0.7;
    const Complex alpha{1.2, -0.4};
    const SystemConfig cfg = SystemConfig::equal_couplings(4, 1.0, alpha, 0.0, omega);
    const double t = kPi / 2.0;
    const AmplitudeSet aset = lossless_amplitudes(cfg, t);
    CHECK(std::abs(aset.amps[0]) < 1e-15);
    const Complex expected = Complex(0.0, -1.0) * alpha / 2.0 *
                             std::exp(Complex(0.0, -omega * t));
    for (int n = 1; n <= 4; ++n)
        CHECK(std::abs(aset.amps[static_cast<size_t>(n)] - expected) < 1e-14);
}

TEST_CASE("lossless amplitudes: energy conservation across random draws") {
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> g_dist(0.0, 2.0);
    std::uniform_real_distribution<double> t_dist(0.0, 10.0);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * kPi);
    std::uniform_int_distribution<int> n_dist(1, 7);
    for (int trial = 0; trial < 200; ++trial) {
        SystemConfig cfg;
        cfg.n_excitons = n_dist(rng);
        cfg.couplings.resize(static_cast<size_t>(cfg.n_excitons));
        for (double& g : cfg.couplings) g = g_dist(rng) + 1e-3;
        cfg.omega = phase(rng);
        cfg.alpha = 1.7 * std::exp(Complex(0.0, phase(rng)));
        const AmplitudeSet aset = lossless_amplitudes(cfg, t_dist(rng));
        CHECK(aset.mode_energy(0, aset.n_modes()) ==
              doctest::Approx(std::norm(cfg.alpha)).epsilon(1e-12));
    }
}

TEST_CASE("lossless amplitudes: overlaps are frame independent") {
    for (double t : {0.3, 0.9, 2.2}) {
        AmplitudeSet ref = lossless_amplitudes(
            SystemConfig::equal_couplings(3, 1.0, {1.1, 0.6}, 0.0, 0.0), t);
        for (double omega : {1.0, 5.0}) {
            const AmplitudeSet rotated = lossless_amplitudes(
                SystemConfig::equal_couplings(3, 1.0, {1.1, 0.6}, 0.0, omega), t);
            for (int k = 0; k < ref.n_modes(); ++k) {
                CHECK(std::abs(rotated.overlaps[static_cast<size_t>(k)] -
                               ref.overlaps[static_cast<size_t>(k)]) < 1e-12);
                CHECK(std::abs(rotated.m_factors[static_cast<size_t>(k)] -
                               ref.m_factors[static_cast<size_t>(k)]) < 1e-12);
            }
        }
    }
}

TEST_CASE("lossless amplitudes: moduli have period pi/G") {
    const SystemConfig cfg = SystemConfig::equal_couplings(2, 1.7, {0.9, 0.2}, 0.0, 0.4);
    const double period = kPi / cfg.total_coupling();
    for (double t : {0.1, 0.77, 1.9}) {
        const AmplitudeSet a = lossless_amplitudes(cfg, t);
        const AmplitudeSet b = lossless_amplitudes(cfg, t + period);
        for (int k = 0; k < a.n_modes(); ++k) {
            CHECK(std::abs(std::abs(a.amps[static_cast<size_t>(k)]) -
                           std::abs(b.amps[static_cast<size_t>(k)])) < 1e-12);
            CHECK(std::abs(a.overlaps[static_cast<size_t>(k)] -
                           b.overlaps[static_cast<size_t>(k)]) < 1e-12);
        }
    }
}

TEST_CASE("consistency of stored overlaps with amplitudes") {
    const SystemConfig cfg = SystemConfig::equal_couplings(3, 1.0, {1.3, 0.4});
    const AmplitudeSet aset = lossless_amplitudes(cfg, 1.1);
    for (int k = 0; k < aset.n_modes(); ++k) {
        const double a2 = std::norm(aset.amps[static_cast<size_t>(k)]);
        const double p = aset.overlaps[static_cast<size_t>(k)];
        const double m = aset.m_factors[static_cast<size_t>(k)];
        CHECK(std::abs(p - std::exp(-2.0 * a2)) < 1e-14);
        CHECK(std::abs(m * m + p * p - 1.0) < 1e-14);
    }
}

TEST_CASE("cat normalization") {
    SystemConfig cfg = SystemConfig::equal_couplings(2, 1.0, {1.0, 0.8});
    cfg.theta = kPi / 2.0;
    AmplitudeSet aset = lossless_amplitudes(cfg, 0.6);
    CHECK(cat_normalization(cfg, aset) ==
          doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));

    cfg.theta = 0.0;
    cfg.alpha = 0.0;
    aset = lossless_amplitudes(cfg, 0.0);
    CHECK(cat_normalization(cfg, aset) == doctest::Approx(0.5).epsilon(1e-14));

    cfg.alpha = std::sqrt(3.0);
    cfg.theta = kPi;
    aset = lossless_amplitudes(cfg, 0.9);
    CHECK(cat_normalization(cfg, aset) ==
          doctest::Approx(1.0 / std::sqrt(2.0 - 2.0 * std::exp(-6.0))).epsilon(1e-13));
}

TEST_CASE("mean photon number") {
    SystemConfig cfg =
        SystemConfig::equal_couplings(2, 1.0, Complex{1.3, 0.7}, kPi / 2.0);
    CHECK(mean_photon(cfg) == doctest::Approx(std::norm(cfg.alpha)).epsilon(1e-12));

    // odd cat: one photon survives as alpha -> 0
    cfg.alpha = 1e-3;
    cfg.theta = kPi;
    CHECK(mean_photon(cfg) == doctest::Approx(1.0).epsilon(1e-5));

    // even cat: empties as alpha -> 0
    cfg.theta = 0.0;
    CHECK(mean_photon(cfg) == doctest::Approx(0.0).scale(1.0).epsilon(1e-5));
}

TEST_CASE("decay coefficients: initial values and basic guards") {
    DecayConfig dc;
    dc.gamma = 0.5;
    dc.g = 1.0;
    dc.n_excitons = 3;
    const DecayCoefficients c0 = decay_coefficients(dc, 0.0);
    CHECK(std::abs(c0.u - Complex{1.0, 0.0}) < 1e-15);
    CHECK(std::abs(c0.v) < 1e-15);
    CHECK_THROWS_AS(decay_coefficients(dc, -0.1), std::domain_error);
    dc.g = 0.0;
    CHECK_THROWS_AS(decay_coefficients(dc, 1.0), std::invalid_argument);
}

TEST_CASE("decay coefficients: lossless limit matches the closed-form amplitudes") {
    DecayConfig dc;
    dc.gamma = 0.0;
    dc.g = 0.8;
    dc.n_excitons = 4;
    dc.omega = 1.3;
    const Complex alpha{0.9, 0.5};
    const double big_g = dc.g * std::sqrt(4.0);
    const SystemConfig cfg =
        SystemConfig::equal_couplings(4, big_g, alpha, 0.0, dc.omega);
    for (double t : {0.0, 0.4, 1.7, 3.3}) {
        const DecayCoefficients c = decay_coefficients(dc, t);
        const AmplitudeSet aset = lossless_amplitudes(cfg, t);
        CHECK(std::abs(alpha * std::conj(c.u) - aset.amps[0]) < 1e-13);
        CHECK(std::abs(alpha * std::conj(c.v) - aset.amps[1]) < 1e-13);
        CHECK(std::abs(std::norm(c.u) + 4.0 * std::norm(c.v) - 1.0) < 1e-12);
    }
}

TEST_CASE("decay coefficients: amplitude transfer never exceeds unity") {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> gamma_dist(0.0, 6.0);
    std::uniform_real_distribution<double> t_dist(0.0, 12.0);
    std::uniform_int_distribution<int> n_dist(1, 6);
    for (int trial = 0; trial < 200; ++trial) {
        DecayConfig dc;
        dc.gamma = gamma_dist(rng);
        dc.g = 1.0;
        dc.n_excitons = n_dist(rng);
        const DecayCoefficients c = decay_coefficients(dc, t_dist(rng));
        CHECK(std::norm(c.u) + dc.n_excitons * std::norm(c.v) <= 1.0 + 1e-12);
    }
}

TEST_CASE("decay coefficients: envelope bound in the underdamped regime") {
    DecayConfig dc;
    dc.gamma = 0.5;
    dc.g = 1.0;
    dc.n_excitons = 2;
    const double rate = dc.n_excitons * dc.gamma / 4.0;
    for (int i = 0; i <= 120; ++i) {
        const double t = 0.1 * i;
        const DecayCoefficients c = decay_coefficients(dc, t);
        const double bound =
            std::exp(-rate * t) * (1.0 + rate / std::abs(c.delta_n));
        CHECK(std::abs(c.u) <= bound + 1e-12);
    }
}

TEST_CASE("decay coefficients: critical damping and overdamped branch") {
    DecayConfig dc;
    dc.gamma = 4.0;  // exactly critical for N = 1, g = 1
    dc.g = 1.0;
    dc.n_excitons = 1;
    for (double t : {0.1, 0.5, 2.0}) {
        const DecayCoefficients c = decay_coefficients(dc, t);
        CHECK(std::abs(c.u - std::exp(-t) * (1.0 + t)) < 1e-10);
    }

    // continuity across the critical point
    for (double t : {0.3, 1.2}) {
        dc.gamma = 4.0 * (1.0 - 1e-9);
        const Complex below = decay_coefficients(dc, t).u;
        dc.gamma = 4.0 * (1.0 + 1e-9);
        const Complex above = decay_coefficients(dc, t).u;
        CHECK(std::abs(below - above) < 1e-7);
    }

    // deep overdamped: monotone decay, no oscillation
    dc.gamma = 10.0;
    double prev = 1.0;
    for (int i = 1; i <= 40; ++i) {
        const double mag = std::abs(decay_coefficients(dc, 0.25 * i).u);
        CHECK(mag <= prev + 1e-15);
        prev = mag;
    }
}
