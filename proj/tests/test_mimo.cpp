#include "arraykit/mimo.hpp"

#include <doctest.h>

#include <random>

using namespace arraykit;

namespace {

const Frequency f59 = Frequency::ghz(5.9);

LinearArrayConfig half_wave_array(std::size_t n) {
    return LinearArrayConfig::uniform(n, wavelength(f59) / 2.0);
}

} // namespace

TEST_CASE("steering vector") {
    const auto v = steering_vector(4, wavelength(f59) / 2.0, f59,
                                   Angle::from_axis_deg(90.0));
    REQUIRE(v.size() == 4);
    for (const Complex& e : v) CHECK(std::abs(e - Complex{1.0, 0.0}) < 1e-12);

    // endfire, half-wave spacing: alternating signs
    const auto w = steering_vector(4, wavelength(f59) / 2.0, f59,
                                   Angle::from_axis_deg(0.0));
    CHECK(std::abs(w[1] - Complex{-1.0, 0.0}) < 1e-9);
    for (const Complex& e : w) CHECK(std::abs(e) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("capacity examples") {
    // identity 2x2 channel: two parallel streams
    ChannelMatrix id{ComplexMatrix::identity(2)};
    const double rho = 4.0;
    CHECK(capacity_bits(id, SnrContext{rho}) ==
          doctest::Approx(2.0 * std::log2(1.0 + rho / 2.0)).epsilon(1e-12));

    // zero SNR carries nothing
    CHECK(capacity_bits(id, SnrContext{0.0}) == doctest::Approx(0.0).epsilon(1e-15));

    CHECK_THROWS_AS(capacity_bits(id, SnrContext{-1.0}), std::domain_error);
}

TEST_CASE("LoS capacity hits the rank-1 closed form") {
    // H = a_rx a_tx^H gives C = log2(1 + rho * Nr) regardless of the angles
    std::mt19937 rng(83);
    std::uniform_real_distribution<double> ang(5.0, 175.0);
    const double rho = 10.0;
    for (int trial = 0; trial < 50; ++trial) {
        const auto tx = half_wave_array(4);
        const auto rx = half_wave_array(4);
        const ChannelMatrix h = los_channel(tx, rx, f59,
                                            Angle::from_axis_deg(ang(rng)),
                                            Angle::from_axis_deg(ang(rng)));
        CHECK(capacity_bits(h, SnrContext{rho}) ==
              doctest::Approx(std::log2(1.0 + rho * 4.0)).epsilon(1e-9));
    }
    // frozen spot value: log2(41)
    const ChannelMatrix h = los_channel(half_wave_array(4), half_wave_array(4), f59,
                                        Angle::from_axis_deg(60.0),
                                        Angle::from_axis_deg(110.0));
    CHECK(capacity_bits(h, SnrContext::from_db(10.0)) ==
          doctest::Approx(5.357552).epsilon(1e-6));
}

TEST_CASE("matched beamforming gain") {
    const auto cfg = half_wave_array(4);
    // matched weights recover the full array gain N
    CHECK(matched_beamforming_gain(cfg, f59, Angle::from_axis_deg(73.0)) ==
          doctest::Approx(4.0).epsilon(1e-12));
    // orthogonal steering: psi step of pi/2 over four elements sums to zero
    CHECK(matched_beamforming_gain(cfg, f59, Angle::from_axis_deg(90.0),
                                   Angle::from_axis_deg(120.0)) ==
          doctest::Approx(0.0).scale(1.0).epsilon(1e-12));

    // mismatched gain never exceeds the matched gain
    std::mt19937 rng(97);
    std::uniform_real_distribution<double> ang(0.0, 180.0);
    for (int trial = 0; trial < 200; ++trial) {
        const double g = matched_beamforming_gain(cfg, f59, Angle::from_axis_deg(ang(rng)),
                                                  Angle::from_axis_deg(ang(rng)));
        CHECK(g >= 0.0);
        CHECK(g <= 4.0 + 1e-9);
    }

    // non-uniform tapers are outside the matched-filter contract
    LinearArrayConfig tapered = cfg;
    tapered.amplitudes = {1.0, 0.5, 0.5, 1.0};
    CHECK_THROWS_AS(matched_beamforming_gain(tapered, f59, Angle::from_axis_deg(90.0)),
                    std::domain_error);
}

TEST_CASE("capacity sweep grid") {
    const auto tx = half_wave_array(2);
    const auto rx = half_wave_array(4);
    const std::vector<Angle> grid = {
        Angle::from_axis_deg(60.0), Angle::from_axis_deg(90.0), Angle::from_axis_deg(120.0)};
    const auto points = capacity_sweep(tx, rx, f59, grid, SnrContext::from_db(10.0));
    REQUIRE(points.size() == 9);
    CHECK(points[0].theta_tx_deg == doctest::Approx(60.0));
    CHECK(points[0].theta_rx_deg == doctest::Approx(60.0));
    CHECK(points[1].theta_rx_deg == doctest::Approx(90.0));
    for (const auto& p : points)
        CHECK(p.capacity_bps_hz == doctest::Approx(std::log2(41.0)).epsilon(1e-9));
}
