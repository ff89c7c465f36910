#include "arraykit/quantities.hpp"

#include <doctest.h>

#include <random>

using namespace arraykit;

TEST_CASE("wavelength basics") {
    CHECK(wavelength(Frequency(speed_of_light)) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(wavelength(Frequency::ghz(28)) == doctest::Approx(10.7068735e-3).epsilon(1e-9));
    CHECK(wavelength(Frequency::ghz(5.9)) == doctest::Approx(50.81228102e-3).epsilon(1e-9));
    CHECK_THROWS_AS(Frequency(0.0), std::domain_error);
    CHECK_THROWS_AS(Frequency(-1.0), std::domain_error);
}

TEST_CASE("wavelength times frequency recovers c") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> log_f(std::log(1e6), std::log(100e9));
    for (int i = 0; i < 1000; ++i) {
        const double f = std::exp(log_f(rng));
        CHECK(wavelength(Frequency(f)) * f ==
              doctest::Approx(speed_of_light).epsilon(1e-12));
    }
}

TEST_CASE("db_power") {
    CHECK(db_power(1.0) == 0.0);
    CHECK(db_power(100.0) == doctest::Approx(20.0).epsilon(1e-15));
    CHECK(db_power(0.0) == db_floor);
    CHECK_THROWS_AS(db_power(-0.1), std::domain_error);
}

TEST_CASE("angle conventions") {
    CHECK(Angle::broadside_offset_deg(0.0).axis_deg() == doctest::Approx(90.0));
    CHECK(Angle::broadside_offset_deg(30.0).axis_deg() == doctest::Approx(60.0));
    CHECK(Angle::broadside_offset_deg(-30.0).axis_deg() == doctest::Approx(120.0));
    CHECK(Angle::from_axis_deg(180.0).broadside_offset_deg() == doctest::Approx(-90.0));
    CHECK_THROWS_AS(Angle::from_axis_deg(-1.0), std::domain_error);
    CHECK_THROWS_AS(Angle::from_axis_deg(181.0), std::domain_error);
    CHECK_THROWS_AS(Angle::broadside_offset_deg(91.0), std::domain_error);
}

TEST_CASE("angle round trip is the identity") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> offset(-90.0, 90.0);
    for (int i = 0; i < 1000; ++i) {
        const double phi = offset(rng);
        const Angle a = Angle::broadside_offset_deg(phi);
        const Angle b = Angle::from_axis_rad(a.axis_rad());
        CHECK(b.broadside_offset_deg() == doctest::Approx(phi).epsilon(1e-12));
    }
}
