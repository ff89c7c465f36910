#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace arraykit {

inline constexpr double speed_of_light = 299'792'458.0; // m/s, exact
inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr double deg_to_rad = pi / 180.0;
inline constexpr double rad_to_deg = 180.0 / pi;

// Finite floor for log-scale magnitudes; keeps traces serializable.
inline constexpr double db_floor = -200.0;

/// Positive frequency in hertz.
class Frequency {
public:
    explicit Frequency(double hertz) : hz_(hertz) {
        if (!(hertz > 0.0) || !std::isfinite(hertz))
            throw std::domain_error("Frequency must be positive and finite");
    }
    static Frequency hz(double v) { return Frequency(v); }
    static Frequency mhz(double v) { return Frequency(v * 1e6); }
    static Frequency ghz(double v) { return Frequency(v * 1e9); }

    double hertz() const { return hz_; }
    double gigahertz() const { return hz_ * 1e-9; }

private:
    double hz_;
};

/// Free-space wavelength, meters.
inline double wavelength(Frequency f) { return speed_of_light / f.hertz(); }

/// k = 2*pi/lambda, radians per meter.
class Wavenumber {
public:
    static Wavenumber of(Frequency f) { return Wavenumber(2.0 * pi / wavelength(f)); }
    double rad_per_m() const { return k_; }

private:
    explicit Wavenumber(double k) : k_(k) {}
    double k_;
};

/// Polar angle with two conventions:
///   - from-array-axis theta in [0, pi] (the convention all array math uses)
///   - broadside-offset phi in [-pi/2, pi/2], with theta = pi/2 - phi
/// The canonical stored value is from-array-axis.
class Angle {
public:
    static Angle from_axis_rad(double theta) {
        constexpr double slack = 1e-9;
        if (!(theta >= -slack && theta <= pi + slack))
            throw std::domain_error("from-array-axis angle must lie in [0, pi]");
        return Angle(std::clamp(theta, 0.0, pi));
    }
    static Angle from_axis_deg(double deg) { return from_axis_rad(deg * deg_to_rad); }
    static Angle broadside_offset_rad(double phi) {
        constexpr double slack = 1e-9;
        if (!(phi >= -pi / 2.0 - slack && phi <= pi / 2.0 + slack))
            throw std::domain_error("broadside-offset angle must lie in [-pi/2, pi/2]");
        return Angle(pi / 2.0 - phi);
    }
    static Angle broadside_offset_deg(double deg) { return broadside_offset_rad(deg * deg_to_rad); }

    double axis_rad() const { return theta_; }
    double axis_deg() const { return theta_ * rad_to_deg; }
    double broadside_offset_rad() const { return pi / 2.0 - theta_; }
    double broadside_offset_deg() const { return broadside_offset_rad() * rad_to_deg; }

private:
    explicit Angle(double theta) : theta_(theta) {}
    double theta_; // from-array-axis, radians
};

/// 10*log10(ratio) with the documented -200 dB floor at zero.
inline double db_power(double ratio) {
    if (ratio < 0.0) throw std::domain_error("power ratio must be non-negative");
    if (ratio == 0.0) return db_floor;
    return std::max(10.0 * std::log10(ratio), db_floor);
}

/// 20*log10(magnitude) with the same floor.
inline double db_magnitude(double magnitude) {
    if (magnitude < 0.0) throw std::domain_error("magnitude must be non-negative");
    if (magnitude == 0.0) return db_floor;
    return std::max(20.0 * std::log10(magnitude), db_floor);
}

} // namespace arraykit
