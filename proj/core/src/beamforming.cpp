#include "arraykit/beamforming.hpp"

#include <algorithm>
#include <cmath>

namespace arraykit {

double steering_phase(double spacing_m, Frequency f, Angle theta0) {
    if (!(spacing_m > 0.0)) throw std::domain_error("element spacing must be positive");
    const double k = Wavenumber::of(f).rad_per_m();
    return -k * spacing_m * std::cos(theta0.axis_rad());
}

std::complex<double> array_factor(const LinearArrayConfig& config, Frequency f, Angle theta) {
    config.validate();
    const double k = Wavenumber::of(f).rad_per_m();
    const double psi = k * config.spacing_m * std::cos(theta.axis_rad()) +
                       config.progressive_phase_rad;
    std::complex<double> sum{0.0, 0.0};
    for (std::size_t n = 0; n < config.n_elements; ++n)
        sum += config.amplitudes[n] * std::polar(1.0, static_cast<double>(n) * psi);
    return sum;
}

PatternTrace pattern_trace(const LinearArrayConfig& config, Frequency f,
                           const ElementPatternModel& element, double grid_step_deg) {
    // an all-zero taper radiates nothing: that is a degenerate computation,
    // not a malformed configuration
    if (config.amplitudes.size() == config.n_elements &&
        std::all_of(config.amplitudes.begin(), config.amplitudes.end(),
                    [](double a) { return a == 0.0; }))
        throw degenerate_pattern_error("pattern is identically zero");
    config.validate();
    if (!(grid_step_deg > 0.0) || grid_step_deg > 5.0)
        throw std::domain_error("grid step must lie in (0, 5] degrees");

    std::vector<double> angles;
    const auto steps = static_cast<std::size_t>(std::floor(180.0 / grid_step_deg + 1e-9));
    angles.reserve(steps + 2);
    for (std::size_t i = 0; i <= steps; ++i) angles.push_back(i * grid_step_deg);
    if (angles.back() < 180.0 - 1e-12) angles.push_back(180.0);
    else angles.back() = 180.0;

    std::vector<double> linear(angles.size());
    double peak = 0.0;
    for (std::size_t i = 0; i < angles.size(); ++i) {
        const Angle theta = Angle::from_axis_deg(angles[i]);
        const double mag = std::abs(array_factor(config, f, theta)) * element.magnitude(theta);
        linear[i] = mag;
        peak = std::max(peak, mag);
    }
    if (peak == 0.0)
        throw degenerate_pattern_error("pattern is identically zero");

    PatternTrace trace;
    trace.angles_deg = std::move(angles);
    trace.magnitudes_db.resize(linear.size());
    for (std::size_t i = 0; i < linear.size(); ++i)
        trace.magnitudes_db[i] = db_magnitude(linear[i] / peak);
    trace.frequency_hz = f.hertz();
    return trace;
}

namespace {

void require_trace(const PatternTrace& trace) {
    if (trace.angles_deg.size() < 2 ||
        trace.angles_deg.size() != trace.magnitudes_db.size())
        throw degenerate_pattern_error("trace is empty or inconsistent");
}

std::size_t discrete_peak(const PatternTrace& trace) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < trace.magnitudes_db.size(); ++i)
        if (trace.magnitudes_db[i] > trace.magnitudes_db[best]) best = i;
    return best;
}

/// Strict local maxima, boundaries included when they dominate their neighbor.
std::vector<std::size_t> local_maxima(const std::vector<double>& v) {
    std::vector<std::size_t> out;
    const std::size_t n = v.size();
    if (v[0] > v[1]) out.push_back(0);
    for (std::size_t i = 1; i + 1 < n; ++i)
        if (v[i] > v[i - 1] && v[i] >= v[i + 1]) out.push_back(i);
    if (v[n - 1] > v[n - 2]) out.push_back(n - 1);
    return out;
}

} // namespace

Angle main_lobe_direction(const PatternTrace& trace) {
    require_trace(trace);
    const std::size_t p = discrete_peak(trace);
    double angle = trace.angles_deg[p];
    if (p > 0 && p + 1 < trace.angles_deg.size()) {
        const double y0 = trace.magnitudes_db[p - 1];
        const double y1 = trace.magnitudes_db[p];
        const double y2 = trace.magnitudes_db[p + 1];
        const double denom = y0 - 2.0 * y1 + y2;
        if (denom < -1e-15 && y0 > db_floor && y2 > db_floor) {
            const double delta = std::clamp(0.5 * (y0 - y2) / denom, -0.5, 0.5);
            const double h = trace.angles_deg[p + 1] - trace.angles_deg[p];
            angle += delta * h;
        }
    }
    return Angle::from_axis_deg(angle);
}

double half_power_beamwidth(const PatternTrace& trace) {
    require_trace(trace);
    const std::size_t p = discrete_peak(trace);
    const double level = trace.magnitudes_db[p] - 3.0;

    auto interpolate = [&](std::size_t lo, std::size_t hi) {
        const double a0 = trace.angles_deg[lo], a1 = trace.angles_deg[hi];
        const double v0 = trace.magnitudes_db[lo], v1 = trace.magnitudes_db[hi];
        return a0 + (level - v0) / (v1 - v0) * (a1 - a0);
    };

    double left = -1.0, right = -1.0;
    for (std::size_t i = p; i > 0; --i) {
        if (trace.magnitudes_db[i - 1] < level) {
            left = interpolate(i - 1, i);
            break;
        }
    }
    for (std::size_t i = p; i + 1 < trace.magnitudes_db.size(); ++i) {
        if (trace.magnitudes_db[i + 1] < level) {
            right = interpolate(i + 1, i);
            break;
        }
    }
    if (left < 0.0 || right < 0.0)
        throw beamwidth_undefined_error("main lobe lacks a -3 dB crossing inside the grid");
    return right - left;
}

std::optional<double> sidelobe_level(const PatternTrace& trace) {
    require_trace(trace);
    const std::size_t main = discrete_peak(trace);
    const auto& mag = trace.magnitudes_db;

    std::optional<double> best;
    for (std::size_t idx : local_maxima(mag)) {
        if (idx == main || mag[idx] <= db_floor) continue;
        // require an intervening dip below the candidate level
        const auto [lo, hi] = std::minmax(idx, main);
        double valley = mag[lo];
        for (std::size_t j = lo; j <= hi; ++j) valley = std::min(valley, mag[j]);
        if (valley >= mag[idx] - 1e-9) continue;
        if (!best || mag[idx] > *best) best = mag[idx];
    }
    return best;
}

GratingVerdict grating_lobe_check(double spacing_m, Frequency f, Angle theta0) {
    if (!(spacing_m > 0.0)) throw std::domain_error("element spacing must be positive");
    const double ratio = spacing_m / wavelength(f);
    const double limit = 1.0 / (1.0 + std::abs(std::cos(theta0.axis_rad())));
    return ratio < limit ? GratingVerdict::safe : GratingVerdict::grating;
}

double directivity_dbi(const PatternTrace& trace) {
    require_trace(trace);
    // figure of revolution about the array axis:
    // D = 4*pi*U_max / (2*pi * integral U(theta) sin(theta) dtheta)
    double integral = 0.0;
    double u_max = 0.0;
    auto u = [&](std::size_t i) {
        return std::pow(10.0, trace.magnitudes_db[i] / 10.0);
    };
    for (std::size_t i = 0; i + 1 < trace.angles_deg.size(); ++i) {
        const double t0 = trace.angles_deg[i] * deg_to_rad;
        const double t1 = trace.angles_deg[i + 1] * deg_to_rad;
        const double f0 = u(i) * std::sin(t0);
        const double f1 = u(i + 1) * std::sin(t1);
        integral += 0.5 * (f0 + f1) * (t1 - t0);
    }
    for (std::size_t i = 0; i < trace.magnitudes_db.size(); ++i)
        u_max = std::max(u_max, u(i));
    if (integral <= 0.0 || u_max <= 0.0)
        throw degenerate_pattern_error("directivity undefined for a degenerate trace");
    return db_power(2.0 * u_max / integral);
}

std::vector<ScanRow> scan_sweep(const LinearArrayConfig& config, Frequency f,
                                const ElementPatternModel& element,
                                const std::vector<Angle>& targets,
                                double grid_step_deg) {
    config.validate();
    std::vector<ScanRow> rows;
    rows.reserve(targets.size());
    for (const Angle& target : targets) {
        ScanRow row;
        row.target_theta_deg = target.axis_deg();
        row.beta_rad = steering_phase(config.spacing_m, f, target);

        LinearArrayConfig steered = config;
        steered.progressive_phase_rad = row.beta_rad;
        const PatternTrace trace = pattern_trace(steered, f, element, grid_step_deg);

        row.achieved_peak_deg = main_lobe_direction(trace).axis_deg();
        row.peak_error_deg = row.achieved_peak_deg - row.target_theta_deg;
        row.sidelobe_db = sidelobe_level(trace);
        try {
            row.hpbw_deg = half_power_beamwidth(trace);
        } catch (const beamwidth_undefined_error&) {
            row.hpbw_deg = std::nullopt;
        }
        row.grating = grating_lobe_check(config.spacing_m, f, target);
        rows.push_back(std::move(row));
    }
    return rows;
}

double planar_pattern(const PlanarArrayConfig& config, Frequency f,
                      const ElementPatternModel& element, Angle theta, Angle phi) {
    config.validate();
    return std::abs(array_factor(config.rows, f, theta)) *
           std::abs(array_factor(config.cols, f, phi)) *
           element.magnitude(theta);
}

} // namespace arraykit
