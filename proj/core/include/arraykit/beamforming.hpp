#pragma once

#include "arraykit/quantities.hpp"

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace arraykit {

class degenerate_pattern_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class beamwidth_undefined_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Uniformly spaced linear array along the array axis.
struct LinearArrayConfig {
    std::size_t n_elements = 1;
    double spacing_m = 0.0;
    std::vector<double> amplitudes;        // per element, non-negative
    double progressive_phase_rad = 0.0;    // beta, phase step between adjacent elements

    static LinearArrayConfig uniform(std::size_t n, double spacing_m, double beta_rad = 0.0) {
        LinearArrayConfig c;
        c.n_elements = n;
        c.spacing_m = spacing_m;
        c.amplitudes.assign(n, 1.0);
        c.progressive_phase_rad = beta_rad;
        return c;
    }

    void validate() const {
        if (n_elements < 1) throw std::domain_error("array needs at least one element");
        if (!(spacing_m > 0.0)) throw std::domain_error("element spacing must be positive");
        if (amplitudes.size() != n_elements)
            throw std::domain_error("amplitude count must match element count");
        bool any = false;
        for (double a : amplitudes) {
            if (a < 0.0) throw std::domain_error("amplitudes must be non-negative");
            if (a > 0.0) any = true;
        }
        if (!any) throw std::domain_error("at least one amplitude must be positive");
    }
};

/// Separable rectangular array: row axis x column axis.
struct PlanarArrayConfig {
    LinearArrayConfig rows;
    LinearArrayConfig cols;

    void validate() const {
        rows.validate();
        cols.validate();
    }
};

/// Element pattern for pattern multiplication: magnitude = cos^q of the
/// broadside-offset angle. q = 0 is isotropic.
struct ElementPatternModel {
    double exponent_q = 0.0;

    static ElementPatternModel isotropic() { return ElementPatternModel{0.0}; }
    static ElementPatternModel cosine(double q = 1.0) {
        if (q < 0.0) throw std::domain_error("cosine exponent must be non-negative");
        return ElementPatternModel{q};
    }

    /// Linear magnitude at a from-array-axis angle.
    double magnitude(Angle theta) const {
        if (exponent_q == 0.0) return 1.0;
        const double c = std::cos(theta.broadside_offset_rad());
        return c <= 0.0 ? 0.0 : std::pow(c, exponent_q);
    }
};

/// Peak-normalized far-field cut over [0, 180] degrees, from-array-axis.
struct PatternTrace {
    std::vector<double> angles_deg;    // strictly increasing, covers [0, 180]
    std::vector<double> magnitudes_db; // peak at 0 dB
    double frequency_hz = 0.0;
    std::string description;
};

enum class GratingVerdict { safe, grating };

struct ScanRow {
    double target_theta_deg = 0.0;
    double beta_rad = 0.0;
    double achieved_peak_deg = 0.0;
    double peak_error_deg = 0.0;
    std::optional<double> sidelobe_db;
    std::optional<double> hpbw_deg;
    GratingVerdict grating = GratingVerdict::safe;
};

/// beta = -k*d*cos(theta0): progressive phase that steers the main lobe to theta0.
double steering_phase(double spacing_m, Frequency f, Angle theta0);

/// AF(theta) = sum_n a_n * exp(j*n*(k*d*cos(theta) + beta)).
std::complex<double> array_factor(const LinearArrayConfig& config, Frequency f, Angle theta);

/// Pattern-multiplication trace, |AF| * element magnitude, peak-normalized in dB.
PatternTrace pattern_trace(const LinearArrayConfig& config, Frequency f,
                           const ElementPatternModel& element, double grid_step_deg = 0.1);

/// Angle of the global maximum; parabolic refinement around the discrete peak,
/// ties broken toward the smaller angle.
Angle main_lobe_direction(const PatternTrace& trace);

/// Width in degrees between the -3 dB crossings bracketing the main lobe.
double half_power_beamwidth(const PatternTrace& trace);

/// Highest local maximum separated from the main lobe by a minimum; nullopt
/// when the pattern has no sidelobe.
std::optional<double> sidelobe_level(const PatternTrace& trace);

/// safe iff d/lambda < 1/(1 + |cos(theta0)|); boundary equality is grating.
GratingVerdict grating_lobe_check(double spacing_m, Frequency f, Angle theta0);

/// Directivity in dBi, treating the cut as a figure of revolution about the
/// array axis; composite-trapezoid integration over the grid.
double directivity_dbi(const PatternTrace& trace);

/// Per-target steering study: beta, achieved peak, peak error, SLL, HPBW,
/// grating verdict.
std::vector<ScanRow> scan_sweep(const LinearArrayConfig& config, Frequency f,
                                const ElementPatternModel& element,
                                const std::vector<Angle>& targets,
                                double grid_step_deg = 0.1);

/// Separable planar product: |AF_rows(theta)| * |AF_cols(phi)| * element(theta).
double planar_pattern(const PlanarArrayConfig& config, Frequency f,
                      const ElementPatternModel& element, Angle theta, Angle phi);

} // namespace arraykit
