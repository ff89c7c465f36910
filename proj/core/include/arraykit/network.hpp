#pragma once

#include "arraykit/complex_matrix.hpp"
#include "arraykit/quantities.hpp"

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace arraykit {

class parse_error : public std::runtime_error {
public:
    parse_error(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Complex load impedance, ohms. Passive: Re >= 0.
struct Impedance {
    Complex ohms{50.0, 0.0};

    void validate() const {
        if (ohms.real() < 0.0) throw std::domain_error("passive impedance needs Re >= 0");
    }
};

/// Gamma = (Z_in - Z0) / (Z_in + Z0).
Complex reflection_coefficient(Impedance z_in, double z0 = 50.0);

/// 20*log10|Gamma| with the -200 dB floor; rejects |Gamma| > 1 + 1e-9.
double s11_db(Complex gamma);

struct Band {
    double f_low_hz = 0.0;
    double f_high_hz = 0.0;
    bool truncated_low = false;  // band begins at the sweep edge
    bool truncated_high = false; // band ends at the sweep edge
};

struct BandReport {
    std::vector<Band> bands;
    double threshold_db = -10.0;
};

/// Maximal intervals where the piecewise-linear trace is strictly below
/// threshold; crossings located by linear interpolation.
BandReport extract_bands(const std::vector<std::pair<double, double>>& sweep,
                         double threshold_db = -10.0);

/// Multi-port S-parameters over a monotone frequency grid.
struct SParameterSet {
    std::size_t n_ports = 1;
    std::vector<double> frequencies_hz;  // strictly increasing
    std::vector<ComplexMatrix> data;     // one n x n matrix per frequency
    double reference_impedance = 50.0;

    void validate() const;
};

struct IsolationEntry {
    std::size_t port_i = 0; // 1-based
    std::size_t port_j = 0;
    double worst_db = 0.0;
    double worst_frequency_hz = 0.0;
    bool pass = false;
};

struct IsolationReport {
    double threshold_db = -25.0;
    std::vector<IsolationEntry> pairs;
    bool all_pass = true;
};

/// Worst-case coupling per ordered port pair against the isolation goal.
IsolationReport isolation_report(const SParameterSet& s, double threshold_db = -25.0);

enum class TouchstoneFormat { MA, RI, DB };

/// Touchstone v1 reader. Port count is inferred from the data-line structure
/// (1-4 ports) unless a hint from the .sNp filename is supplied.
SParameterSet parse_touchstone(const std::string& text,
                               std::optional<std::size_t> n_ports_hint = std::nullopt);

/// Port-count hint from a `.sNp` file name, if the extension matches.
std::optional<std::size_t> port_count_from_filename(const std::string& name);

/// Touchstone v1 writer, GHz / S / R 50 option line, 9 significant digits.
std::string write_touchstone(const SParameterSet& s, TouchstoneFormat format);

} // namespace arraykit
