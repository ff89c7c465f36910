#pragma once

#include "arraykit/beamforming.hpp"
#include "arraykit/design.hpp"
#include "arraykit/mimo.hpp"
#include "arraykit/network.hpp"

#include <string>
#include <vector>

namespace arraykit {

inline constexpr int report_schema_version = 1;

/// `theta_deg,magnitude_db`, ascending angles, 6 decimal places.
std::string pattern_trace_csv(const PatternTrace& trace);

/// One row per steering target.
std::string scan_sweep_csv(const std::vector<ScanRow>& rows);

/// `theta_tx_deg,theta_rx_deg,capacity_bps_hz`, 6 decimal places.
std::string capacity_sweep_csv(const std::vector<CapacityPoint>& points);

/// `parameter,simulated,measured,units,delta`.
std::string comparison_table_csv(const ComparisonTable& table);

/// Per-port S11 trace in dB: `frequency_hz,port,s11_db`.
std::string s11_trace_csv(const SParameterSet& s);

/// Candidate geometry as JSON (deterministic key order).
std::string candidate_json(const DesignCandidate& candidate);
DesignCandidate candidate_from_json(const std::string& text);

/// Compliance report JSON: goals echoed plus per-goal verdict objects.
std::string compliance_json(const ComplianceReport& report, const DesignGoals& goals);

/// Pattern metrics JSON (peak, HPBW, SLL, directivity).
std::string pattern_metrics_json(const PatternTrace& trace);

/// Band + isolation report JSON for an S-parameter analysis run.
std::string sparams_report_json(const SParameterSet& s,
                                const std::vector<BandReport>& bands_per_port,
                                const IsolationReport* isolation);

/// Fixed 600x600 polar plot, 10 dB rings down to -40 dB, main lobe annotated.
std::string polar_plot_svg(const PatternTrace& trace);

} // namespace arraykit
