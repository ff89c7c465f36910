#pragma once

#include "arraykit/beamforming.hpp"
#include "arraykit/network.hpp"
#include "arraykit/patch.hpp"
#include "arraykit/quantities.hpp"

#include <optional>
#include <string>
#include <vector>

namespace arraykit {

/// Quantitative targets for a dual-band vehicular array.
struct BandGoal {
    double center_hz = 0.0;
    double min_gain_dbi = 0.0;
};

struct DesignGoals {
    std::vector<BandGoal> bands;
    double steering_range_deg = 30.0;  // +/- broadside offset
    double max_footprint_x_mm = 60.0;
    double max_footprint_y_mm = 60.0;
    double min_isolation_db = 25.0;

    /// 5.9 GHz / 28 GHz dual-band defaults.
    static DesignGoals defaults() {
        DesignGoals g;
        g.bands = {{5.9e9, 7.0}, {28e9, 10.0}};
        return g;
    }

    void validate() const {
        if (bands.empty()) throw std::domain_error("at least one band goal required");
        for (const auto& b : bands) {
            if (!(b.center_hz > 0.0)) throw std::domain_error("band center must be positive");
            if (!(b.min_gain_dbi > 0.0)) throw std::domain_error("gain goal must be positive");
        }
        if (!(steering_range_deg > 0.0) || !(max_footprint_x_mm > 0.0) ||
            !(max_footprint_y_mm > 0.0) || !(min_isolation_db > 0.0))
            throw std::domain_error("goal thresholds must be positive");
    }
};

/// One band's array within a candidate: nx elements along the array axis,
/// ny across it (ny = 1 for a linear array).
struct BandDesign {
    double center_hz = 0.0;
    PatchGeometry patch;
    std::size_t elements_x = 1;
    std::size_t elements_y = 1;
    double spacing_m = 0.0; // lambda/2 at the band center

    double extent_x_m() const {
        return static_cast<double>(elements_x - 1) * spacing_m + patch.width_m;
    }
    double extent_y_m() const {
        return static_cast<double>(elements_y - 1) * spacing_m + patch.length_m;
    }
};

struct DesignCandidate {
    std::vector<BandDesign> bands;
    double guard_gap_m = 5e-3; // vertical spacing between stacked arrays
    double footprint_x_m = 0.0;
    double footprint_y_m = 0.0;
};

/// Per-band array shape override: elements along x and y.
struct ArrayShape {
    std::size_t nx = 0;
    std::size_t ny = 0;
};

/// Synthesize patches and lambda/2 layouts for every band goal. Default
/// shapes: 2x2 for the lowest band, 1x4 linear for the rest. Compliance is
/// not checked here.
DesignCandidate synthesize_candidate(
    const DesignGoals& goals, const Substrate& substrate,
    const std::vector<std::optional<ArrayShape>>& shape_overrides = {});

enum class Verdict { pass, fail, not_evaluable };

struct GoalResult {
    std::string goal;
    std::optional<double> computed;
    double threshold = 0.0;
    Verdict verdict = Verdict::not_evaluable;
    std::string note;
};

struct ComplianceReport {
    std::vector<GoalResult> results;

    bool all_evaluable_pass() const {
        for (const auto& r : results)
            if (r.verdict == Verdict::fail) return false;
        return true;
    }
};

/// Evaluate a candidate against the goals. Gain goals use the directivity
/// proxy under the cosine element model; isolation needs measured data.
ComplianceReport check_goals(const DesignCandidate& candidate, const DesignGoals& goals,
                             const std::optional<SParameterSet>& measured = std::nullopt,
                             double grid_step_deg = 0.1);

struct LabeledMetric {
    std::string name;
    double value = 0.0;
    std::string units;
};

struct ComparisonRow {
    std::string parameter;
    double simulated = 0.0;
    double measured = 0.0;
    std::string units;
    double delta = 0.0; // measured - simulated
};

struct ComparisonTable {
    std::vector<ComparisonRow> rows;
    std::vector<std::string> unmatched_simulated;
    std::vector<std::string> unmatched_measured;
};

/// Join two labeled metric sets on parameter name; delta = measured - simulated.
ComparisonTable comparison_table(const std::vector<LabeledMetric>& simulated,
                                 const std::vector<LabeledMetric>& measured);

} // namespace arraykit
