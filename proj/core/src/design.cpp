#include "arraykit/design.hpp"

#include <algorithm>
#include <cmath>

namespace arraykit {

DesignCandidate synthesize_candidate(
    const DesignGoals& goals, const Substrate& substrate,
    const std::vector<std::optional<ArrayShape>>& shape_overrides) {
    goals.validate();
    substrate.validate();

    std::size_t lowest = 0;
    for (std::size_t i = 1; i < goals.bands.size(); ++i)
        if (goals.bands[i].center_hz < goals.bands[lowest].center_hz) lowest = i;

    DesignCandidate candidate;
    for (std::size_t i = 0; i < goals.bands.size(); ++i) {
        const Frequency f(goals.bands[i].center_hz);
        BandDesign band;
        band.center_hz = f.hertz();
        band.patch = synthesize_patch(f, substrate);
        band.spacing_m = wavelength(f) / 2.0;
        if (i < shape_overrides.size() && shape_overrides[i]) {
            band.elements_x = shape_overrides[i]->nx;
            band.elements_y = shape_overrides[i]->ny;
            if (band.elements_x == 0 || band.elements_y == 0)
                throw std::domain_error("array shape needs positive element counts");
        } else if (i == lowest && goals.bands.size() > 1) {
            band.elements_x = 2;
            band.elements_y = 2;
        } else {
            band.elements_x = 4;
            band.elements_y = 1;
        }
        candidate.bands.push_back(band);
    }

    // arrays stacked along y with a guard gap between them
    double width = 0.0, height = 0.0;
    for (std::size_t i = 0; i < candidate.bands.size(); ++i) {
        width = std::max(width, candidate.bands[i].extent_x_m());
        height += candidate.bands[i].extent_y_m();
        if (i > 0) height += candidate.guard_gap_m;
    }
    candidate.footprint_x_m = width;
    candidate.footprint_y_m = height;
    return candidate;
}

namespace {

LinearArrayConfig axis_array(const BandDesign& band) {
    return LinearArrayConfig::uniform(band.elements_x, band.spacing_m);
}

std::string band_label(const BandDesign& band) {
    return std::to_string(band.center_hz * 1e-9).substr(0, 4) + " GHz";
}

} // namespace

ComplianceReport check_goals(const DesignCandidate& candidate, const DesignGoals& goals,
                             const std::optional<SParameterSet>& measured,
                             double grid_step_deg) {
    goals.validate();
    if (candidate.bands.empty())
        throw std::domain_error("candidate has no bands");

    ComplianceReport report;

    {
        GoalResult r;
        r.goal = "footprint";
        const double x_mm = candidate.footprint_x_m * 1e3;
        const double y_mm = candidate.footprint_y_m * 1e3;
        r.computed = std::max(x_mm, y_mm);
        r.threshold = std::min(goals.max_footprint_x_mm, goals.max_footprint_y_mm);
        const bool ok = x_mm <= goals.max_footprint_x_mm && y_mm <= goals.max_footprint_y_mm;
        r.verdict = ok ? Verdict::pass : Verdict::fail;
        r.note = "bounding box " + std::to_string(x_mm) + " x " + std::to_string(y_mm) + " mm";
        report.results.push_back(r);
    }

    // steering exactness is a pure array-factor property; the cosine element
    // model only enters the gain proxy
    const ElementPatternModel steering_element = ElementPatternModel::isotropic();
    const ElementPatternModel gain_element = ElementPatternModel::cosine(1.0);
    for (const BandDesign& band : candidate.bands) {
        const Frequency f(band.center_hz);
        const LinearArrayConfig config = axis_array(band);

        // steering goal: every target in +/-range lands within one grid step
        {
            GoalResult r;
            r.goal = "steering " + band_label(band);
            r.threshold = goals.steering_range_deg;
            std::vector<Angle> targets;
            for (double off = -goals.steering_range_deg; off <= goals.steering_range_deg + 1e-9;
                 off += goals.steering_range_deg / 2.0)
                targets.push_back(Angle::broadside_offset_deg(off));
            try {
                const auto rows = scan_sweep(config, f, steering_element, targets, grid_step_deg);
                double worst = 0.0;
                bool grating = false;
                for (const auto& row : rows) {
                    worst = std::max(worst, std::abs(row.peak_error_deg));
                    grating = grating || row.grating == GratingVerdict::grating;
                }
                r.computed = worst;
                r.verdict =
                    (!grating && worst <= grid_step_deg) ? Verdict::pass : Verdict::fail;
                r.note = "worst peak error " + std::to_string(worst) + " deg";
            } catch (const degenerate_pattern_error&) {
                r.verdict = Verdict::not_evaluable;
                r.note = "pattern degenerate";
            }
            report.results.push_back(r);
        }

        // gain goal via the directivity proxy (lossless, separable product model)
        {
            GoalResult r;
            r.goal = "gain " + band_label(band);
            double threshold = 0.0;
            for (const auto& g : goals.bands)
                if (g.center_hz == band.center_hz) threshold = g.min_gain_dbi;
            r.threshold = threshold;
            try {
                const PatternTrace trace = pattern_trace(config, f, gain_element, grid_step_deg);
                double proxy = directivity_dbi(trace);
                if (band.elements_y > 1)
                    proxy += db_power(static_cast<double>(band.elements_y));
                r.computed = proxy;
                r.verdict = proxy >= threshold ? Verdict::pass : Verdict::fail;
                r.note = "directivity proxy, cosine element, no loss model";
            } catch (const degenerate_pattern_error&) {
                r.verdict = Verdict::not_evaluable;
                r.note = "pattern degenerate";
            }
            report.results.push_back(r);
        }
    }

    {
        GoalResult r;
        r.goal = "isolation";
        r.threshold = goals.min_isolation_db;
        if (measured && measured->n_ports >= 2) {
            const IsolationReport iso = isolation_report(*measured, -goals.min_isolation_db);
            double worst = db_floor;
            for (const auto& p : iso.pairs) worst = std::max(worst, p.worst_db);
            r.computed = -worst;
            r.verdict = iso.all_pass ? Verdict::pass : Verdict::fail;
        } else {
            r.verdict = Verdict::not_evaluable;
            r.note = "no measured S-parameters supplied";
        }
        report.results.push_back(r);
    }

    return report;
}

ComparisonTable comparison_table(const std::vector<LabeledMetric>& simulated,
                                 const std::vector<LabeledMetric>& measured) {
    ComparisonTable table;
    for (const auto& sim : simulated) {
        const auto it = std::find_if(measured.begin(), measured.end(),
                                     [&](const LabeledMetric& m) { return m.name == sim.name; });
        if (it == measured.end()) {
            table.unmatched_simulated.push_back(sim.name);
            continue;
        }
        ComparisonRow row;
        row.parameter = sim.name;
        row.simulated = sim.value;
        row.measured = it->value;
        row.units = sim.units.empty() ? it->units : sim.units;
        row.delta = it->value - sim.value;
        table.rows.push_back(row);
    }
    for (const auto& m : measured) {
        const auto it = std::find_if(simulated.begin(), simulated.end(),
                                     [&](const LabeledMetric& s) { return s.name == m.name; });
        if (it == simulated.end()) table.unmatched_measured.push_back(m.name);
    }
    return table;
}

} // namespace arraykit
