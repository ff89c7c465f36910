#include "arraykit/reports.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <iomanip>
#include <sstream>

namespace arraykit {

namespace {

using nlohmann::ordered_json;

std::string fixed6(double v) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(6) << v;
    return out.str();
}

} // namespace

std::string pattern_trace_csv(const PatternTrace& trace) {
    std::ostringstream out;
    out << "theta_deg,magnitude_db\n";
    for (std::size_t i = 0; i < trace.angles_deg.size(); ++i)
        out << fixed6(trace.angles_deg[i]) << ',' << fixed6(trace.magnitudes_db[i]) << '\n';
    return out.str();
}

std::string scan_sweep_csv(const std::vector<ScanRow>& rows) {
    std::ostringstream out;
    out << "target_theta_deg,beta_rad,achieved_peak_deg,peak_error_deg,"
           "sidelobe_db,hpbw_deg,grating\n";
    for (const auto& r : rows) {
        out << fixed6(r.target_theta_deg) << ',' << fixed6(r.beta_rad) << ','
            << fixed6(r.achieved_peak_deg) << ',' << fixed6(r.peak_error_deg) << ',';
        out << (r.sidelobe_db ? fixed6(*r.sidelobe_db) : std::string("none")) << ',';
        out << (r.hpbw_deg ? fixed6(*r.hpbw_deg) : std::string("undefined")) << ',';
        out << (r.grating == GratingVerdict::safe ? "safe" : "grating") << '\n';
    }
    return out.str();
}

std::string capacity_sweep_csv(const std::vector<CapacityPoint>& points) {
    std::ostringstream out;
    out << "theta_tx_deg,theta_rx_deg,capacity_bps_hz\n";
    for (const auto& p : points)
        out << fixed6(p.theta_tx_deg) << ',' << fixed6(p.theta_rx_deg) << ','
            << fixed6(p.capacity_bps_hz) << '\n';
    return out.str();
}

std::string comparison_table_csv(const ComparisonTable& table) {
    std::ostringstream out;
    out << "parameter,simulated,measured,units,delta\n";
    for (const auto& r : table.rows)
        out << r.parameter << ',' << fixed6(r.simulated) << ',' << fixed6(r.measured) << ','
            << r.units << ',' << fixed6(r.delta) << '\n';
    return out.str();
}

std::string s11_trace_csv(const SParameterSet& s) {
    std::ostringstream out;
    out << "frequency_hz,port,s11_db\n";
    for (std::size_t k = 0; k < s.frequencies_hz.size(); ++k)
        for (std::size_t p = 0; p < s.n_ports; ++p)
            out << fixed6(s.frequencies_hz[k]) << ',' << (p + 1) << ','
                << fixed6(db_magnitude(std::abs(s.data[k](p, p)))) << '\n';
    return out.str();
}

std::string candidate_json(const DesignCandidate& candidate) {
    ordered_json j;
    j["schema_version"] = report_schema_version;
    j["guard_gap_m"] = candidate.guard_gap_m;
    j["footprint_x_m"] = candidate.footprint_x_m;
    j["footprint_y_m"] = candidate.footprint_y_m;
    j["bands"] = ordered_json::array();
    for (const auto& b : candidate.bands) {
        ordered_json band;
        band["center_hz"] = b.center_hz;
        band["patch"] = {{"length_m", b.patch.length_m},
                         {"width_m", b.patch.width_m},
                         {"substrate",
                          {{"epsilon_r", b.patch.substrate.epsilon_r},
                           {"tan_delta", b.patch.substrate.tan_delta},
                           {"thickness_m", b.patch.substrate.thickness_m},
                           {"mu_r", b.patch.substrate.mu_r}}}};
        band["elements_x"] = b.elements_x;
        band["elements_y"] = b.elements_y;
        band["spacing_m"] = b.spacing_m;
        j["bands"].push_back(band);
    }
    return j.dump(2) + "\n";
}

DesignCandidate candidate_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    DesignCandidate c;
    c.guard_gap_m = j.at("guard_gap_m").get<double>();
    c.footprint_x_m = j.at("footprint_x_m").get<double>();
    c.footprint_y_m = j.at("footprint_y_m").get<double>();
    for (const auto& band : j.at("bands")) {
        BandDesign b;
        b.center_hz = band.at("center_hz").get<double>();
        const auto& patch = band.at("patch");
        b.patch.length_m = patch.at("length_m").get<double>();
        b.patch.width_m = patch.at("width_m").get<double>();
        const auto& sub = patch.at("substrate");
        b.patch.substrate.epsilon_r = sub.at("epsilon_r").get<double>();
        b.patch.substrate.tan_delta = sub.at("tan_delta").get<double>();
        b.patch.substrate.thickness_m = sub.at("thickness_m").get<double>();
        b.patch.substrate.mu_r = sub.at("mu_r").get<double>();
        b.patch.validate();
        b.elements_x = band.at("elements_x").get<std::size_t>();
        b.elements_y = band.at("elements_y").get<std::size_t>();
        b.spacing_m = band.at("spacing_m").get<double>();
        c.bands.push_back(b);
    }
    return c;
}

namespace {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::not_evaluable: return "not-evaluable";
    }
    return "unknown";
}

} // namespace

std::string compliance_json(const ComplianceReport& report, const DesignGoals& goals) {
    ordered_json j;
    j["schema_version"] = report_schema_version;
    j["goals"] = {{"steering_range_deg", goals.steering_range_deg},
                  {"max_footprint_x_mm", goals.max_footprint_x_mm},
                  {"max_footprint_y_mm", goals.max_footprint_y_mm},
                  {"min_isolation_db", goals.min_isolation_db}};
    j["goals"]["bands"] = ordered_json::array();
    for (const auto& b : goals.bands)
        j["goals"]["bands"].push_back(
            {{"center_hz", b.center_hz}, {"min_gain_dbi", b.min_gain_dbi}});
    j["results"] = ordered_json::array();
    for (const auto& r : report.results) {
        ordered_json entry;
        entry["goal"] = r.goal;
        if (r.computed) entry["computed"] = *r.computed;
        else entry["computed"] = nullptr;
        entry["threshold"] = r.threshold;
        entry["verdict"] = verdict_name(r.verdict);
        if (!r.note.empty()) entry["note"] = r.note;
        j["results"].push_back(entry);
    }
    j["all_evaluable_pass"] = report.all_evaluable_pass();
    return j.dump(2) + "\n";
}

std::string pattern_metrics_json(const PatternTrace& trace) {
    ordered_json j;
    j["schema_version"] = report_schema_version;
    j["frequency_hz"] = trace.frequency_hz;
    const Angle peak = main_lobe_direction(trace);
    j["peak_theta_deg"] = peak.axis_deg();
    j["peak_broadside_offset_deg"] = peak.broadside_offset_deg();
    try {
        j["hpbw_deg"] = half_power_beamwidth(trace);
    } catch (const beamwidth_undefined_error&) {
        j["hpbw_deg"] = "undefined";
    }
    const auto sll = sidelobe_level(trace);
    if (sll) j["sidelobe_db"] = *sll;
    else j["sidelobe_db"] = "none";
    j["directivity_dbi"] = directivity_dbi(trace);
    j["directivity_model"] = "figure of revolution about the array axis";
    return j.dump(2) + "\n";
}

std::string sparams_report_json(const SParameterSet& s,
                                const std::vector<BandReport>& bands_per_port,
                                const IsolationReport* isolation) {
    ordered_json j;
    j["schema_version"] = report_schema_version;
    j["n_ports"] = s.n_ports;
    j["reference_impedance"] = s.reference_impedance;
    j["bands"] = ordered_json::array();
    for (std::size_t p = 0; p < bands_per_port.size(); ++p) {
        ordered_json port;
        port["port"] = p + 1;
        port["threshold_db"] = bands_per_port[p].threshold_db;
        port["intervals"] = ordered_json::array();
        for (const auto& b : bands_per_port[p].bands)
            port["intervals"].push_back({{"f_low_hz", b.f_low_hz},
                                         {"f_high_hz", b.f_high_hz},
                                         {"truncated_low", b.truncated_low},
                                         {"truncated_high", b.truncated_high}});
        j["bands"].push_back(port);
    }
    if (isolation) {
        ordered_json iso;
        iso["threshold_db"] = isolation->threshold_db;
        iso["all_pass"] = isolation->all_pass;
        iso["pairs"] = ordered_json::array();
        for (const auto& p : isolation->pairs)
            iso["pairs"].push_back({{"port_i", p.port_i},
                                    {"port_j", p.port_j},
                                    {"worst_db", p.worst_db},
                                    {"worst_frequency_hz", p.worst_frequency_hz},
                                    {"pass", p.pass}});
        j["isolation"] = iso;
    } else {
        j["isolation"] = nullptr;
    }
    return j.dump(2) + "\n";
}

std::string polar_plot_svg(const PatternTrace& trace) {
    constexpr double size = 600.0;
    constexpr double cx = size / 2.0, cy = size / 2.0;
    constexpr double radius = 260.0;
    constexpr double floor_db = -40.0;

    auto to_r = [&](double db) {
        const double clamped = std::max(db, floor_db);
        return radius * (clamped - floor_db) / (0.0 - floor_db);
    };
    // from-array-axis theta drawn with broadside (90 deg) pointing up
    auto to_xy = [&](double theta_deg, double r) {
        const double a = (theta_deg - 90.0) * deg_to_rad;
        return std::pair<double, double>{cx + r * std::sin(a), cy - r * std::cos(a)};
    };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" "
           "viewBox=\"0 0 600 600\">\n";
    out << "<rect width=\"600\" height=\"600\" fill=\"white\"/>\n";
    for (int ring = 0; ring >= static_cast<int>(floor_db); ring -= 10) {
        out << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << to_r(ring)
            << "\" fill=\"none\" stroke=\"#cccccc\"/>\n";
        out << "<text x=\"" << cx + 4 << "\" y=\"" << cy - to_r(ring) - 4
            << "\" font-size=\"11\" fill=\"#888888\">" << ring << " dB</text>\n";
    }
    for (int spoke = 0; spoke <= 180; spoke += 30) {
        const auto [x, y] = to_xy(spoke, radius);
        out << "<line x1=\"" << cx << "\" y1=\"" << cy << "\" x2=\"" << x << "\" y2=\"" << y
            << "\" stroke=\"#dddddd\"/>\n";
        out << "<text x=\"" << x << "\" y=\"" << y << "\" font-size=\"11\" fill=\"#888888\">"
            << spoke << "&#176;</text>\n";
    }

    out << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < trace.angles_deg.size(); ++i) {
        const auto [x, y] = to_xy(trace.angles_deg[i], to_r(trace.magnitudes_db[i]));
        out << x << ',' << y << ' ';
    }
    out << "\"/>\n";

    const Angle peak = main_lobe_direction(trace);
    const auto [px, py] = to_xy(peak.axis_deg(), radius + 14.0);
    out << "<line x1=\"" << cx << "\" y1=\"" << cy << "\" x2=\"" << px << "\" y2=\"" << py
        << "\" stroke=\"#d62728\" stroke-dasharray=\"4 3\"/>\n";
    out << "<text x=\"" << px << "\" y=\"" << py << "\" font-size=\"12\" fill=\"#d62728\">main lobe "
        << fixed6(peak.axis_deg()).substr(0, fixed6(peak.axis_deg()).find('.') + 3)
        << "&#176;</text>\n";
    out << "</svg>\n";
    return out.str();
}

} // namespace arraykit
