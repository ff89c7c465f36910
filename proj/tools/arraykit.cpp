// arraykit - dual-band vehicular antenna array design and analysis CLI

#include "arraykit/beamforming.hpp"
#include "arraykit/design.hpp"
#include "arraykit/mimo.hpp"
#include "arraykit/network.hpp"
#include "arraykit/patch.hpp"
#include "arraykit/quantities.hpp"
#include "arraykit/reports.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace arraykit;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_goal_failure = 1;
constexpr int exit_input_error = 2;
constexpr int exit_degenerate = 3;
constexpr int exit_parse_error = 4;

class input_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// write-temp-then-rename so partial output never lands under the final name
void atomic_write(const fs::path& path, const std::string& content) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw input_error("cannot open " + tmp.string() + " for writing");
        out << content;
    }
    fs::rename(tmp, path);
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
}

/// "5.9GHz", "5900MHz", "28" (GHz default) -> Frequency
Frequency parse_frequency(const std::string& text) {
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        throw input_error("malformed frequency '" + text + "'");
    }
    const std::string suffix = lower(text.substr(used));
    double scale = 1e9;
    if (suffix.empty() || suffix == "ghz") scale = 1e9;
    else if (suffix == "mhz") scale = 1e6;
    else if (suffix == "khz") scale = 1e3;
    else if (suffix == "hz") scale = 1.0;
    else throw input_error("unknown frequency unit '" + suffix + "'");
    if (!(value > 0.0)) throw input_error("frequency must be positive: '" + text + "'");
    return Frequency(value * scale);
}

/// "0.5lambda", "5mm", "0.0053m"; bare numbers are lambda fractions
double parse_spacing(const std::string& text, Frequency f) {
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        throw input_error("malformed spacing '" + text + "'");
    }
    const std::string suffix = lower(text.substr(used));
    if (suffix.empty() || suffix == "lambda") return value * wavelength(f);
    if (suffix == "mm") return value * 1e-3;
    if (suffix == "m") return value;
    throw input_error("unknown spacing unit '" + suffix + "'");
}

ElementPatternModel parse_element(const std::string& text) {
    const std::string t = lower(text);
    if (t == "iso" || t == "isotropic") return ElementPatternModel::isotropic();
    if (t.rfind("cos", 0) == 0) {
        double q = 1.0;
        if (const auto colon = t.find(':'); colon != std::string::npos)
            q = std::stod(t.substr(colon + 1));
        return ElementPatternModel::cosine(q);
    }
    throw input_error("unknown element model '" + text + "' (use iso or cos[:q])");
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stod(item));
    if (out.empty()) throw input_error("empty list '" + text + "'");
    return out;
}

ArrayShape parse_shape(const std::string& text) {
    const auto x = lower(text).find('x');
    if (x == std::string::npos) throw input_error("array shape must look like 1x4 or 2x2");
    ArrayShape shape;
    shape.ny = std::stoul(text.substr(0, x));
    shape.nx = std::stoul(text.substr(x + 1));
    if (shape.nx == 0 || shape.ny == 0) throw input_error("array shape needs positive counts");
    return shape;
}

/// Shared run settings, resolved from flags, then config file, then defaults.
/// Flags always win over config-file values.
struct CommonOpts {
    std::string config_path;
    nlohmann::json config;

    void load_config() {
        if (config_path.empty()) return;
        try {
            config = nlohmann::json::parse(read_file(config_path));
        } catch (const nlohmann::json::parse_error& e) {
            throw input_error("config file: " + std::string(e.what()));
        }
    }

    template <typename T>
    void fallback(const CLI::Option* opt, const std::string& key, T& value) const {
        if (opt->count() > 0) return;
        if (config.contains(key)) value = config.at(key).get<T>();
    }
};

double default_grid_step() {
    if (const char* env = std::getenv("ARRAYKIT_GRID_STEP_DEG")) {
        try {
            const double v = std::stod(env);
            if (v > 0.0 && v <= 5.0) return v;
        } catch (const std::exception&) {
        }
        std::cerr << "warning: ignoring invalid ARRAYKIT_GRID_STEP_DEG\n";
    }
    return 0.1;
}

void write_run_sidecar(const std::string& prefix, const std::string& command) {
    nlohmann::ordered_json j;
    j["schema_version"] = report_schema_version;
    j["command"] = command;
    j["tool"] = "arraykit";
    atomic_write(prefix + "_run.json", j.dump(2) + "\n");
}

// ---------------------------------------------------------------- design

struct DesignArgs {
    std::vector<std::string> bands{"5.9GHz", "28GHz"};
    double substrate_er = 2.2;
    double substrate_h_mm = 0.787;
    double substrate_tand = 0.0009;
    std::vector<std::string> shapes;
    std::vector<double> gains;
    std::string output = "design";
};

int run_design(const DesignArgs& args) {
    DesignGoals goals = DesignGoals::defaults();
    goals.bands.clear();
    const std::vector<double> default_gains{7.0, 10.0};
    for (std::size_t i = 0; i < args.bands.size(); ++i) {
        BandGoal goal;
        goal.center_hz = parse_frequency(args.bands[i]).hertz();
        if (i < args.gains.size()) goal.min_gain_dbi = args.gains[i];
        else goal.min_gain_dbi = i < default_gains.size() ? default_gains[i] : 10.0;
        goals.bands.push_back(goal);
    }

    Substrate substrate;
    substrate.epsilon_r = args.substrate_er;
    substrate.thickness_m = args.substrate_h_mm * 1e-3;
    substrate.tan_delta = args.substrate_tand;

    std::vector<std::optional<ArrayShape>> shapes;
    for (const auto& s : args.shapes) shapes.push_back(parse_shape(s));

    const DesignCandidate candidate = synthesize_candidate(goals, substrate, shapes);
    atomic_write(args.output + "_candidate.json", candidate_json(candidate));

    std::ostringstream summary;
    summary << "arraykit design candidate\n";
    for (const auto& b : candidate.bands) {
        summary << "  band " << b.center_hz * 1e-9 << " GHz: patch "
                << b.patch.length_m * 1e3 << " x " << b.patch.width_m * 1e3 << " mm, array "
                << b.elements_y << "x" << b.elements_x << ", spacing "
                << b.spacing_m * 1e3 << " mm\n";
    }
    summary << "  footprint " << candidate.footprint_x_m * 1e3 << " x "
            << candidate.footprint_y_m * 1e3 << " mm\n";
    atomic_write(args.output + "_summary.txt", summary.str());
    write_run_sidecar(args.output, "design");
    std::cout << summary.str();
    return exit_ok;
}

// ---------------------------------------------------------------- pattern

struct PatternArgs {
    std::size_t n = 4;
    std::string spacing = "0.5lambda";
    std::string frequency = "28GHz";
    double steer_az_deg = 0.0;
    std::string element = "iso";
    std::string amplitudes;
    double grid_step_deg = 0.1;
    bool svg = false;
    std::string output = "pattern";
};

int run_pattern(const PatternArgs& args) {
    const Frequency f = parse_frequency(args.frequency);
    const double d = parse_spacing(args.spacing, f);
    const Angle target = Angle::broadside_offset_deg(args.steer_az_deg);

    LinearArrayConfig config = LinearArrayConfig::uniform(args.n, d);
    if (!args.amplitudes.empty()) config.amplitudes = parse_double_list(args.amplitudes);
    config.progressive_phase_rad = steering_phase(d, f, target);

    const PatternTrace trace =
        pattern_trace(config, f, parse_element(args.element), args.grid_step_deg);
    atomic_write(args.output + "_trace.csv", pattern_trace_csv(trace));

    nlohmann::ordered_json metrics = nlohmann::ordered_json::parse(pattern_metrics_json(trace));
    metrics["steer_broadside_offset_deg"] = args.steer_az_deg;
    metrics["steer_theta_deg"] = target.axis_deg();
    metrics["beta_rad"] = config.progressive_phase_rad;
    metrics["grating"] =
        grating_lobe_check(d, f, target) == GratingVerdict::safe ? "safe" : "grating";
    atomic_write(args.output + "_metrics.json", metrics.dump(2) + "\n");

    if (args.svg) atomic_write(args.output + "_polar.svg", polar_plot_svg(trace));
    write_run_sidecar(args.output, "pattern");
    std::cout << metrics.dump(2) << '\n';
    return exit_ok;
}

// ---------------------------------------------------------------- sweep

struct SweepArgs {
    std::size_t n = 4;
    std::string spacing = "0.5lambda";
    std::string frequency = "28GHz";
    std::string steer_az = "0,15,30";
    std::string element = "iso";
    double grid_step_deg = 0.1;
    std::string output = "sweep";
};

int run_sweep(const SweepArgs& args) {
    const Frequency f = parse_frequency(args.frequency);
    const double d = parse_spacing(args.spacing, f);

    std::vector<Angle> targets;
    for (double off : parse_double_list(args.steer_az))
        targets.push_back(Angle::broadside_offset_deg(off));
    if (targets.empty()) throw input_error("steering list is empty");

    const auto rows = scan_sweep(LinearArrayConfig::uniform(args.n, d), f,
                                 parse_element(args.element), targets, args.grid_step_deg);
    atomic_write(args.output + "_sweep.csv", scan_sweep_csv(rows));
    write_run_sidecar(args.output, "sweep");
    std::cout << scan_sweep_csv(rows);
    return exit_ok;
}

// ---------------------------------------------------------------- sparams

struct SparamsArgs {
    std::string input;
    double threshold_db = -10.0;
    double isolation_db = -25.0;
    std::string output = "sparams";
};

int run_sparams(const SparamsArgs& args) {
    if (args.input.empty()) throw input_error("sparams needs an input Touchstone file");
    const SParameterSet set =
        parse_touchstone(read_file(args.input), port_count_from_filename(args.input));

    std::vector<BandReport> bands;
    for (std::size_t p = 0; p < set.n_ports; ++p) {
        std::vector<std::pair<double, double>> sweep;
        for (std::size_t k = 0; k < set.frequencies_hz.size(); ++k)
            sweep.emplace_back(set.frequencies_hz[k],
                               db_magnitude(std::abs(set.data[k](p, p))));
        bands.push_back(extract_bands(sweep, args.threshold_db));
    }

    std::optional<IsolationReport> isolation;
    if (set.n_ports >= 2) isolation = isolation_report(set, args.isolation_db);

    const std::string report =
        sparams_report_json(set, bands, isolation ? &*isolation : nullptr);
    atomic_write(args.output + "_report.json", report);
    atomic_write(args.output + "_s11.csv", s11_trace_csv(set));
    write_run_sidecar(args.output, "sparams");
    std::cout << report;
    return exit_ok;
}

// ---------------------------------------------------------------- capacity

struct CapacityArgs {
    std::size_t ntx = 4;
    std::size_t nrx = 4;
    double snr_db = 10.0;
    std::string frequency = "28GHz";
    std::string spacing = "0.5lambda";
    double theta_min = 60.0, theta_max = 120.0, theta_step = 5.0;
    std::string output = "capacity";
};

int run_capacity(const CapacityArgs& args) {
    const Frequency f = parse_frequency(args.frequency);
    const double d = parse_spacing(args.spacing, f);
    if (!(args.theta_step > 0.0) || args.theta_max < args.theta_min)
        throw input_error("invalid theta grid");

    std::vector<Angle> grid;
    for (double t = args.theta_min; t <= args.theta_max + 1e-9; t += args.theta_step)
        grid.push_back(Angle::from_axis_deg(t));

    const auto points =
        capacity_sweep(LinearArrayConfig::uniform(args.ntx, d),
                       LinearArrayConfig::uniform(args.nrx, d), f, grid,
                       SnrContext::from_db(args.snr_db));
    atomic_write(args.output + "_capacity.csv", capacity_sweep_csv(points));
    write_run_sidecar(args.output, "capacity");
    std::cout << capacity_sweep_csv(points);
    return exit_ok;
}

// ---------------------------------------------------------------- check

struct CheckArgs {
    std::string candidate_path;
    std::string touchstone_path;
    double steering_range_deg = 30.0;
    double max_footprint_mm = 60.0;
    double min_isolation_db = 25.0;
    std::vector<double> min_gain_dbi;
    double grid_step_deg = 0.1;
    std::string output = "check";
};

int run_check(const CheckArgs& args) {
    if (args.candidate_path.empty() || !fs::exists(args.candidate_path))
        throw input_error("candidate file not found: " + args.candidate_path);

    const DesignCandidate candidate = candidate_from_json(read_file(args.candidate_path));

    DesignGoals goals = DesignGoals::defaults();
    goals.steering_range_deg = args.steering_range_deg;
    goals.max_footprint_x_mm = args.max_footprint_mm;
    goals.max_footprint_y_mm = args.max_footprint_mm;
    goals.min_isolation_db = args.min_isolation_db;
    goals.bands.clear();
    const std::vector<double> default_gains{7.0, 10.0};
    for (std::size_t i = 0; i < candidate.bands.size(); ++i) {
        BandGoal g;
        g.center_hz = candidate.bands[i].center_hz;
        if (i < args.min_gain_dbi.size()) g.min_gain_dbi = args.min_gain_dbi[i];
        else g.min_gain_dbi = i < default_gains.size() ? default_gains[i] : 10.0;
        goals.bands.push_back(g);
    }

    std::optional<SParameterSet> measured;
    if (!args.touchstone_path.empty())
        measured = parse_touchstone(read_file(args.touchstone_path),
                                    port_count_from_filename(args.touchstone_path));

    const ComplianceReport report =
        check_goals(candidate, goals, measured, args.grid_step_deg);
    atomic_write(args.output + "_compliance.json", compliance_json(report, goals));
    write_run_sidecar(args.output, "check");
    std::cout << compliance_json(report, goals);
    return report.all_evaluable_pass() ? exit_ok : exit_goal_failure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"arraykit: dual-band vehicular antenna array design and analysis"};
    app.require_subcommand(1);

    CommonOpts common;
    app.add_option("--config", common.config_path, "JSON config file; flags win on conflict");

    DesignArgs design_args;
    auto* design = app.add_subcommand("design", "Synthesize a dual-band array candidate");
    auto* d_bands = design->add_option("--bands", design_args.bands,
                                       "Band center frequencies (GHz default)")
                        ->delimiter(',');
    auto* d_er = design->add_option("--substrate-er", design_args.substrate_er,
                                    "Substrate relative permittivity");
    auto* d_h = design->add_option("--substrate-h", design_args.substrate_h_mm,
                                   "Substrate thickness, mm");
    auto* d_tand = design->add_option("--substrate-tand", design_args.substrate_tand,
                                      "Substrate loss tangent");
    design->add_option("--array", design_args.shapes,
                       "Per-band array shape override, e.g. 2x2,1x4")
        ->delimiter(',');
    design->add_option("--min-gain", design_args.gains, "Per-band gain goal, dBi")
        ->delimiter(',');
    design->add_option("-o,--output", design_args.output, "Output file prefix");

    PatternArgs pattern_args;
    auto* pattern = app.add_subcommand("pattern", "Compute a far-field pattern cut");
    pattern->add_option("--n", pattern_args.n, "Element count");
    pattern->add_option("--d", pattern_args.spacing, "Element spacing (lambda or mm)");
    pattern->add_option("--f", pattern_args.frequency, "Frequency");
    pattern->add_option("--steer-az", pattern_args.steer_az_deg,
                        "Steering target, broadside-offset degrees");
    auto* p_elem = pattern->add_option("--element", pattern_args.element,
                                       "Element model: iso or cos[:q]");
    pattern->add_option("--amps", pattern_args.amplitudes,
                        "Comma list of per-element amplitudes (default uniform)");
    auto* p_grid = pattern->add_option("--grid-step", pattern_args.grid_step_deg,
                                       "Angle grid step, degrees");
    pattern->add_flag("--svg", pattern_args.svg, "Also emit an SVG polar plot");
    pattern->add_option("-o,--output", pattern_args.output, "Output file prefix");

    SweepArgs sweep_args;
    auto* sweep = app.add_subcommand("sweep", "Steering sweep study");
    sweep->add_option("--n", sweep_args.n, "Element count");
    sweep->add_option("--d", sweep_args.spacing, "Element spacing (lambda or mm)");
    sweep->add_option("--f", sweep_args.frequency, "Frequency");
    sweep->add_option("--steer-az", sweep_args.steer_az,
                      "Comma list of broadside-offset targets, degrees");
    auto* w_elem = sweep->add_option("--element", sweep_args.element,
                                     "Element model: iso or cos[:q]");
    auto* w_grid = sweep->add_option("--grid-step", sweep_args.grid_step_deg,
                                     "Angle grid step, degrees");
    sweep->add_option("-o,--output", sweep_args.output, "Output file prefix");

    SparamsArgs sparams_args;
    auto* sparams = app.add_subcommand("sparams", "Analyze a Touchstone file");
    sparams->add_option("-i,--in", sparams_args.input, "Touchstone .sNp input");
    sparams->add_option("--threshold", sparams_args.threshold_db,
                        "Return-loss band threshold, dB");
    sparams->add_option("--isolation", sparams_args.isolation_db,
                        "Isolation threshold, dB");
    sparams->add_option("-o,--output", sparams_args.output, "Output file prefix");

    CapacityArgs capacity_args;
    auto* capacity = app.add_subcommand("capacity", "LoS MIMO capacity sweep");
    capacity->add_option("--ntx", capacity_args.ntx, "Transmit elements");
    capacity->add_option("--nrx", capacity_args.nrx, "Receive elements");
    auto* c_snr = capacity->add_option("--snr-db", capacity_args.snr_db, "SNR, dB");
    capacity->add_option("--f", capacity_args.frequency, "Frequency");
    capacity->add_option("--d", capacity_args.spacing, "Element spacing");
    capacity->add_option("--theta-min", capacity_args.theta_min, "Grid start, deg from axis");
    capacity->add_option("--theta-max", capacity_args.theta_max, "Grid end, deg from axis");
    capacity->add_option("--theta-step", capacity_args.theta_step, "Grid step, deg");
    capacity->add_flag("--los", "LoS rank-1 channel (the only supported model)");
    capacity->add_option("-o,--output", capacity_args.output, "Output file prefix");

    CheckArgs check_args;
    auto* check = app.add_subcommand("check", "Check a candidate against design goals");
    check->add_option("--candidate", check_args.candidate_path, "Candidate JSON from `design`");
    check->add_option("--touchstone", check_args.touchstone_path,
                      "Measured S-parameters for the isolation goal");
    check->add_option("--steering-range", check_args.steering_range_deg,
                      "Steering goal, +/- degrees");
    check->add_option("--max-footprint", check_args.max_footprint_mm,
                      "Footprint goal, mm (square)");
    check->add_option("--min-isolation", check_args.min_isolation_db, "Isolation goal, dB");
    check->add_option("--min-gain", check_args.min_gain_dbi, "Per-band gain goals, dBi")
        ->delimiter(',');
    auto* k_grid = check->add_option("--grid-step", check_args.grid_step_deg,
                                     "Angle grid step, degrees");
    check->add_option("-o,--output", check_args.output, "Output file prefix");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_input_error;
    }

    try {
        common.load_config();
        // config-file fallbacks for the shared numeric knobs
        const double env_grid = default_grid_step();
        if (p_grid->count() == 0) pattern_args.grid_step_deg = env_grid;
        if (w_grid->count() == 0) sweep_args.grid_step_deg = env_grid;
        if (k_grid->count() == 0) check_args.grid_step_deg = env_grid;
        common.fallback(p_grid, "grid_step_deg", pattern_args.grid_step_deg);
        common.fallback(w_grid, "grid_step_deg", sweep_args.grid_step_deg);
        common.fallback(k_grid, "grid_step_deg", check_args.grid_step_deg);
        common.fallback(p_elem, "element", pattern_args.element);
        common.fallback(w_elem, "element", sweep_args.element);
        common.fallback(c_snr, "snr_db", capacity_args.snr_db);
        common.fallback(d_er, "substrate_er", design_args.substrate_er);
        common.fallback(d_h, "substrate_h_mm", design_args.substrate_h_mm);
        common.fallback(d_tand, "substrate_tand", design_args.substrate_tand);
        if (d_bands->count() == 0 && common.config.contains("bands"))
            design_args.bands = common.config.at("bands").get<std::vector<std::string>>();

        if (design->parsed()) return run_design(design_args);
        if (pattern->parsed()) return run_pattern(pattern_args);
        if (sweep->parsed()) return run_sweep(sweep_args);
        if (sparams->parsed()) return run_sparams(sparams_args);
        if (capacity->parsed()) return run_capacity(capacity_args);
        if (check->parsed()) return run_check(check_args);
        return exit_input_error;
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return exit_parse_error;
    } catch (const degenerate_pattern_error& e) {
        std::cerr << "degenerate computation: " << e.what() << '\n';
        return exit_degenerate;
    } catch (const beamwidth_undefined_error& e) {
        std::cerr << "degenerate computation: " << e.what() << '\n';
        return exit_degenerate;
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return exit_input_error;
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return exit_input_error;
    }
}
