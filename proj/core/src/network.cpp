#include "arraykit/network.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace arraykit {

Complex reflection_coefficient(Impedance z_in, double z0) {
    z_in.validate();
    if (!(z0 > 0.0)) throw std::domain_error("reference impedance must be positive");
    const Complex denom = z_in.ohms + z0;
    if (std::abs(denom) == 0.0)
        throw std::domain_error("reflection coefficient singular at z_in = -z0");
    return (z_in.ohms - z0) / denom;
}

double s11_db(Complex gamma) {
    const double mag = std::abs(gamma);
    if (mag > 1.0 + 1e-9)
        throw std::domain_error("|Gamma| > 1: network is not passive");
    return db_magnitude(std::min(mag, 1.0));
}

BandReport extract_bands(const std::vector<std::pair<double, double>>& sweep,
                         double threshold_db) {
    if (sweep.size() < 2)
        throw std::invalid_argument("band extraction needs at least two sweep points");
    for (std::size_t i = 1; i < sweep.size(); ++i)
        if (!(sweep[i].first > sweep[i - 1].first))
            throw std::invalid_argument("sweep frequencies must be strictly increasing");

    BandReport report;
    report.threshold_db = threshold_db;

    auto crossing = [&](std::size_t a, std::size_t b) {
        const auto [fa, va] = sweep[a];
        const auto [fb, vb] = sweep[b];
        return fa + (threshold_db - va) / (vb - va) * (fb - fa);
    };

    bool inside = sweep.front().second < threshold_db;
    Band current;
    if (inside) {
        current.f_low_hz = sweep.front().first;
        current.truncated_low = true;
    }
    for (std::size_t i = 1; i < sweep.size(); ++i) {
        const bool below = sweep[i].second < threshold_db;
        if (below && !inside) {
            current = Band{};
            current.f_low_hz = crossing(i - 1, i);
            inside = true;
        } else if (!below && inside) {
            current.f_high_hz = sweep[i].second == threshold_db ? sweep[i].first
                                                                : crossing(i - 1, i);
            if (current.f_high_hz > current.f_low_hz)
                report.bands.push_back(current);
            inside = false;
        }
    }
    if (inside) {
        current.f_high_hz = sweep.back().first;
        current.truncated_high = true;
        if (current.f_high_hz > current.f_low_hz)
            report.bands.push_back(current);
    }
    return report;
}

void SParameterSet::validate() const {
    if (n_ports == 0) throw std::domain_error("port count must be positive");
    if (frequencies_hz.empty()) throw std::domain_error("no frequency points");
    if (frequencies_hz.size() != data.size())
        throw std::domain_error("frequency/data length mismatch");
    for (std::size_t i = 1; i < frequencies_hz.size(); ++i)
        if (!(frequencies_hz[i] > frequencies_hz[i - 1]))
            throw std::domain_error("frequencies must be strictly increasing");
    for (const auto& m : data) {
        if (m.rows() != n_ports || m.cols() != n_ports)
            throw std::domain_error("S-matrix dimensions inconsistent with port count");
        for (std::size_t i = 0; i < n_ports; ++i)
            for (std::size_t j = 0; j < n_ports; ++j)
                if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag()))
                    throw std::domain_error("S-parameter entries must be finite");
    }
    if (!(reference_impedance > 0.0))
        throw std::domain_error("reference impedance must be positive");
}

IsolationReport isolation_report(const SParameterSet& s, double threshold_db) {
    s.validate();
    if (s.n_ports < 2)
        throw std::domain_error("isolation needs at least two ports");

    IsolationReport report;
    report.threshold_db = threshold_db;
    for (std::size_t i = 0; i < s.n_ports; ++i)
        for (std::size_t j = 0; j < s.n_ports; ++j) {
            if (i == j) continue;
            IsolationEntry entry;
            entry.port_i = i + 1;
            entry.port_j = j + 1;
            entry.worst_db = db_floor;
            entry.worst_frequency_hz = s.frequencies_hz.front();
            for (std::size_t k = 0; k < s.frequencies_hz.size(); ++k) {
                const double level = db_magnitude(std::abs(s.data[k](i, j)));
                if (level > entry.worst_db) {
                    entry.worst_db = level;
                    entry.worst_frequency_hz = s.frequencies_hz[k];
                }
            }
            entry.pass = entry.worst_db <= threshold_db;
            report.all_pass = report.all_pass && entry.pass;
            report.pairs.push_back(entry);
        }
    return report;
}

namespace {

struct OptionLine {
    double frequency_scale = 1e9; // GHz default
    TouchstoneFormat format = TouchstoneFormat::MA;
    double reference = 50.0;
};

std::string upper(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::toupper(c); });
    return s;
}

OptionLine parse_option_line(const std::string& line, std::size_t line_no) {
    OptionLine opt;
    std::istringstream in(line.substr(1));
    std::string tok;
    while (in >> tok) {
        const std::string t = upper(tok);
        if (t == "HZ") opt.frequency_scale = 1.0;
        else if (t == "KHZ") opt.frequency_scale = 1e3;
        else if (t == "MHZ") opt.frequency_scale = 1e6;
        else if (t == "GHZ") opt.frequency_scale = 1e9;
        else if (t == "S") { /* scattering parameters, the only supported type */ }
        else if (t == "Y" || t == "Z" || t == "G" || t == "H")
            throw parse_error(line_no, "only S-parameters are supported, got '" + tok + "'");
        else if (t == "MA") opt.format = TouchstoneFormat::MA;
        else if (t == "RI") opt.format = TouchstoneFormat::RI;
        else if (t == "DB") opt.format = TouchstoneFormat::DB;
        else if (t == "R") {
            if (!(in >> opt.reference) || !(opt.reference > 0.0))
                throw parse_error(line_no, "malformed reference impedance after R");
        } else
            throw parse_error(line_no, "unrecognized option-line token '" + tok + "'");
    }
    return opt;
}

struct DataLine {
    std::size_t line_no;
    std::vector<double> values;
};

Complex decode_pair(TouchstoneFormat format, double a, double b) {
    switch (format) {
        case TouchstoneFormat::MA: return std::polar(a, b * deg_to_rad);
        case TouchstoneFormat::DB: return std::polar(std::pow(10.0, a / 20.0), b * deg_to_rad);
        case TouchstoneFormat::RI: return Complex{a, b};
    }
    throw std::logic_error("unreachable");
}

/// Infer the port count from the per-line token structure of v1 data.
std::size_t infer_ports(const std::vector<DataLine>& lines) {
    const std::size_t t0 = lines.front().values.size();
    switch (t0) {
        case 3: return 1;
        case 7: return 3;
        case 9:
            // 2-port points are single 9-token lines; a 4-port point is
            // a 9-token line followed by three 8-token rows
            if (lines.size() > 1 && lines[1].values.size() == 8) return 4;
            return 2;
        default:
            throw parse_error(lines.front().line_no,
                              "cannot infer port count from a " + std::to_string(t0) +
                                  "-column data line");
    }
}

} // namespace

std::optional<std::size_t> port_count_from_filename(const std::string& name) {
    const auto dot = name.find_last_of('.');
    if (dot == std::string::npos) return std::nullopt;
    std::string ext = upper(name.substr(dot + 1));
    if (ext.size() < 3 || ext.front() != 'S' || ext.back() != 'P') return std::nullopt;
    const std::string digits = ext.substr(1, ext.size() - 2);
    if (digits.empty() ||
        !std::all_of(digits.begin(), digits.end(),
                     [](unsigned char c) { return std::isdigit(c); }))
        return std::nullopt;
    const auto n = static_cast<std::size_t>(std::stoul(digits));
    return n == 0 ? std::nullopt : std::optional<std::size_t>(n);
}

SParameterSet parse_touchstone(const std::string& text,
                               std::optional<std::size_t> n_ports_hint) {
    std::istringstream stream(text);
    std::string raw;
    std::size_t line_no = 0;

    std::optional<OptionLine> option;
    std::vector<DataLine> data_lines;

    while (std::getline(stream, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        if (const auto bang = raw.find('!'); bang != std::string::npos)
            raw.erase(bang);
        const auto first = raw.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        if (raw[first] == '[')
            throw parse_error(line_no, "Touchstone v2 keywords are not supported");
        if (raw[first] == '#') {
            if (option)
                throw parse_error(line_no, "multiple option lines");
            option = parse_option_line(raw.substr(first), line_no);
            continue;
        }

        DataLine dl{line_no, {}};
        std::istringstream in(raw);
        std::string tok;
        while (in >> tok) {
            try {
                std::size_t used = 0;
                const double v = std::stod(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
                dl.values.push_back(v);
            } catch (const std::exception&) {
                throw parse_error(line_no, "malformed numeric field '" + tok + "'");
            }
        }
        data_lines.push_back(std::move(dl));
    }

    if (data_lines.empty())
        throw parse_error(line_no, "no data lines found");
    const OptionLine opt = option.value_or(OptionLine{});
    const std::size_t n = n_ports_hint ? *n_ports_hint : infer_ports(data_lines);
    if (n == 0) throw parse_error(data_lines.front().line_no, "port count must be positive");

    SParameterSet set;
    set.n_ports = n;
    set.reference_impedance = opt.reference;

    // per point: frequency then 2*n^2 reals; for n >= 3 each matrix row starts
    // a new line and carries at most four complex pairs per line (v1 wrapping)
    std::size_t idx = 0;
    while (idx < data_lines.size()) {
        std::vector<double> point;
        const std::size_t point_line = data_lines[idx].line_no;
        if (n <= 2) {
            point = data_lines[idx].values;
            ++idx;
        } else {
            for (std::size_t row = 0; row < n; ++row) {
                std::size_t need = 2 * n + (row == 0 ? 1 : 0);
                while (need > 0) {
                    if (idx >= data_lines.size())
                        throw parse_error(data_lines.back().line_no,
                                          "truncated data point");
                    const auto& dl = data_lines[idx];
                    const std::size_t expect =
                        std::min<std::size_t>(need, 8 + (row == 0 && need == 2 * n + 1 ? 1 : 0));
                    if (dl.values.size() != expect)
                        throw parse_error(dl.line_no,
                                          "expected " + std::to_string(expect) +
                                              " columns, got " +
                                              std::to_string(dl.values.size()));
                    point.insert(point.end(), dl.values.begin(), dl.values.end());
                    need -= dl.values.size();
                    ++idx;
                }
            }
        }
        if (point.size() != 1 + 2 * n * n)
            throw parse_error(point_line,
                              "expected " + std::to_string(1 + 2 * n * n) +
                                  " columns per point, got " + std::to_string(point.size()));

        const double freq = point[0] * opt.frequency_scale;
        if (!set.frequencies_hz.empty() && !(freq > set.frequencies_hz.back()))
            throw parse_error(point_line, "frequencies must be strictly increasing");

        ComplexMatrix m(n, n);
        if (n == 2) {
            // v1 2-port column order: S11 S21 S12 S22
            m(0, 0) = decode_pair(opt.format, point[1], point[2]);
            m(1, 0) = decode_pair(opt.format, point[3], point[4]);
            m(0, 1) = decode_pair(opt.format, point[5], point[6]);
            m(1, 1) = decode_pair(opt.format, point[7], point[8]);
        } else {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    const std::size_t base = 1 + 2 * (i * n + j);
                    m(i, j) = decode_pair(opt.format, point[base], point[base + 1]);
                }
        }
        set.frequencies_hz.push_back(freq);
        set.data.push_back(std::move(m));
    }

    set.validate();
    return set;
}

namespace {

void encode_pair(std::ostringstream& out, TouchstoneFormat format, Complex v) {
    switch (format) {
        case TouchstoneFormat::MA:
            out << ' ' << std::abs(v) << ' ' << std::arg(v) * rad_to_deg;
            break;
        case TouchstoneFormat::DB:
            out << ' ' << 20.0 * std::log10(std::max(std::abs(v), 1e-30)) << ' '
                << std::arg(v) * rad_to_deg;
            break;
        case TouchstoneFormat::RI:
            out << ' ' << v.real() << ' ' << v.imag();
            break;
    }
}

} // namespace

std::string write_touchstone(const SParameterSet& s, TouchstoneFormat format) {
    s.validate();
    std::ostringstream out;
    // 9 significant digits: enough headroom that phase-in-degrees fields
    // survive a parse/write cycle within 1e-6 per complex entry
    out.precision(9);
    const char* fmt = format == TouchstoneFormat::MA   ? "MA"
                      : format == TouchstoneFormat::RI ? "RI"
                                                       : "DB";
    out << "! " << s.n_ports << "-port S-parameter data\n";
    out << "# GHz S " << fmt << " R " << s.reference_impedance << '\n';
    for (std::size_t k = 0; k < s.frequencies_hz.size(); ++k) {
        const ComplexMatrix& m = s.data[k];
        out << s.frequencies_hz[k] * 1e-9;
        if (s.n_ports == 1) {
            encode_pair(out, format, m(0, 0));
            out << '\n';
        } else if (s.n_ports == 2) {
            encode_pair(out, format, m(0, 0));
            encode_pair(out, format, m(1, 0));
            encode_pair(out, format, m(0, 1));
            encode_pair(out, format, m(1, 1));
            out << '\n';
        } else {
            for (std::size_t i = 0; i < s.n_ports; ++i) {
                if (i > 0) out << "  ";
                std::size_t emitted = 0;
                for (std::size_t j = 0; j < s.n_ports; ++j) {
                    encode_pair(out, format, m(i, j));
                    if (++emitted == 4 && j + 1 < s.n_ports) {
                        out << "\n  ";
                        emitted = 0;
                    }
                }
                out << '\n';
            }
        }
    }
    return out.str();
}

} // namespace arraykit
