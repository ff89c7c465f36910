// Brute-force reference implementations used as independent oracles.
// Everything here works from the closed-form definitions directly and never
// calls the library code under test.
#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <vector>

namespace oracle {

inline constexpr double kC = 299'792'458.0;
inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// |sum_{n=0}^{N-1} e^{j n psi}| evaluated the dumb way.
inline double af_magnitude(std::size_t n, double psi) {
    std::complex<double> sum{0.0, 0.0};
    for (std::size_t k = 0; k < n; ++k)
        sum += std::exp(std::complex<double>{0.0, static_cast<double>(k) * psi});
    return std::abs(sum);
}

/// Dense pattern scan: normalized dB magnitude of a uniform array with an
/// optional sin^q element factor, on a theta grid in degrees.
struct DenseTrace {
    std::vector<double> theta_deg;
    std::vector<double> db;
};

inline DenseTrace dense_trace(std::size_t n, double d_over_lambda, double beta,
                              double q = 0.0, double step_deg = 0.001) {
    DenseTrace t;
    const auto count = static_cast<std::size_t>(std::round(180.0 / step_deg)) + 1;
    t.theta_deg.reserve(count);
    std::vector<double> lin(count);
    double peak = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        const double deg = i * step_deg;
        const double th = deg * kPi / 180.0;
        const double psi = 2.0 * kPi * d_over_lambda * std::cos(th) + beta;
        const double elem = q == 0.0 ? 1.0 : std::pow(std::sin(th), q);
        lin[i] = af_magnitude(n, psi) * elem;
        peak = std::max(peak, lin[i]);
        t.theta_deg.push_back(deg);
    }
    t.db.resize(count);
    for (std::size_t i = 0; i < count; ++i)
        t.db[i] = 20.0 * std::log10(std::max(lin[i] / peak, 1e-30));
    return t;
}

inline double peak_direction(const DenseTrace& t) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < t.db.size(); ++i)
        if (t.db[i] > t.db[best]) best = i;
    return t.theta_deg[best];
}

inline double hpbw(const DenseTrace& t) {
    std::size_t p = 0;
    for (std::size_t i = 1; i < t.db.size(); ++i)
        if (t.db[i] > t.db[p]) p = i;
    const double level = t.db[p] - 3.0;
    std::size_t l = p, r = p;
    while (l > 0 && t.db[l] > level) --l;
    while (r + 1 < t.db.size() && t.db[r] > level) ++r;
    auto interp = [&](std::size_t a, std::size_t b) {
        return t.theta_deg[a] +
               (level - t.db[a]) / (t.db[b] - t.db[a]) * (t.theta_deg[b] - t.theta_deg[a]);
    };
    return interp(r - 1, r) - interp(l + 1, l);
}

/// Highest local maximum separated from the global peak by a dip.
inline std::optional<double> sidelobe(const DenseTrace& t) {
    std::size_t p = 0;
    for (std::size_t i = 1; i < t.db.size(); ++i)
        if (t.db[i] > t.db[p]) p = i;
    std::vector<std::size_t> maxima;
    if (t.db[0] > t.db[1]) maxima.push_back(0);
    for (std::size_t i = 1; i + 1 < t.db.size(); ++i)
        if (t.db[i] > t.db[i - 1] && t.db[i] >= t.db[i + 1]) maxima.push_back(i);
    if (t.db[t.db.size() - 1] > t.db[t.db.size() - 2]) maxima.push_back(t.db.size() - 1);

    std::optional<double> best;
    for (std::size_t idx : maxima) {
        if (idx == p) continue;
        const auto lo = std::min(idx, p), hi = std::max(idx, p);
        double valley = t.db[lo];
        for (std::size_t j = lo; j <= hi; ++j) valley = std::min(valley, t.db[j]);
        if (valley >= t.db[idx] - 1e-9) continue;
        if (!best || t.db[idx] > *best) best = t.db[idx];
    }
    return best;
}

} // namespace oracle
