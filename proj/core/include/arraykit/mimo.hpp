#pragma once

#include "arraykit/beamforming.hpp"
#include "arraykit/complex_matrix.hpp"
#include "arraykit/quantities.hpp"

#include <vector>

namespace arraykit {

/// Nr x Nt channel.
struct ChannelMatrix {
    ComplexMatrix h;

    std::size_t n_rx() const { return h.rows(); }
    std::size_t n_tx() const { return h.cols(); }
};

/// Linear (not dB) signal-to-noise ratio.
struct SnrContext {
    double rho = 1.0;

    static SnrContext from_db(double snr_db) {
        return SnrContext{std::pow(10.0, snr_db / 10.0)};
    }

    void validate() const {
        if (rho < 0.0 || !std::isfinite(rho))
            throw std::domain_error("SNR must be finite and non-negative");
    }
};

/// Unit-modulus steering vector, entry n = exp(j*n*k*d*cos(theta)).
std::vector<Complex> steering_vector(std::size_t n_elements, double spacing_m,
                                     Frequency f, Angle theta);

/// C = log2 det(I + (rho/Nt) * H * H^H), bits/s/Hz.
double capacity_bits(const ChannelMatrix& channel, SnrContext snr);

/// Rank-1 line-of-sight channel H = a_rx(theta_rx) * a_tx(theta_tx)^H, unit path gain.
ChannelMatrix los_channel(const LinearArrayConfig& tx, const LinearArrayConfig& rx,
                          Frequency f, Angle theta_tx, Angle theta_rx);

/// |a(theta)^H w|^2 with w = a(theta_weights)/sqrt(N); equals N when matched.
double matched_beamforming_gain(const LinearArrayConfig& config, Frequency f,
                                Angle theta, Angle theta_weights);

inline double matched_beamforming_gain(const LinearArrayConfig& config, Frequency f,
                                       Angle theta) {
    return matched_beamforming_gain(config, f, theta, theta);
}

struct CapacityPoint {
    double theta_tx_deg = 0.0;
    double theta_rx_deg = 0.0;
    double capacity_bps_hz = 0.0;
};

/// LoS capacity over a grid of (theta_tx, theta_rx) pairs.
std::vector<CapacityPoint> capacity_sweep(const LinearArrayConfig& tx,
                                          const LinearArrayConfig& rx, Frequency f,
                                          const std::vector<Angle>& theta_grid,
                                          SnrContext snr);

} // namespace arraykit
