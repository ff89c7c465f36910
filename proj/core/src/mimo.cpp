#include "arraykit/mimo.hpp"

#include <cmath>

namespace arraykit {

std::vector<Complex> steering_vector(std::size_t n_elements, double spacing_m,
                                     Frequency f, Angle theta) {
    if (n_elements == 0) throw std::domain_error("steering vector needs at least one element");
    if (!(spacing_m > 0.0)) throw std::domain_error("element spacing must be positive");
    const double phase_step =
        Wavenumber::of(f).rad_per_m() * spacing_m * std::cos(theta.axis_rad());
    std::vector<Complex> a(n_elements);
    for (std::size_t n = 0; n < n_elements; ++n)
        a[n] = std::polar(1.0, static_cast<double>(n) * phase_step);
    return a;
}

double capacity_bits(const ChannelMatrix& channel, SnrContext snr) {
    snr.validate();
    const std::size_t nr = channel.n_rx();
    const std::size_t nt = channel.n_tx();

    const ComplexMatrix gram = hermitian_product(channel.h);
    const ComplexMatrix arg =
        ComplexMatrix::identity(nr) + gram.scaled(Complex{snr.rho / static_cast<double>(nt), 0.0});
    const Complex det = determinant(arg);
    // det(I + PSD) is real and >= 1; the imaginary part is numerical noise
    const double value = std::max(det.real(), 1.0);
    return std::log2(value);
}

ChannelMatrix los_channel(const LinearArrayConfig& tx, const LinearArrayConfig& rx,
                          Frequency f, Angle theta_tx, Angle theta_rx) {
    tx.validate();
    rx.validate();
    const auto a_tx = steering_vector(tx.n_elements, tx.spacing_m, f, theta_tx);
    const auto a_rx = steering_vector(rx.n_elements, rx.spacing_m, f, theta_rx);

    ComplexMatrix h(rx.n_elements, tx.n_elements);
    for (std::size_t i = 0; i < rx.n_elements; ++i)
        for (std::size_t j = 0; j < tx.n_elements; ++j)
            h(i, j) = a_rx[i] * std::conj(a_tx[j]);
    return ChannelMatrix{h};
}

double matched_beamforming_gain(const LinearArrayConfig& config, Frequency f,
                                Angle theta, Angle theta_weights) {
    config.validate();
    for (double a : config.amplitudes)
        if (a != config.amplitudes.front())
            throw std::domain_error("beamforming gain assumes uniform amplitudes");

    const auto a = steering_vector(config.n_elements, config.spacing_m, f, theta);
    const auto w = steering_vector(config.n_elements, config.spacing_m, f, theta_weights);
    Complex dot{0.0, 0.0};
    for (std::size_t n = 0; n < a.size(); ++n)
        dot += std::conj(a[n]) * w[n];
    return std::norm(dot) / static_cast<double>(config.n_elements);
}

std::vector<CapacityPoint> capacity_sweep(const LinearArrayConfig& tx,
                                          const LinearArrayConfig& rx, Frequency f,
                                          const std::vector<Angle>& theta_grid,
                                          SnrContext snr) {
    std::vector<CapacityPoint> out;
    out.reserve(theta_grid.size() * theta_grid.size());
    for (const Angle& t_tx : theta_grid)
        for (const Angle& t_rx : theta_grid) {
            CapacityPoint p;
            p.theta_tx_deg = t_tx.axis_deg();
            p.theta_rx_deg = t_rx.axis_deg();
            p.capacity_bps_hz = capacity_bits(los_channel(tx, rx, f, t_tx, t_rx), snr);
            out.push_back(p);
        }
    return out;
}

} // namespace arraykit
