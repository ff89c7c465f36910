#include "arraykit/patch.hpp"

#include <cmath>

namespace arraykit {

Frequency resonant_frequency(const PatchGeometry& patch, ModeIndex mode) {
    patch.validate();
    mode.validate();
    // f_mn = (1 / (2*pi*sqrt(mu*eps))) * sqrt((m*pi/L)^2 + (n*pi/W)^2)
    //      = (c / (2*sqrt(eps_r*mu_r))) * sqrt((m/L)^2 + (n/W)^2)
    const double ml = mode.m / patch.length_m;
    const double nw = mode.n / patch.width_m;
    const double root = std::sqrt(ml * ml + nw * nw);
    const double scale = speed_of_light /
                         (2.0 * std::sqrt(patch.substrate.epsilon_r * patch.substrate.mu_r));
    return Frequency(scale * root);
}

PatchGeometry synthesize_patch(Frequency f_target, const Substrate& substrate, ModeIndex mode) {
    substrate.validate();
    mode.validate();
    if (mode.m != 1 || mode.n != 0)
        throw std::domain_error("synthesis supports the dominant (1,0) mode only");

    const double half_wave = speed_of_light / (2.0 * f_target.hertz());
    PatchGeometry patch;
    patch.length_m = half_wave / std::sqrt(substrate.epsilon_r * substrate.mu_r);
    patch.width_m = half_wave * std::sqrt(2.0 / (substrate.epsilon_r + 1.0));
    patch.substrate = substrate;
    return patch;
}

Frequency fringing_corrected_frequency(const PatchGeometry& patch, ModeIndex mode) {
    patch.validate();
    mode.validate();
    if (mode.m != 1 || mode.n != 0)
        throw std::domain_error("fringing correction supports the (1,0) mode only");

    const double h = patch.substrate.thickness_m;
    const double w = patch.width_m;
    const double er = patch.substrate.epsilon_r;
    if (h >= w)
        throw std::domain_error("fringing correction requires thickness < patch width");

    // Hammerstad effective permittivity and open-end length extension
    const double eps_eff = (er + 1.0) / 2.0 +
                           (er - 1.0) / 2.0 / std::sqrt(1.0 + 12.0 * h / w);
    const double woh = w / h;
    const double delta_l = 0.412 * h * (eps_eff + 0.3) * (woh + 0.264) /
                           ((eps_eff - 0.258) * (woh + 0.8));
    const double f = speed_of_light /
                     (2.0 * (patch.length_m + 2.0 * delta_l) * std::sqrt(eps_eff));
    return Frequency(f);
}

} // namespace arraykit
