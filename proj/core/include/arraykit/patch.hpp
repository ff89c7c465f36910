#pragma once

#include "arraykit/quantities.hpp"

namespace arraykit {

/// Dielectric substrate parameters.
struct Substrate {
    double epsilon_r = 2.2;
    double tan_delta = 0.0009;
    double thickness_m = 0.787e-3;
    double mu_r = 1.0;

    void validate() const {
        if (epsilon_r < 1.0) throw std::domain_error("epsilon_r must be >= 1");
        if (!(thickness_m > 0.0)) throw std::domain_error("substrate thickness must be positive");
        if (tan_delta < 0.0 || tan_delta > 0.1)
            throw std::domain_error("tan_delta must lie in [0, 0.1]");
        if (!(mu_r > 0.0)) throw std::domain_error("mu_r must be positive");
    }

    /// Rogers RT5880 at 0.787 mm, the stock low-loss laminate.
    static Substrate rt5880() { return Substrate{2.2, 0.0009, 0.787e-3, 1.0}; }
};

struct PatchGeometry {
    double length_m = 0.0; // resonant dimension L
    double width_m = 0.0;  // radiating edge W
    Substrate substrate;

    void validate() const {
        if (!(length_m > 0.0) || !(width_m > 0.0))
            throw std::domain_error("patch dimensions must be positive");
        substrate.validate();
    }
};

/// TM mode indices; (0,0) is not a resonant mode.
struct ModeIndex {
    int m = 1;
    int n = 0;

    void validate() const {
        if (m < 0 || n < 0) throw std::domain_error("mode indices must be non-negative");
        if (m == 0 && n == 0) throw std::domain_error("mode (0,0) is not resonant");
    }
};

/// Cavity-model resonance of the TM_mn mode.
Frequency resonant_frequency(const PatchGeometry& patch, ModeIndex mode);

/// Inverse of the cavity model for the dominant (1,0) mode, with the
/// standard efficient-radiator width relation filling in W.
PatchGeometry synthesize_patch(Frequency f_target, const Substrate& substrate,
                               ModeIndex mode = ModeIndex{1, 0});

/// Hammerstad effective-permittivity and length-extension correction for
/// the (1,0) mode. Always red-shifted relative to the ideal cavity for
/// epsilon_r > 1.
Frequency fringing_corrected_frequency(const PatchGeometry& patch,
                                       ModeIndex mode = ModeIndex{1, 0});

} // namespace arraykit
