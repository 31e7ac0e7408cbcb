#pragma once

#include "wgqed/mode_lattice.hpp"

#include <cstdint>
#include <optional>

namespace wgqed {

// A two-level transition in natural units (hbar = c = 1, Heaviside):
// frequency omega = E_a - E_b and the dipole matrix element magnitude
// e*|r_ba|. Level energies are optional and only checked for consistency.
struct TransitionSpec {
    double omega;
    double dipole_e_r;
    std::optional<double> energy_upper;
    std::optional<double> energy_lower;

    explicit TransitionSpec(double omega, double dipole_e_r,
                            std::optional<double> energy_upper = std::nullopt,
                            std::optional<double> energy_lower = std::nullopt);
};

// Direction of the dipole matrix element: polar angle alpha from the guide
// z axis (the propagation axis), azimuth beta from the x axis.
struct DipoleOrientation {
    double alpha;
    double beta;

    DipoleOrientation(double alpha, double beta);
};

// Modes closer than this to cutoff (in |1 - u|) make the rate sums
// numerically meaningless; the sums signal DivergentSumError instead.
inline constexpr double kDivergenceThreshold = 1e-12;

// Free-space spontaneous emission rate e^2 omega^3 |r_ba|^2 / (3 pi).
double free_space_rate(const TransitionSpec& t);

// sin^2 of the angle between the dipole direction and the +z branch of the
// mode wavevector (k_x, k_y, +k0).
double sin2_theta(const PropagatingMode& mode, const DipoleOrientation& d);

// Ratio of the in-guide to free-space spontaneous rate for a fixed dipole
// direction:  sum over modes of 3/(2 pi gx gy) * sin^2(theta) / sqrt(1-u).
// The +-k0 propagation branches contribute symmetrically and are averaged.
// Zero when no mode propagates; throws DivergentSumError near cutoff.
double eta_directional(const WaveguideGeometry& geom, const DipoleOrientation& d);

// Orientation-averaged ratio:
//   sum over modes of (1/pi) / sqrt(gx^2 gy^2 - gy^2 nx^2 - gx^2 ny^2),
// the solid-angle average of eta_directional (mean sin^2 theta = 2/3).
double eta_mean(const WaveguideGeometry& geom);

// free_space_rate scaled by eta_directional (orientation given) or eta_mean.
double in_guide_rate(const TransitionSpec& t, const WaveguideGeometry& geom,
                     const std::optional<DipoleOrientation>& d = std::nullopt);

// Reproducible Monte-Carlo estimate of the solid-angle average of
// eta_directional. Samples are drawn uniformly on the sphere from the given
// seed; the estimate is deterministic per (geometry, samples, seed).
struct OrientationAverage {
    double mean;
    double std_error;
    std::uint64_t samples;
    std::uint64_t seed;
};

OrientationAverage mc_orientation_average(const WaveguideGeometry& geom, std::uint64_t samples,
                                          std::uint64_t seed);

}  // namespace wgqed
