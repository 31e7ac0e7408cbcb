#pragma once

#include "wgqed/mode_lattice.hpp"

#include <array>
#include <complex>

namespace wgqed {

using Complex = std::complex<double>;
using FieldVector = std::array<Complex, 3>;

// Mode amplitudes (E1, E2, E3) tied to one propagating branch. Valid
// amplitudes satisfy the transversality constraint
//   k_x E1 + k_y E2 - i k0 E3 = 0,
// which the constructor enforces to within rounding.
struct FieldAmplitudes {
    Complex e1;
    Complex e2;
    Complex e3;
    PropagatingMode mode;

    FieldAmplitudes(Complex e1, Complex e2, Complex e3, const PropagatingMode& mode);
};

// Absorbing/emitting medium. lineshape_value is the normalized line-shape
// function g evaluated at the detuning; it stands in for the delta factor
// of the golden-rule rate (dimension: inverse frequency).
struct MediumSpec {
    double refractive_index;
    double dipole_e_r;
    double lineshape_value;

    MediumSpec(double refractive_index, double dipole_e_r, double lineshape_value);
};

// Normalized Lorentzian of full width `width` at detuning `delta`:
// (width / 2 pi) / (delta^2 + width^2 / 4). Integrates to 1 over frequency.
double lorentzian_lineshape(double delta, double width);

// Solve the transversality constraint for E3: e3 = -i (k_x e1 + k_y e2) / k0.
// Rejects k0 = 0, where no finite completion exists.
FieldAmplitudes complete_amplitudes(const PropagatingMode& mode, Complex e1, Complex e2);

// ( E1 cos(k_x x) sin(k_y y),
//   E2 sin(k_x x) cos(k_y y),
//   E3 sin(k_x x) sin(k_y y) ) * exp(i k0 z)
// Trigonometric factors hit exact zeros on the walls. Requires
// 0 <= x <= L_x, 0 <= y <= L_y; z is unconstrained.
FieldVector field_at(const FieldAmplitudes& amps, double x, double y, double z);

// rho(x, y) = (n^2/2) ( |E1|^2 cos^2 sin^2 + |E2|^2 sin^2 cos^2
//                       + |E3|^2 sin^2 sin^2 );  the z phase drops out.
double energy_density(const FieldAmplitudes& amps, const MediumSpec& medium, double x, double y);

// Exact transverse-area average of rho. Equals (n^2/8)(|E1|^2+|E2|^2+|E3|^2)
// whenever n_x, n_y >= 1; when an index is zero the corresponding sin^2
// factor vanishes identically (and cos^2 averages to 1, not 1/2), so the
// average is assembled from the per-axis means instead of the generic 1/4.
double mean_energy_density(const FieldAmplitudes& amps, const MediumSpec& medium);

// W_ab(x, y) = (pi / 3 n^2) (e r)^2 rho(x, y) g
double absorption_rate_at(const MediumSpec& medium, const FieldAmplitudes& amps, double x,
                          double y);

// Same with the area-averaged density; equals the transverse-area average
// of absorption_rate_at.
double mean_absorption_rate(const MediumSpec& medium, const FieldAmplitudes& amps);

// Stimulated emission proceeds at exactly the absorption rate.
double stimulated_rate(const MediumSpec& medium, const FieldAmplitudes& amps, double x, double y);
double mean_stimulated_rate(const MediumSpec& medium, const FieldAmplitudes& amps);

}  // namespace wgqed
