#include "wgqed/waveguide_fields.hpp"

#include <cfloat>
#include <cmath>
#include <stdexcept>
#include <string>

namespace wgqed {

namespace {

void require(bool ok, const char* message)
{
    if (!ok) throw std::invalid_argument(message);
}

// sin(pi t) and cos(pi t) through argument reduction on the half-period
// count t, so walls (integer t) and mid-planes (half-integer t) evaluate
// to exact zeros.
double sin_pi(double t)
{
    const double r = std::remainder(t, 2.0);  // r in [-1, 1]
    if (r == 0.0 || r == 1.0 || r == -1.0) return 0.0;
    return std::sin(kPi * r);
}

double cos_pi(double t)
{
    const double r = std::remainder(t, 2.0);
    if (r == 0.5 || r == -0.5) return 0.0;
    return std::cos(kPi * r);
}

void check_in_guide(const PropagatingMode& mode, double x, double y)
{
    if (!(x >= 0.0 && x <= mode.length_x && y >= 0.0 && y <= mode.length_y)) {
        throw std::domain_error("position (" + std::to_string(x) + "," + std::to_string(y)
                                + ") lies outside the guide cross-section");
    }
}

double norm_sq(const Complex& c)
{
    return c.real() * c.real() + c.imag() * c.imag();
}

// Standing-wave profile factors as half-period counts n*x/L, exact on walls.
struct Profile {
    double sx, cx, sy, cy;
};

Profile profile_at(const PropagatingMode& mode, double x, double y)
{
    const double tx = static_cast<double>(mode.n_x) * (x / mode.length_x);
    const double ty = static_cast<double>(mode.n_y) * (y / mode.length_y);
    return {sin_pi(tx), cos_pi(tx), sin_pi(ty), cos_pi(ty)};
}

}  // namespace

FieldAmplitudes::FieldAmplitudes(Complex e1_in, Complex e2_in, Complex e3_in,
                                 const PropagatingMode& mode_in)
    : e1(e1_in), e2(e2_in), e3(e3_in), mode(mode_in)
{
    const Complex residual = mode.k_x * e1 + mode.k_y * e2 - Complex(0.0, 1.0) * mode.k0 * e3;
    const double scale = std::max({std::abs(mode.k_x * e1), std::abs(mode.k_y * e2),
                                   std::abs(mode.k0 * e3), DBL_MIN});
    if (std::abs(residual) > 1e-12 * scale) {
        throw std::invalid_argument("field amplitudes violate the transversality constraint");
    }
}

MediumSpec::MediumSpec(double n, double dipole, double lineshape)
    : refractive_index(n), dipole_e_r(dipole), lineshape_value(lineshape)
{
    require(std::isfinite(n) && n > 0.0, "refractive index must be positive");
    require(std::isfinite(dipole) && dipole >= 0.0, "dipole matrix element must be non-negative");
    require(std::isfinite(lineshape) && lineshape >= 0.0,
            "line-shape value must be non-negative");
}

double lorentzian_lineshape(double delta, double width)
{
    require(std::isfinite(width) && width > 0.0, "line width must be positive");
    return (width / (2.0 * kPi)) / (delta * delta + width * width / 4.0);
}

FieldAmplitudes complete_amplitudes(const PropagatingMode& mode, Complex e1, Complex e2)
{
    if (mode.k0 == 0.0) {
        throw std::invalid_argument("mode at cutoff (k0 = 0) has no finite E3 completion");
    }
    const Complex e3 = Complex(0.0, -1.0) * (mode.k_x * e1 + mode.k_y * e2) / mode.k0;
    return FieldAmplitudes(e1, e2, e3, mode);
}

FieldVector field_at(const FieldAmplitudes& amps, double x, double y, double z)
{
    check_in_guide(amps.mode, x, y);
    const Profile p = profile_at(amps.mode, x, y);
    const double phase = amps.mode.k0 * z;
    const Complex propagation(std::cos(phase), std::sin(phase));
    return {amps.e1 * (p.cx * p.sy) * propagation, amps.e2 * (p.sx * p.cy) * propagation,
            amps.e3 * (p.sx * p.sy) * propagation};
}

double energy_density(const FieldAmplitudes& amps, const MediumSpec& medium, double x, double y)
{
    check_in_guide(amps.mode, x, y);
    const Profile p = profile_at(amps.mode, x, y);
    const double n2 = medium.refractive_index * medium.refractive_index;
    return 0.5 * n2
           * (norm_sq(amps.e1) * p.cx * p.cx * p.sy * p.sy
              + norm_sq(amps.e2) * p.sx * p.sx * p.cy * p.cy
              + norm_sq(amps.e3) * p.sx * p.sx * p.sy * p.sy);
}

double mean_energy_density(const FieldAmplitudes& amps, const MediumSpec& medium)
{
    // Area means of the squared profile factors: sin^2 -> 1/2 (0 for n = 0),
    // cos^2 -> 1/2 (1 for n = 0).
    const double sx = amps.mode.n_x == 0 ? 0.0 : 0.5;
    const double cx = amps.mode.n_x == 0 ? 1.0 : 0.5;
    const double sy = amps.mode.n_y == 0 ? 0.0 : 0.5;
    const double cy = amps.mode.n_y == 0 ? 1.0 : 0.5;
    const double n2 = medium.refractive_index * medium.refractive_index;
    return 0.5 * n2
           * (norm_sq(amps.e1) * cx * sy + norm_sq(amps.e2) * sx * cy
              + norm_sq(amps.e3) * sx * sy);
}

double absorption_rate_at(const MediumSpec& medium, const FieldAmplitudes& amps, double x,
                          double y)
{
    const double n2 = medium.refractive_index * medium.refractive_index;
    return kPi / (3.0 * n2) * medium.dipole_e_r * medium.dipole_e_r
           * energy_density(amps, medium, x, y) * medium.lineshape_value;
}

double mean_absorption_rate(const MediumSpec& medium, const FieldAmplitudes& amps)
{
    const double n2 = medium.refractive_index * medium.refractive_index;
    return kPi / (3.0 * n2) * medium.dipole_e_r * medium.dipole_e_r
           * mean_energy_density(amps, medium) * medium.lineshape_value;
}

double stimulated_rate(const MediumSpec& medium, const FieldAmplitudes& amps, double x, double y)
{
    return absorption_rate_at(medium, amps, x, y);
}

double mean_stimulated_rate(const MediumSpec& medium, const FieldAmplitudes& amps)
{
    return mean_absorption_rate(medium, amps);
}

}  // namespace wgqed
