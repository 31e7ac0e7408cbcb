#include "wgqed/emission.hpp"

#include "wgqed/errors.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

namespace wgqed {

namespace {

void require(bool ok, const char* message)
{
    if (!ok) throw std::invalid_argument(message);
}

// Any candidate index within the divergence threshold of cutoff (from either
// side) poisons the sum; evaluation at such a geometry is refused.
void reject_near_cutoff(const WaveguideGeometry& geom)
{
    const CutoffProximity near = nearest_cutoff(geom);
    if (near.distance < kDivergenceThreshold) {
        throw DivergentSumError(near.n_x, near.n_y, near.distance);
    }
}

struct ModeTerm {
    double khat_x;        // k_x / omega = n_x / gamma_x
    double khat_y;        // k_y / omega = n_y / gamma_y
    double one_minus_u;   // k0^2 / omega^2
    double weight;        // 3 / (2 pi gx gy sqrt(1-u))
};

std::vector<ModeTerm> directional_terms(const WaveguideGeometry& geom)
{
    reject_near_cutoff(geom);
    std::vector<ModeTerm> terms;
    for (const PropagatingMode& m : enumerate_modes(geom)) {
        const double dist = 1.0 - m.u;
        terms.push_back({m.k_x / m.omega, m.k_y / m.omega, dist,
                         3.0 / (2.0 * kPi * geom.gamma_x * geom.gamma_y * std::sqrt(dist))});
    }
    return terms;
}

// Directional sum for a unit dipole vector (ax, ay, az). Averaging the two
// k_z = +-k0 branches cancels the cross terms of cos^2(theta), leaving
//   <sin^2 theta> = 1 - (khat_x ax + khat_y ay)^2 - (1-u) az^2.
double directional_sum(const std::vector<ModeTerm>& terms, double ax, double ay, double az)
{
    double acc = 0.0;
    for (const ModeTerm& t : terms) {
        const double transverse = t.khat_x * ax + t.khat_y * ay;
        acc += t.weight * (1.0 - transverse * transverse - t.one_minus_u * az * az);
    }
    return acc;
}

// 53-bit uniform in [0, 1); keeps the stream identical across platforms.
double canonical(std::mt19937_64& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

TransitionSpec::TransitionSpec(double omega_in, double dipole, std::optional<double> e_upper,
                               std::optional<double> e_lower)
    : omega(omega_in), dipole_e_r(dipole), energy_upper(e_upper), energy_lower(e_lower)
{
    require(std::isfinite(omega) && omega > 0.0, "transition frequency must be positive");
    require(std::isfinite(dipole_e_r) && dipole_e_r >= 0.0,
            "dipole matrix element must be non-negative");
    if (energy_upper && energy_lower) {
        const double gap = *energy_upper - *energy_lower;
        require(std::abs(gap - omega) <= 1e-12 * std::max(1.0, std::abs(omega)),
                "omega must equal energy_upper - energy_lower");
    }
}

DipoleOrientation::DipoleOrientation(double alpha_in, double beta_in)
    : alpha(alpha_in), beta(beta_in)
{
    require(std::isfinite(alpha) && alpha >= 0.0 && alpha <= kPi, "alpha must lie in [0, pi]");
    require(std::isfinite(beta) && beta >= 0.0 && beta < 2.0 * kPi, "beta must lie in [0, 2 pi)");
}

double free_space_rate(const TransitionSpec& t)
{
    return t.dipole_e_r * t.dipole_e_r * t.omega * t.omega * t.omega / (3.0 * kPi);
}

double sin2_theta(const PropagatingMode& mode, const DipoleOrientation& d)
{
    const double sin_a = std::sin(d.alpha);
    const double cos_t = (mode.k_x * sin_a * std::cos(d.beta) + mode.k_y * sin_a * std::sin(d.beta)
                          + mode.k0 * std::cos(d.alpha))
                         / mode.omega;
    const double s2 = 1.0 - cos_t * cos_t;
    return std::clamp(s2, 0.0, 1.0);
}

double eta_directional(const WaveguideGeometry& geom, const DipoleOrientation& d)
{
    const std::vector<ModeTerm> terms = directional_terms(geom);
    const double sin_a = std::sin(d.alpha);
    return directional_sum(terms, sin_a * std::cos(d.beta), sin_a * std::sin(d.beta),
                           std::cos(d.alpha));
}

double eta_mean(const WaveguideGeometry& geom)
{
    reject_near_cutoff(geom);
    const double gx2 = geom.gamma_x * geom.gamma_x;
    const double gy2 = geom.gamma_y * geom.gamma_y;
    double acc = 0.0;
    for (const PropagatingMode& m : enumerate_modes(geom)) {
        const double denom = gx2 * gy2 - gy2 * static_cast<double>(m.n_x) * m.n_x
                             - gx2 * static_cast<double>(m.n_y) * m.n_y;
        acc += 1.0 / (kPi * std::sqrt(denom));
    }
    return acc;
}

double in_guide_rate(const TransitionSpec& t, const WaveguideGeometry& geom,
                     const std::optional<DipoleOrientation>& d)
{
    const double ratio = d ? eta_directional(geom, *d) : eta_mean(geom);
    return free_space_rate(t) * ratio;
}

OrientationAverage mc_orientation_average(const WaveguideGeometry& geom, std::uint64_t samples,
                                          std::uint64_t seed)
{
    require(samples >= 2, "at least two samples are required");
    const std::vector<ModeTerm> terms = directional_terms(geom);

    std::mt19937_64 rng(seed);
    double sum = 0.0;
    double sum_sq = 0.0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        const double cos_a = 1.0 - 2.0 * canonical(rng);
        const double sin_a = std::sqrt(std::max(0.0, 1.0 - cos_a * cos_a));
        const double beta = 2.0 * kPi * canonical(rng);
        const double v = directional_sum(terms, sin_a * std::cos(beta), sin_a * std::sin(beta),
                                         cos_a);
        sum += v;
        sum_sq += v * v;
    }
    const double n = static_cast<double>(samples);
    const double mean = sum / n;
    const double variance = std::max(0.0, (sum_sq - n * mean * mean) / (n - 1.0));
    return {mean, std::sqrt(variance / n), samples, seed};
}

}  // namespace wgqed
