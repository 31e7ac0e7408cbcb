#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace wgqed {

inline constexpr double kPi = 3.14159265358979323846;

// Transverse guide widths measured in half transition wavelengths:
// gamma = L / (lambda/2). All mode arithmetic is carried out in the
// dimensionless (gamma, u) parameterization; the optional wavelength only
// fixes the absolute scale of dimensional outputs (k values, guide widths).
// When no wavelength is given, outputs are in omega = 1 units (lambda = 2*pi).
struct WaveguideGeometry {
    double gamma_x;
    double gamma_y;
    std::optional<double> wavelength;

    explicit WaveguideGeometry(double gamma_x, double gamma_y,
                               std::optional<double> wavelength = std::nullopt);

    double omega() const;     // transition frequency, 2*pi/lambda
    double length_x() const;  // L_x = gamma_x * lambda / 2
    double length_y() const;

    WaveguideGeometry swapped() const { return WaveguideGeometry(gamma_y, gamma_x, wavelength); }
};

// One propagating photon branch (n_x, n_y) at the transition frequency.
// u = (k_x^2 + k_y^2) / omega^2 is the transverse fraction; the branch
// propagates iff u < 1, with longitudinal wavevector k0 = omega * sqrt(1-u).
struct PropagatingMode {
    int n_x;
    int n_y;
    double k_x;  // n_x * pi / L_x
    double k_y;  // n_y * pi / L_y
    double k0;
    double u;
    double omega;
    double length_x;  // carried so field evaluation needs no extra context
    double length_y;
};

enum class CutoffStatus { propagating, resonant_within_epsilon, evanescent };

struct ResonanceReport {
    int n_x;
    int n_y;
    double distance;  // 1 - u; near zero at cutoff, negative when evanescent
    CutoffStatus status;
};

// One gamma_x value where at least one mode sits exactly at cutoff, with
// every contributing (n_x, n_y).
struct ResonanceLocus {
    double gamma_x;
    std::vector<std::pair<int, int>> modes;
};

struct CutoffProximity {
    double distance;  // min |1 - u| over candidate indices
    int n_x;
    int n_y;
};

// The (0,0) index is excluded from every mode set: a hollow rectangular
// guide supports no such branch, and u(0,0) = 0 would keep the decay
// channel open even when every physical mode is cut off.
inline constexpr bool kIncludeZeroZeroMode = false;

// n_x^2/gamma_x^2 + n_y^2/gamma_y^2
double transverse_fraction(const WaveguideGeometry& geom, int n_x, int n_y);

// All (n_x, n_y) != (0,0) with u < 1, sorted lexicographically by (n_x, n_y).
// Modes exactly at cutoff (u = 1) are excluded; they belong to resonance
// reporting, not the propagating set.
std::vector<PropagatingMode> enumerate_modes(const WaveguideGeometry& geom);

// Single validated propagating mode; throws std::invalid_argument if
// (n_x, n_y) does not propagate in this geometry.
PropagatingMode mode_for(const WaveguideGeometry& geom, int n_x, int n_y);

// Cutoff classification of every candidate index with n_x <= ceil(gamma_x)+1,
// n_y <= ceil(gamma_y)+1, (n_x, n_y) != (0,0). epsilon must lie in (0, 1);
// |1 - u| <= epsilon reports resonant-within-epsilon.
std::vector<ResonanceReport> classify_modes(const WaveguideGeometry& geom, double epsilon);

// Default epsilon for resonance-within-epsilon classification.
inline constexpr double kDefaultResonanceEpsilon = 1e-9;

CutoffProximity nearest_cutoff(const WaveguideGeometry& geom);
double nearest_cutoff_distance(const WaveguideGeometry& geom);

// All gamma_x in (0, gamma_x_max] where some mode is exactly at cutoff for
// fixed gamma_y: gamma_x = n_x for n_y = 0, and
// gamma_x = gamma_y * n_x / sqrt(gamma_y^2 - n_y^2) for 1 <= n_y < gamma_y.
// Ascending, coincident loci merged.
std::vector<ResonanceLocus> resonance_loci(double gamma_y, double gamma_x_max);

}  // namespace wgqed
