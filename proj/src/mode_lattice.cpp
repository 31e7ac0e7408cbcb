#include "wgqed/mode_lattice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace wgqed {

namespace {

void require(bool ok, const std::string& message)
{
    if (!ok) throw std::invalid_argument(message);
}

PropagatingMode make_mode(const WaveguideGeometry& geom, int n_x, int n_y, double u)
{
    const double omega = geom.omega();
    PropagatingMode m;
    m.n_x = n_x;
    m.n_y = n_y;
    m.k_x = omega * static_cast<double>(n_x) / geom.gamma_x;
    m.k_y = omega * static_cast<double>(n_y) / geom.gamma_y;
    m.k0 = omega * std::sqrt(1.0 - u);
    m.u = u;
    m.omega = omega;
    m.length_x = geom.length_x();
    m.length_y = geom.length_y();
    return m;
}

}  // namespace

WaveguideGeometry::WaveguideGeometry(double gx, double gy, std::optional<double> wl)
    : gamma_x(gx), gamma_y(gy), wavelength(wl)
{
    require(std::isfinite(gx) && gx > 0.0, "gamma_x must be positive and finite");
    require(std::isfinite(gy) && gy > 0.0, "gamma_y must be positive and finite");
    if (wavelength) {
        require(std::isfinite(*wavelength) && *wavelength > 0.0,
                "wavelength must be positive and finite");
    }
}

double WaveguideGeometry::omega() const
{
    return wavelength ? 2.0 * kPi / *wavelength : 1.0;
}

double WaveguideGeometry::length_x() const
{
    return gamma_x * wavelength.value_or(2.0 * kPi) / 2.0;
}

double WaveguideGeometry::length_y() const
{
    return gamma_y * wavelength.value_or(2.0 * kPi) / 2.0;
}

double transverse_fraction(const WaveguideGeometry& geom, int n_x, int n_y)
{
    const double rx = static_cast<double>(n_x) / geom.gamma_x;
    const double ry = static_cast<double>(n_y) / geom.gamma_y;
    return rx * rx + ry * ry;
}

std::vector<PropagatingMode> enumerate_modes(const WaveguideGeometry& geom)
{
    std::vector<PropagatingMode> out;
    // u >= (n/gamma)^2, so n < gamma along each axis.
    const int nx_max = static_cast<int>(std::floor(geom.gamma_x));
    const int ny_max = static_cast<int>(std::floor(geom.gamma_y));
    for (int nx = 0; nx <= nx_max; ++nx) {
        for (int ny = 0; ny <= ny_max; ++ny) {
            if (nx == 0 && ny == 0 && !kIncludeZeroZeroMode) continue;
            const double u = transverse_fraction(geom, nx, ny);
            if (u < 1.0) out.push_back(make_mode(geom, nx, ny, u));
        }
    }
    return out;
}

PropagatingMode mode_for(const WaveguideGeometry& geom, int n_x, int n_y)
{
    require(n_x >= 0 && n_y >= 0, "mode indices must be non-negative");
    require(n_x != 0 || n_y != 0, "mode (0,0) does not exist in a hollow guide");
    const double u = transverse_fraction(geom, n_x, n_y);
    if (!(u < 1.0)) {
        throw std::invalid_argument("mode (" + std::to_string(n_x) + "," + std::to_string(n_y)
                                    + ") does not propagate in this geometry (u = "
                                    + std::to_string(u) + ")");
    }
    return make_mode(geom, n_x, n_y, u);
}

std::vector<ResonanceReport> classify_modes(const WaveguideGeometry& geom, double epsilon)
{
    require(epsilon > 0.0 && epsilon < 1.0, "epsilon must lie in (0, 1)");
    const int nx_max = static_cast<int>(std::ceil(geom.gamma_x)) + 1;
    const int ny_max = static_cast<int>(std::ceil(geom.gamma_y)) + 1;
    std::vector<ResonanceReport> out;
    out.reserve(static_cast<std::size_t>(nx_max + 1) * static_cast<std::size_t>(ny_max + 1));
    for (int nx = 0; nx <= nx_max; ++nx) {
        for (int ny = 0; ny <= ny_max; ++ny) {
            if (nx == 0 && ny == 0) continue;
            const double u = transverse_fraction(geom, nx, ny);
            const double distance = 1.0 - u;
            CutoffStatus status;
            if (std::abs(distance) <= epsilon) {
                status = CutoffStatus::resonant_within_epsilon;
            } else if (u > 1.0 + epsilon) {
                status = CutoffStatus::evanescent;
            } else {
                status = CutoffStatus::propagating;
            }
            out.push_back({nx, ny, distance, status});
        }
    }
    return out;
}

CutoffProximity nearest_cutoff(const WaveguideGeometry& geom)
{
    const int nx_max = static_cast<int>(std::ceil(geom.gamma_x)) + 1;
    const int ny_max = static_cast<int>(std::ceil(geom.gamma_y)) + 1;
    CutoffProximity best{std::numeric_limits<double>::infinity(), -1, -1};
    for (int nx = 0; nx <= nx_max; ++nx) {
        for (int ny = 0; ny <= ny_max; ++ny) {
            if (nx == 0 && ny == 0) continue;
            const double d = std::abs(1.0 - transverse_fraction(geom, nx, ny));
            if (d < best.distance) best = {d, nx, ny};
        }
    }
    return best;
}

double nearest_cutoff_distance(const WaveguideGeometry& geom)
{
    return nearest_cutoff(geom).distance;
}

std::vector<ResonanceLocus> resonance_loci(double gamma_y, double gamma_x_max)
{
    require(std::isfinite(gamma_y) && gamma_y > 0.0, "gamma_y must be positive and finite");
    require(std::isfinite(gamma_x_max) && gamma_x_max > 0.0,
            "gamma_x_max must be positive and finite");

    struct Hit {
        double gamma_x;
        std::pair<int, int> mode;
    };
    std::vector<Hit> hits;

    // n_y = 0 branch: cutoff where gamma_x equals the integer index.
    for (int nx = 1; nx <= static_cast<int>(std::floor(gamma_x_max)); ++nx) {
        hits.push_back({static_cast<double>(nx), {nx, 0}});
    }
    // n_y >= 1 requires n_y < gamma_y for a finite root.
    for (int ny = 1; static_cast<double>(ny) < gamma_y; ++ny) {
        const double step = gamma_y / std::sqrt(gamma_y * gamma_y - static_cast<double>(ny) * ny);
        for (int nx = 1;; ++nx) {
            const double g = static_cast<double>(nx) * step;
            if (g > gamma_x_max) break;
            hits.push_back({g, {nx, ny}});
        }
    }

    std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) {
        if (a.gamma_x != b.gamma_x) return a.gamma_x < b.gamma_x;
        return a.mode < b.mode;
    });

    std::vector<ResonanceLocus> out;
    for (const Hit& h : hits) {
        const double merge_tol = 1e-12 * std::max(1.0, std::abs(h.gamma_x));
        if (!out.empty() && std::abs(out.back().gamma_x - h.gamma_x) <= merge_tol) {
            out.back().modes.push_back(h.mode);
        } else {
            out.push_back({h.gamma_x, {h.mode}});
        }
    }
    for (ResonanceLocus& locus : out) {
        std::sort(locus.modes.begin(), locus.modes.end());
    }
    return out;
}

}  // namespace wgqed
