#include "shocklab/field.hpp"

#include <algorithm>
#include <cmath>

namespace shocklab {

const char* to_string(Geometry g) {
    return g == Geometry::planar ? "planar" : "spherical";
}

const char* to_string(Boundary b) {
    return b == Boundary::transmissive ? "transmissive" : "reflective";
}

Geometry geometry_from_string(const std::string& s) {
    if (s == "planar") return Geometry::planar;
    if (s == "spherical") return Geometry::spherical;
    throw domain_error("unknown geometry '" + s + "'");
}

Boundary boundary_from_string(const std::string& s) {
    if (s == "transmissive") return Boundary::transmissive;
    if (s == "reflective") return Boundary::reflective;
    throw domain_error("unknown boundary condition '" + s + "'");
}

int Grid::locate(double x) const {
    const int i = static_cast<int>(std::floor((x - x_min) / dx()));
    return std::clamp(i, 0, cells - 1);
}

int SpacetimeField::index_at(double t) const {
    const double tol = 1e-9 * std::max(1.0, std::abs(t));
    for (std::size_t k = 0; k < snaps.size(); ++k)
        if (std::abs(snaps[k].t - t) <= tol) return static_cast<int>(k);
    throw domain_error("no stored snapshot at t = " + std::to_string(t));
}

std::pair<int, int> SpacetimeField::bracket(double t) const {
    if (snaps.empty()) throw domain_error("empty field");
    const double pad = 1e-12 * std::max(1.0, std::abs(t));
    if (t < t_min() - pad || t > t_max() + pad)
        throw coverage_error(std::min(t, t_min()), std::max(t, t_max()),
                             grid.x_min, grid.x_max,
                             "time " + std::to_string(t) +
                                 " outside stored window [" +
                                 std::to_string(t_min()) + ", " +
                                 std::to_string(t_max()) + "]");
    auto it = std::upper_bound(snaps.begin(), snaps.end(), t,
                               [](double v, const Snapshot& s) { return v < s.t; });
    int hi = static_cast<int>(it - snaps.begin());
    hi = std::clamp(hi, 1, static_cast<int>(snaps.size()) - 1);
    return {hi - 1, hi};
}

std::vector<ZoneSpan> flag_zones(const Snapshot& snap, const ZoneOptions& opts) {
    const int n = static_cast<int>(snap.cells.size());
    std::vector<ZoneSpan> zones;
    int run_lo = -1;
    auto close_run = [&](int run_hi) {
        ZoneSpan z;
        z.raw_lo = run_lo;
        z.raw_hi = run_hi;
        z.lo = std::max(0, run_lo - opts.halo);
        z.hi = std::min(n - 1, run_hi + opts.halo);
        if (!zones.empty() && z.lo <= zones.back().hi) {
            zones.back().hi = z.hi;
            zones.back().raw_hi = z.raw_hi;
            zones.back().merged = true;
        } else {
            zones.push_back(z);
        }
        run_lo = -1;
    };
    for (int i = 0; i + 1 < n; ++i) {
        const double a = snap.cells[i].rho;
        const double b = snap.cells[i + 1].rho;
        const bool steep = std::abs(b - a) / std::min(a, b) > opts.density_jump;
        if (steep && run_lo < 0) run_lo = i;
        if (!steep && run_lo >= 0) close_run(i);
    }
    if (run_lo >= 0) close_run(n - 1);
    return zones;
}

int zone_containing(const std::vector<ZoneSpan>& zones, int cell) {
    for (std::size_t z = 0; z < zones.size(); ++z)
        if (cell >= zones[z].lo && cell <= zones[z].hi) return static_cast<int>(z);
    return -1;
}

} // namespace shocklab
