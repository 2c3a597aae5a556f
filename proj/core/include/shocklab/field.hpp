#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "shocklab/euler.hpp"

namespace shocklab {

enum class Geometry { planar, spherical };
enum class Boundary { transmissive, reflective };

const char* to_string(Geometry g);
const char* to_string(Boundary b);
Geometry geometry_from_string(const std::string& s);
Boundary boundary_from_string(const std::string& s);

/// Uniform 1-D cell grid.  States live at cell centers.
struct Grid {
    double x_min = 0.0;
    double x_max = 1.0;
    int cells = 0;
    Geometry geometry = Geometry::planar;

    double dx() const { return (x_max - x_min) / cells; }
    double center(int i) const { return x_min + (i + 0.5) * dx(); }
    /// Index of the cell whose interval contains x, clamped to [0, cells-1].
    int locate(double x) const;
    bool contains(double x) const { return x >= x_min && x <= x_max; }
    bool operator==(const Grid&) const = default;
};

/// Gridded fluid state at one instant.
struct Snapshot {
    double t = 0.0;
    Grid grid;
    std::vector<Primitive> cells;
};

/// Ordered snapshots of one run over a time interval, with the grid,
/// equation of state and boundary conditions they were produced under.
struct SpacetimeField {
    Grid grid;
    Polytrope eos;
    Boundary bc = Boundary::transmissive;
    std::vector<Snapshot> snaps;

    double t_min() const { return snaps.front().t; }
    double t_max() const { return snaps.back().t; }
    /// Index of the stored snapshot at time t (within tolerance); throws
    /// domain_error when no stored time matches.
    int index_at(double t) const;
    /// Indices (k, k+1) with t_k <= t <= t_{k+1}; throws coverage_error
    /// outside the stored window.
    std::pair<int, int> bracket(double t) const;
};

/// Inclusive cell range flagged as a discontinuity zone (steep density
/// jump plus halo cells on both sides).
struct ZoneSpan {
    int lo = 0;
    int hi = 0;
    int raw_lo = 0; ///< steep-gradient range without the halo
    int raw_hi = 0;
    bool merged = false; ///< true when overlapping zones were merged
};

struct ZoneOptions {
    /// Flag a cell pair when |rho_{i+1} - rho_i| / min(rho) exceeds this.
    double density_jump = 0.05;
    int halo = 3;
};

/// Locate discontinuity zones in one snapshot.  Overlapping spans (after
/// halo growth) are merged.
std::vector<ZoneSpan> flag_zones(const Snapshot& snap, const ZoneOptions& opts = {});

/// Index of the zone whose [lo, hi] contains the cell, or -1.
int zone_containing(const std::vector<ZoneSpan>& zones, int cell);

} // namespace shocklab
