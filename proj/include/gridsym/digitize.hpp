#pragma once

#include <span>
#include <vector>

#include "gridsym/configuration.hpp"
#include "gridsym/homology.hpp"

namespace gridsym {

struct Point {
    double x = 0.0;
    double y = 0.0;

    bool operator==(const Point&) const = default;
};

struct PointCloud {
    std::vector<Point> points;
};

/// Square grid geometry: n cells per side, each of side length l, anchored at
/// the lower-left corner (x0, y0). Cell intervals are half-open, [a, a+l).
struct GridSpec {
    int n = 1;
    double l = 1.0;
    double x0 = 0.0;
    double y0 = 0.0;

    void validate() const;

    /// Fit the cloud's bounding box: origin at the min corner, l sized so the
    /// largest extent spans n cells. l is widened by a few ulp so points on
    /// the max edge still bin inside the half-open intervals.
    static GridSpec auto_fit(const PointCloud& cloud, int n);
};

struct BettiPair {
    int beta0 = 0;
    int beta1 = 0;

    int get(int k) const { return k == 0 ? beta0 : beta1; }
    bool operator==(const BettiPair&) const = default;
};

/// A digitized grid: geometry, the binary marking, and the per-cell Betti
/// numbers it was derived from. Invariant: config.at(r,c) == 1 exactly when
/// the chosen Betti number of cell (r,c) is nonzero.
struct MarkedGrid {
    GridSpec spec;
    Configuration config;
    std::vector<BettiPair> betti;  // row-major, top row first
    int betti_index = 1;           // the k used for the marking
    int dropped_points = 0;

    const BettiPair& betti_at(int row, int col) const;  // 1-based
};

/// Points grouped by grid cell. Row 1 is the top band of the grid (largest
/// y), matching Configuration's top-row-first layout.
struct BinnedPoints {
    int n = 0;
    std::vector<std::vector<Point>> cells;  // row-major, top row first
    int dropped = 0;

    std::span<const Point> cell(int row, int col) const;  // 1-based
};

/// Assign each point to the cell containing it under the half-open rule
/// (a boundary point belongs to the interval above/right of it). Points
/// outside the n-by-n extent are dropped and counted, never fatal.
BinnedPoints bin_points(const PointCloud& cloud, const GridSpec& spec);

/// Subdivide one cell into r-by-r pixels; a pixel is filled when at least one
/// point lands in it (same half-open rule). cell_x0/cell_y0 is the cell's
/// lower-left corner.
MicroRaster rasterize_cell(std::span<const Point> points, double cell_x0, double cell_y0,
                           double l, int r);

/// Full digitization pipeline: bin, rasterize each cell, compute beta0 and
/// beta1 of its cubical complex, and mark the cell when beta_k is nonzero.
MarkedGrid generate_grid_diagram(const PointCloud& cloud, const GridSpec& spec, int r = 16,
                                 int k = 1);

}  // namespace gridsym
