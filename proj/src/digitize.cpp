#include "gridsym/digitize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gridsym/errors.hpp"

namespace gridsym {

void GridSpec::validate() const {
    if (n < 1) throw ParameterError("grid number must be at least 1");
    if (!(l > 0.0) || !std::isfinite(l)) throw ParameterError("cell side l must be positive and finite");
    if (!std::isfinite(x0) || !std::isfinite(y0)) throw ParameterError("grid origin must be finite");
}

GridSpec GridSpec::auto_fit(const PointCloud& cloud, int n) {
    if (n < 1) throw ParameterError("grid number must be at least 1");
    double min_x = std::numeric_limits<double>::infinity(), max_x = -min_x;
    double min_y = min_x, max_y = max_x;
    for (const auto& p : cloud.points) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    GridSpec spec;
    spec.n = n;
    if (cloud.points.empty()) return spec;  // unit grid at the origin
    const double extent = std::max(max_x - min_x, max_y - min_y);
    spec.x0 = min_x;
    spec.y0 = min_y;
    spec.l = extent > 0.0 ? (extent / n) * (1.0 + 4 * std::numeric_limits<double>::epsilon()) : 1.0;
    return spec;
}

const BettiPair& MarkedGrid::betti_at(int row, int col) const {
    const int n = spec.n;
    if (row < 1 || row > n || col < 1 || col > n) throw BoundsError("betti_at outside grid");
    return betti[static_cast<std::size_t>(row - 1) * n + (col - 1)];
}

std::span<const Point> BinnedPoints::cell(int row, int col) const {
    if (row < 1 || row > n || col < 1 || col > n) throw BoundsError("cell index outside grid");
    return cells[static_cast<std::size_t>(row - 1) * n + (col - 1)];
}

BinnedPoints bin_points(const PointCloud& cloud, const GridSpec& spec) {
    spec.validate();
    const int n = spec.n;
    BinnedPoints out;
    out.n = n;
    out.cells.resize(static_cast<std::size_t>(n) * n);
    for (const auto& p : cloud.points) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            throw ParameterError("point coordinates must be finite");
        const double bx = std::floor((p.x - spec.x0) / spec.l);
        const double by = std::floor((p.y - spec.y0) / spec.l);
        if (bx < 0 || bx >= n || by < 0 || by >= n) {
            ++out.dropped;
            continue;
        }
        // Band 0 is the bottom of the grid; row 1 is the top.
        const int row = n - static_cast<int>(by);
        const int col = static_cast<int>(bx) + 1;
        out.cells[static_cast<std::size_t>(row - 1) * n + (col - 1)].push_back(p);
    }
    return out;
}

MicroRaster rasterize_cell(std::span<const Point> points, double cell_x0, double cell_y0,
                           double l, int r) {
    if (r < 1) throw ParameterError("raster resolution must be at least 1");
    if (!(l > 0.0)) throw ParameterError("cell side l must be positive");
    MicroRaster raster(r);
    const double pixel = l / r;
    for (const auto& p : points) {
        // Binning already confined points to [cell_x0, cell_x0 + l); the
        // clamp only absorbs the last-ulp rounding of the division.
        int px = static_cast<int>(std::floor((p.x - cell_x0) / pixel));
        int py = static_cast<int>(std::floor((p.y - cell_y0) / pixel));
        px = std::clamp(px, 0, r - 1);
        py = std::clamp(py, 0, r - 1);
        raster.set_pixel(r - 1 - py, px, true);
    }
    return raster;
}

MarkedGrid generate_grid_diagram(const PointCloud& cloud, const GridSpec& spec, int r, int k) {
    spec.validate();
    if (r < 1) throw ParameterError("raster resolution must be at least 1");
    if (k != 0 && k != 1) throw ParameterError("betti index k must be 0 or 1");

    const int n = spec.n;
    BinnedPoints binned = bin_points(cloud, spec);

    MarkedGrid grid;
    grid.spec = spec;
    grid.config = Configuration(n);
    grid.betti.resize(static_cast<std::size_t>(n) * n);
    grid.betti_index = k;
    grid.dropped_points = binned.dropped;

    for (int row = 1; row <= n; ++row) {
        for (int col = 1; col <= n; ++col) {
            const double cx0 = spec.x0 + (col - 1) * spec.l;
            const double cy0 = spec.y0 + (n - row) * spec.l;
            const MicroRaster raster = rasterize_cell(binned.cell(row, col), cx0, cy0, spec.l, r);
            const CubicalComplex complex = build_complex(raster);
            BettiPair pair{betti0(complex), betti1(complex)};
            grid.betti[static_cast<std::size_t>(row - 1) * n + (col - 1)] = pair;
            if (pair.get(k) != 0) grid.config.set(row, col, true);
        }
    }
    return grid;
}

}  // namespace gridsym
