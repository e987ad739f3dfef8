#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace gridsym {

/// Binary pixel image of one grid cell, r-by-r, row 0 at the top.
class MicroRaster {
  public:
    MicroRaster() = default;
    explicit MicroRaster(int r);
    MicroRaster(int r, std::vector<std::uint8_t> pixels);

    /// Fixture format: one '0'/'1' line per pixel row.
    static MicroRaster from_lines(const std::vector<std::string>& lines);

    int r() const { return r_; }
    bool pixel(int row, int col) const { return px_[static_cast<std::size_t>(row) * r_ + col] != 0; }  // 0-based
    void set_pixel(int row, int col, bool v) { px_[static_cast<std::size_t>(row) * r_ + col] = v ? 1 : 0; }
    bool empty() const;

    const std::vector<std::uint8_t>& pixels() const { return px_; }

  private:
    int r_ = 0;
    std::vector<std::uint8_t> px_;
};

/// Cubical complex of a binary raster: each filled pixel contributes a closed
/// unit square (one face, four edges, four vertices), with cells shared
/// between adjacent pixels identified rather than duplicated.
struct CubicalComplex {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;      // vertex index pairs, first < second
    std::vector<std::array<int, 4>> faces;       // edge indices bounding each square

    int edge_count() const { return static_cast<int>(edges.size()); }
    int face_count() const { return static_cast<int>(faces.size()); }
    int euler_characteristic() const { return vertex_count - edge_count() + face_count(); }
};

CubicalComplex build_complex(const MicroRaster& raster);

/// Connected components of the 1-skeleton (union-find over vertices).
int betti0(const CubicalComplex& complex);

/// Independent loops: beta1 = beta0 - (V - E + F). Nonnegative for these
/// planar complexes since no 2-cycles exist.
int betti1(const CubicalComplex& complex);

/// Slow verification path: Betti number from explicit boundary-matrix ranks
/// over GF(2), beta_k = dim ker d_k - rank d_{k+1}. Independent of the
/// union-find/Euler route. k must be 0 or 1.
int betti_oracle(const CubicalComplex& complex, int k);

}  // namespace gridsym
