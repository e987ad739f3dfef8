#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gridsym/rng.hpp"

namespace gridsym {

/// An n-by-n binary occupancy matrix: the marking pattern of a square grid
/// diagram. Row 1 is the top row; all public indices are 1-based, matching
/// the move and JSON conventions used throughout.
///
/// Configurations are immutable values in practice: every move returns a new
/// one. Cheap to copy for the grid sizes this library targets.
class Configuration {
  public:
    Configuration() = default;

    /// All-empty n-by-n grid.
    explicit Configuration(int n);

    /// From row-major cells (top row first). Every entry must be 0 or 1 and
    /// cells.size() must equal n*n.
    Configuration(int n, std::vector<std::uint8_t> cells);

    /// Fixture helper: one string per row, '0'/'1' characters, top row first.
    static Configuration from_rows(const std::vector<std::string>& rows);

    int n() const { return n_; }
    int cell_count() const { return n_ * n_; }

    bool at(int row, int col) const;        // 1-based
    void set(int row, int col, bool value);  // 1-based

    int occupied_count() const;
    double occupancy() const;  // occupied_count / n^2; 0 for the empty grid

    const std::vector<std::uint8_t>& cells() const { return cells_; }

    bool operator==(const Configuration& other) const = default;

  private:
    void check_bounds(int row, int col) const;

    int n_ = 0;
    std::vector<std::uint8_t> cells_;  // row-major, top row first
};

/// Number of cells whose occupancy differs. Both grids must have the same
/// grid number; comparing mid-stabilization grids is a dimension error.
int hamming(const Configuration& a, const Configuration& b);

/// i.i.d. Bernoulli(p) occupancy, one draw per cell in row-major order.
Configuration random_configuration(int n, double p, Rng& rng);

}  // namespace gridsym
