#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gridsym/configuration.hpp"
#include "gridsym/rng.hpp"

namespace gridsym {

enum class Axis { rows, columns };
enum class ShiftDir { forward, backward };

/// Swap the two consecutive rows/columns at `index` and `index + 1`.
/// Requires 1 <= index <= n-1. Involution.
Configuration commute_pair(const Configuration& config, Axis axis, int index);

/// One commutation sweep: columns (1,2), (3,4), ... pairwise swapped.
/// For odd n the last column stays put. Involution.
Configuration commute_all(const Configuration& config);

/// Wraparound shift of rows or columns. Forward on columns moves every
/// column one place right and wraps the last column around to position 1;
/// backward is the inverse. Order n: applying forward n times is a no-op.
Configuration cyclic_permute(const Configuration& config, Axis axis, ShiftDir dir);

/// Kink addition: grow the grid from n to n+1 by splitting the occupied cell
/// at (row, col). An empty row and column are inserted at the target's own
/// indices, pushing it to (row+1, col+1); the marking becomes the three-cell
/// L {(row, col+1), (row+1, col), (row+1, col+1)} with the corner (row, col)
/// left empty. Everything else shifts with the inserted row/column.
Configuration stabilize(const Configuration& config, int column, int row);

/// Kink removal, the exact inverse of stabilize with the same (column, row).
/// Requires the L-kink pattern at (row, col) and requires row `row` and
/// column `col` to be otherwise empty, as a fresh stabilization leaves them.
Configuration destabilize(const Configuration& config, int column, int row);

/// One grid move. Tagged struct rather than a class hierarchy: moves are
/// small, closed-set values that get serialized, compared and switched on.
struct Move {
    enum class Kind {
        commute_cols,   // uses index
        commute_rows,   // uses index
        commute_all,    // no payload
        cyclic_cols,    // uses dir
        cyclic_rows,    // uses dir
        stabilize,      // uses col, row
        destabilize,    // uses col, row
    };

    Kind kind = Kind::commute_all;
    int index = 0;
    ShiftDir dir = ShiftDir::forward;
    int col = 0;
    int row = 0;

    static Move CommuteCols(int index);
    static Move CommuteRows(int index);
    static Move CommuteAll();
    static Move CyclicCols(ShiftDir dir = ShiftDir::forward);
    static Move CyclicRows(ShiftDir dir = ShiftDir::forward);
    static Move Stabilize(int col, int row);
    static Move Destabilize(int col, int row);

    /// Compact token: T1, T1c3, T1r2, T2, T2b, T2r, T2rb, T3+2.3, T3-2.3.
    std::string token() const;
    static Move from_token(const std::string& token);

    bool operator==(const Move&) const = default;
};

Configuration apply_move(const Configuration& config, const Move& move);

/// An ordered list of grid moves, applied left to right. Stabilize and
/// destabilize counts must balance so the grid number is restored by the
/// time configurations get compared.
class MoveSequence {
  public:
    MoveSequence() = default;

    /// Validates the stabilization-pairing invariant.
    static MoveSequence from_moves(std::vector<Move> moves);

    /// Canonical commute-then-shift form: `a` commutation sweeps followed by
    /// `b` forward column shifts (no stabilizations).
    static MoveSequence canonical(int a, int b);

    /// Parse a comma-separated token list, e.g. "T2,T2,T1,T1".
    static MoveSequence parse(const std::string& spec);

    const std::vector<Move>& moves() const { return moves_; }
    bool empty() const { return moves_.empty(); }
    std::size_t size() const { return moves_.size(); }

    /// (a, b, c) when built via canonical(); unset for free-form sequences.
    std::optional<std::array<int, 3>> exponents() const { return exponents_; }

    bool operator==(const MoveSequence&) const = default;

  private:
    std::vector<Move> moves_;
    std::optional<std::array<int, 3>> exponents_;
};

Configuration apply_sequence(const Configuration& config, const MoveSequence& seq);

/// The net cell rearrangement of a sequence, as a permutation of 0-based
/// row-major cell indices: result[i] is where the marking at cell i ends up.
/// Defined for commutation/cyclic moves and for stabilize/destabilize written
/// as immediate cancelling pairs; anything else is not a permutation and
/// throws ParameterError.
std::vector<int> cell_permutation(const MoveSequence& seq, int n);

/// Number of cells the sequence leaves in place.
int fixed_point_count(const MoveSequence& seq, int n);

/// Default move-sequence distribution: commutation and shift exponents drawn
/// uniformly from {0..4}, no stabilizations.
MoveSequence sample_canonical_sequence(Rng& rng, int max_exponent = 4);

}  // namespace gridsym
