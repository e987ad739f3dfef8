#include "gridsym/moves.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "gridsym/errors.hpp"

namespace gridsym {

namespace {

void check_commute_index(int index, int n) {
    if (index < 1 || index > n - 1)
        throw BoundsError("commute index " + std::to_string(index) + " not in [1," +
                          std::to_string(n - 1) + "]");
}

}  // namespace

Configuration commute_pair(const Configuration& config, Axis axis, int index) {
    const int n = config.n();
    check_commute_index(index, n);
    Configuration out = config;
    if (axis == Axis::columns) {
        for (int r = 1; r <= n; ++r) {
            out.set(r, index, config.at(r, index + 1));
            out.set(r, index + 1, config.at(r, index));
        }
    } else {
        for (int c = 1; c <= n; ++c) {
            out.set(index, c, config.at(index + 1, c));
            out.set(index + 1, c, config.at(index, c));
        }
    }
    return out;
}

Configuration commute_all(const Configuration& config) {
    Configuration out = config;
    for (int c = 1; c + 1 <= config.n(); c += 2) out = commute_pair(out, Axis::columns, c);
    return out;
}

Configuration cyclic_permute(const Configuration& config, Axis axis, ShiftDir dir) {
    const int n = config.n();
    Configuration out(n);
    for (int r = 1; r <= n; ++r) {
        for (int c = 1; c <= n; ++c) {
            int src_r = r, src_c = c;
            if (axis == Axis::columns)
                src_c = dir == ShiftDir::forward ? (c == 1 ? n : c - 1) : (c == n ? 1 : c + 1);
            else
                src_r = dir == ShiftDir::forward ? (r == 1 ? n : r - 1) : (r == n ? 1 : r + 1);
            out.set(r, c, config.at(src_r, src_c));
        }
    }
    return out;
}

Configuration stabilize(const Configuration& config, int column, int row) {
    const int n = config.n();
    if (row < 1 || row > n || column < 1 || column > n)
        throw BoundsError("stabilize target (" + std::to_string(row) + "," +
                          std::to_string(column) + ") outside grid");
    if (!config.at(row, column))
        throw PreconditionError("stabilize target cell (" + std::to_string(row) + "," +
                                std::to_string(column) + ") is not occupied");

    // The inserted row/column claim indices `row`/`column`; old cells at or
    // past them shift by one, so the split cell itself lands at (row+1, col+1).
    Configuration out(n + 1);
    for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= n; ++c)
            if (config.at(r, c)) out.set(r < row ? r : r + 1, c < column ? c : c + 1, true);

    out.set(row, column + 1, true);
    out.set(row + 1, column, true);
    // (row+1, column+1) already carries the split marking; (row, column) stays empty.
    return out;
}

Configuration destabilize(const Configuration& config, int column, int row) {
    const int n = config.n();
    if (row < 1 || row + 1 > n || column < 1 || column + 1 > n)
        throw BoundsError("destabilize site (" + std::to_string(row) + "," +
                          std::to_string(column) + ") outside grid");
    const bool kink = !config.at(row, column) && config.at(row, column + 1) &&
                      config.at(row + 1, column) && config.at(row + 1, column + 1);
    if (!kink)
        throw PatternError("no kink at (" + std::to_string(row) + "," + std::to_string(column) +
                           ")");
    for (int c = 1; c <= n; ++c)
        if (c != column + 1 && config.at(row, c))
            throw PatternError("row " + std::to_string(row) + " carries markings beyond the kink");
    for (int r = 1; r <= n; ++r)
        if (r != row + 1 && config.at(r, column))
            throw PatternError("column " + std::to_string(column) +
                               " carries markings beyond the kink");

    // Dropping row `row` and column `column` collapses the kink: its corner
    // at (row+1, column+1) becomes the single occupied cell at (row, column).
    Configuration out(n - 1);
    for (int r = 1; r <= n; ++r) {
        if (r == row) continue;
        for (int c = 1; c <= n; ++c) {
            if (c == column) continue;
            if (config.at(r, c)) out.set(r < row ? r : r - 1, c < column ? c : c - 1, true);
        }
    }
    return out;
}

Move Move::CommuteCols(int index) { return Move{Kind::commute_cols, index, ShiftDir::forward, 0, 0}; }
Move Move::CommuteRows(int index) { return Move{Kind::commute_rows, index, ShiftDir::forward, 0, 0}; }
Move Move::CommuteAll() { return Move{Kind::commute_all, 0, ShiftDir::forward, 0, 0}; }
Move Move::CyclicCols(ShiftDir dir) { return Move{Kind::cyclic_cols, 0, dir, 0, 0}; }
Move Move::CyclicRows(ShiftDir dir) { return Move{Kind::cyclic_rows, 0, dir, 0, 0}; }
Move Move::Stabilize(int col, int row) { return Move{Kind::stabilize, 0, ShiftDir::forward, col, row}; }
Move Move::Destabilize(int col, int row) { return Move{Kind::destabilize, 0, ShiftDir::forward, col, row}; }

std::string Move::token() const {
    switch (kind) {
        case Kind::commute_all: return "T1";
        case Kind::commute_cols: return "T1c" + std::to_string(index);
        case Kind::commute_rows: return "T1r" + std::to_string(index);
        case Kind::cyclic_cols: return dir == ShiftDir::forward ? "T2" : "T2b";
        case Kind::cyclic_rows: return dir == ShiftDir::forward ? "T2r" : "T2rb";
        case Kind::stabilize: return "T3+" + std::to_string(col) + "." + std::to_string(row);
        case Kind::destabilize: return "T3-" + std::to_string(col) + "." + std::to_string(row);
    }
    throw ParameterError("unknown move kind");
}

namespace {

int parse_int(std::string_view text, const std::string& token) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw ParameterError("bad move token '" + token + "'");
    return value;
}

}  // namespace

Move Move::from_token(const std::string& token) {
    std::string_view t(token);
    if (t == "T1") return CommuteAll();
    if (t == "T2") return CyclicCols(ShiftDir::forward);
    if (t == "T2b") return CyclicCols(ShiftDir::backward);
    if (t == "T2r") return CyclicRows(ShiftDir::forward);
    if (t == "T2rb") return CyclicRows(ShiftDir::backward);
    if (t.starts_with("T1c")) return CommuteCols(parse_int(t.substr(3), token));
    if (t.starts_with("T1r")) return CommuteRows(parse_int(t.substr(3), token));
    if (t.starts_with("T3+") || t.starts_with("T3-")) {
        const auto dot = t.find('.', 3);
        if (dot == std::string_view::npos) throw ParameterError("bad move token '" + token + "'");
        const int col = parse_int(t.substr(3, dot - 3), token);
        const int row = parse_int(t.substr(dot + 1), token);
        return t[2] == '+' ? Stabilize(col, row) : Destabilize(col, row);
    }
    throw ParameterError("bad move token '" + token + "'");
}

Configuration apply_move(const Configuration& config, const Move& move) {
    switch (move.kind) {
        case Move::Kind::commute_cols: return commute_pair(config, Axis::columns, move.index);
        case Move::Kind::commute_rows: return commute_pair(config, Axis::rows, move.index);
        case Move::Kind::commute_all: return commute_all(config);
        case Move::Kind::cyclic_cols: return cyclic_permute(config, Axis::columns, move.dir);
        case Move::Kind::cyclic_rows: return cyclic_permute(config, Axis::rows, move.dir);
        case Move::Kind::stabilize: return stabilize(config, move.col, move.row);
        case Move::Kind::destabilize: return destabilize(config, move.col, move.row);
    }
    throw ParameterError("unknown move kind");
}

MoveSequence MoveSequence::from_moves(std::vector<Move> moves) {
    int balance = 0;
    for (const auto& m : moves) {
        if (m.kind == Move::Kind::stabilize) ++balance;
        if (m.kind == Move::Kind::destabilize) --balance;
    }
    if (balance != 0)
        throw ParameterError("stabilize/destabilize counts differ; the grid number would not be restored");
    MoveSequence seq;
    seq.moves_ = std::move(moves);
    return seq;
}

MoveSequence MoveSequence::canonical(int a, int b) {
    if (a < 0 || b < 0) throw ParameterError("canonical exponents must be nonnegative");
    std::vector<Move> moves;
    moves.reserve(static_cast<std::size_t>(a) + b);
    for (int i = 0; i < a; ++i) moves.push_back(Move::CommuteAll());
    for (int i = 0; i < b; ++i) moves.push_back(Move::CyclicCols(ShiftDir::forward));
    MoveSequence seq = from_moves(std::move(moves));
    seq.exponents_ = {a, b, 0};
    return seq;
}

MoveSequence MoveSequence::parse(const std::string& spec) {
    std::vector<Move> moves;
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        auto comma = spec.find(',', pos);
        if (comma == std::string::npos) comma = spec.size();
        auto first = spec.find_first_not_of(" \t", pos);
        auto last = spec.find_last_not_of(" \t", comma == 0 ? 0 : comma - 1);
        if (first != std::string::npos && first < comma)
            moves.push_back(Move::from_token(spec.substr(first, last - first + 1)));
        pos = comma + 1;
    }
    if (moves.empty() && !spec.empty() &&
        spec.find_first_not_of(" \t,") != std::string::npos)
        throw ParameterError("unparseable move list '" + spec + "'");
    return from_moves(std::move(moves));
}

Configuration apply_sequence(const Configuration& config, const MoveSequence& seq) {
    Configuration out = config;
    for (const auto& m : seq.moves()) out = apply_move(out, m);
    return out;
}

namespace {

// Destination of 1-based (row, col) under a single permutation move.
std::pair<int, int> permute_cell(const Move& m, int row, int col, int n) {
    switch (m.kind) {
        case Move::Kind::commute_cols:
            check_commute_index(m.index, n);
            if (col == m.index) return {row, col + 1};
            if (col == m.index + 1) return {row, col - 1};
            return {row, col};
        case Move::Kind::commute_rows:
            check_commute_index(m.index, n);
            if (row == m.index) return {row + 1, col};
            if (row == m.index + 1) return {row - 1, col};
            return {row, col};
        case Move::Kind::commute_all:
            if (col % 2 == 1 && col + 1 <= n) return {row, col + 1};
            if (col % 2 == 0) return {row, col - 1};
            return {row, col};
        case Move::Kind::cyclic_cols:
            if (m.dir == ShiftDir::forward) return {row, col == n ? 1 : col + 1};
            return {row, col == 1 ? n : col - 1};
        case Move::Kind::cyclic_rows:
            if (m.dir == ShiftDir::forward) return {row == n ? 1 : row + 1, col};
            return {row == 1 ? n : row - 1, col};
        default:
            throw ParameterError("move is not a cell permutation");
    }
}

}  // namespace

std::vector<int> cell_permutation(const MoveSequence& seq, int n) {
    std::vector<int> perm(static_cast<std::size_t>(n) * n);
    std::iota(perm.begin(), perm.end(), 0);

    const auto& moves = seq.moves();
    for (std::size_t i = 0; i < moves.size(); ++i) {
        const auto& m = moves[i];
        if (m.kind == Move::Kind::stabilize) {
            // Only an immediately cancelled kink keeps the sequence a permutation.
            if (i + 1 < moves.size() && moves[i + 1].kind == Move::Kind::destabilize &&
                moves[i + 1].col == m.col && moves[i + 1].row == m.row) {
                ++i;
                continue;
            }
            throw ParameterError("stabilization without immediate removal is not a cell permutation");
        }
        if (m.kind == Move::Kind::destabilize)
            throw ParameterError("destabilization without preceding kink is not a cell permutation");
        for (auto& dest : perm) {
            const int r = dest / n + 1, c = dest % n + 1;
            auto [nr, nc] = permute_cell(m, r, c, n);
            dest = (nr - 1) * n + (nc - 1);
        }
    }
    return perm;
}

int fixed_point_count(const MoveSequence& seq, int n) {
    const auto perm = cell_permutation(seq, n);
    int fixed = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        if (perm[i] == static_cast<int>(i)) ++fixed;
    return fixed;
}

MoveSequence sample_canonical_sequence(Rng& rng, int max_exponent) {
    std::uniform_int_distribution<int> exp_dist(0, max_exponent);
    const int a = exp_dist(rng);
    const int b = exp_dist(rng);
    return MoveSequence::canonical(a, b);
}

}  // namespace gridsym
