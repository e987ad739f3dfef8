#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "gridsym/configuration.hpp"
#include "gridsym/errors.hpp"
#include "gridsym/moves.hpp"
#include "gridsym/rng.hpp"

using namespace gridsym;

namespace {

// The worked 4x4 example: a marked block, two cyclic column shifts, then two
// commutation sweeps, with every distance measured against the first panel.
const Configuration kOriginal = Configuration::from_rows({"1100", "1000", "0101", "0101"});
const Configuration kAfterShift = Configuration::from_rows({"0110", "0100", "1010", "1010"});
const Configuration kAfterTwoShifts = Configuration::from_rows({"0011", "0010", "0101", "0101"});
const Configuration kAfterSweep = Configuration::from_rows({"0011", "0001", "1010", "1010"});

Configuration random_config(int n, Rng& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Configuration c(n);
    for (int r = 1; r <= n; ++r)
        for (int col = 1; col <= n; ++col)
            if (unit(rng) < 0.5) c.set(r, col, true);
    return c;
}

Move random_permutation_move(int n, Rng& rng) {
    std::uniform_int_distribution<int> kind(0, 4);
    std::uniform_int_distribution<int> index(1, n - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    switch (kind(rng)) {
        case 0: return Move::CommuteCols(index(rng));
        case 1: return Move::CommuteRows(index(rng));
        case 2: return Move::CommuteAll();
        case 3: return Move::CyclicCols(coin(rng) ? ShiftDir::forward : ShiftDir::backward);
        default: return Move::CyclicRows(coin(rng) ? ShiftDir::forward : ShiftDir::backward);
    }
}

}  // namespace

TEST_CASE("cyclic column shift reproduces the worked example panels") {
    CHECK(cyclic_permute(kOriginal, Axis::columns, ShiftDir::forward) == kAfterShift);
    CHECK(cyclic_permute(kAfterShift, Axis::columns, ShiftDir::forward) == kAfterTwoShifts);
}

TEST_CASE("commutation sweep reproduces the worked example panels") {
    CHECK(commute_all(kAfterTwoShifts) == kAfterSweep);
    CHECK(commute_all(kAfterSweep) == kAfterTwoShifts);
}

TEST_CASE("worked example distances against the original panel") {
    CHECK(hamming(kOriginal, kAfterShift) == 12);
    CHECK(hamming(kOriginal, kAfterTwoShifts) == 6);
    CHECK(hamming(kOriginal, kAfterSweep) == 14);
}

TEST_CASE("commute_pair swaps exactly the named pair") {
    // The sweep on the third panel equals commuting columns 1 then 3.
    Configuration c = commute_pair(kAfterTwoShifts, Axis::columns, 1);
    c = commute_pair(c, Axis::columns, 3);
    CHECK(c == kAfterSweep);

    const Configuration two = Configuration::from_rows({"10", "01"});
    CHECK(commute_pair(two, Axis::columns, 1) == Configuration::from_rows({"01", "10"}));
}

TEST_CASE("commute_pair bounds checking") {
    CHECK_THROWS_AS(commute_pair(kOriginal, Axis::columns, 0), BoundsError);
    CHECK_THROWS_AS(commute_pair(kOriginal, Axis::columns, 4), BoundsError);
    CHECK_THROWS_AS(commute_pair(kOriginal, Axis::rows, 5), BoundsError);
}

TEST_CASE("commute moves are involutions") {
    Rng rng = make_stream(11);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + trial % 7;
        const Configuration c = random_config(n, rng);
        std::uniform_int_distribution<int> index(1, n - 1);
        const int i = index(rng);
        CHECK(commute_pair(commute_pair(c, Axis::columns, i), Axis::columns, i) == c);
        CHECK(commute_pair(commute_pair(c, Axis::rows, i), Axis::rows, i) == c);
        CHECK(commute_all(commute_all(c)) == c);
    }
}

TEST_CASE("commutation sweep leaves the last column of an odd grid alone") {
    const Configuration c = Configuration::from_rows({"100", "100", "011"});
    CHECK(commute_all(c) == Configuration::from_rows({"010", "010", "101"}));
}

TEST_CASE("cyclic shifts have order n and fix constant grids") {
    Rng rng = make_stream(12);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + trial % 8;
        const Configuration c = random_config(n, rng);
        Configuration cycled = c;
        for (int i = 0; i < n; ++i) cycled = cyclic_permute(cycled, Axis::columns, ShiftDir::forward);
        CHECK(cycled == c);
        CHECK(cyclic_permute(cyclic_permute(c, Axis::rows, ShiftDir::forward), Axis::rows,
                             ShiftDir::backward) == c);
    }
    Configuration ones(3);
    for (int r = 1; r <= 3; ++r)
        for (int c = 1; c <= 3; ++c) ones.set(r, c, true);
    CHECK(cyclic_permute(ones, Axis::columns, ShiftDir::forward) == ones);
}

TEST_CASE("stabilize splits the smallest grid into the forced kink") {
    Configuration one(1);
    one.set(1, 1, true);
    CHECK(stabilize(one, 1, 1) == Configuration::from_rows({"01", "11"}));
}

TEST_CASE("stabilize shifts distant markings with the inserted row and column") {
    Configuration c(6);
    c.set(5, 3, true);
    c.set(5, 5, true);
    const Configuration grown = stabilize(c, 5, 5);
    REQUIRE(grown.n() == 7);
    CHECK(grown.occupied_count() == 4);
    CHECK(grown.at(6, 3));  // the untouched marking rode the row insertion down
    CHECK(grown.at(5, 6));
    CHECK(grown.at(6, 5));
    CHECK(grown.at(6, 6));
    CHECK_FALSE(grown.at(5, 5));
    CHECK(destabilize(grown, 5, 5) == c);
}

TEST_CASE("stabilize preconditions") {
    Configuration c(3);
    c.set(2, 2, true);
    CHECK_THROWS_AS(stabilize(c, 1, 1), PreconditionError);  // empty target
    CHECK_THROWS_AS(stabilize(c, 4, 2), BoundsError);
    CHECK_THROWS_AS(stabilize(c, 0, 2), BoundsError);
}

TEST_CASE("destabilize collapses the kink back to one cell") {
    CHECK(destabilize(Configuration::from_rows({"01", "11"}), 1, 1) == [] {
        Configuration one(1);
        one.set(1, 1, true);
        return one;
    }());
}

TEST_CASE("destabilize rejects malformed sites") {
    CHECK_THROWS_AS(destabilize(Configuration::from_rows({"11", "11"}), 1, 1), PatternError);
    CHECK_THROWS_AS(destabilize(Configuration::from_rows({"00", "00"}), 1, 1), PatternError);
    // Kink present but the split column carries an extra marking.
    Configuration extra = Configuration::from_rows({"010", "110", "100"});
    CHECK_THROWS_AS(destabilize(extra, 1, 1), PatternError);
    CHECK_THROWS_AS(destabilize(Configuration::from_rows({"01", "11"}), 2, 1), BoundsError);
}

TEST_CASE("destabilize inverts stabilize at every occupied cell") {
    Rng rng = make_stream(13);
    int checked = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + trial % 6;
        const Configuration c = random_config(n, rng);
        for (int r = 1; r <= n; ++r)
            for (int col = 1; col <= n; ++col)
                if (c.at(r, col)) {
                    CHECK(destabilize(stabilize(c, col, r), col, r) == c);
                    ++checked;
                }
    }
    CHECK(checked > 100);
}

TEST_CASE("apply_sequence runs the worked example end to end") {
    const MoveSequence seq = MoveSequence::from_moves(
        {Move::CyclicCols(), Move::CyclicCols(), Move::CommuteAll(), Move::CommuteAll()});
    CHECK(apply_sequence(kOriginal, seq) == kAfterTwoShifts);  // final panel equals the third
    CHECK(apply_sequence(kOriginal, MoveSequence()) == kOriginal);
    const MoveSequence inverse_pair = MoveSequence::from_moves(
        {Move::CyclicCols(ShiftDir::forward), Move::CyclicCols(ShiftDir::backward)});
    CHECK(apply_sequence(kOriginal, inverse_pair) == kOriginal);
}

TEST_CASE("sequences preserve the grid number") {
    Rng rng = make_stream(14);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + trial % 5;
        Configuration c = random_config(n, rng);
        c.set(1, 1, true);
        const MoveSequence seq = MoveSequence::from_moves(
            {Move::Stabilize(1, 1), Move::Destabilize(1, 1), Move::CommuteAll(), Move::CyclicRows()});
        CHECK(apply_sequence(c, seq).n() == n);
    }
}

TEST_CASE("unbalanced stabilizations are rejected at construction") {
    CHECK_THROWS_AS(MoveSequence::from_moves({Move::Stabilize(1, 1)}), ParameterError);
    CHECK_THROWS_AS(MoveSequence::from_moves({Move::Destabilize(1, 1), Move::Stabilize(1, 1),
                                              Move::Stabilize(2, 2)}),
                    ParameterError);
}

TEST_CASE("hamming distance basics") {
    CHECK(hamming(kOriginal, kOriginal) == 0);
    Configuration ones(4), zeros(4);
    for (int r = 1; r <= 4; ++r)
        for (int c = 1; c <= 4; ++c) ones.set(r, c, true);
    CHECK(hamming(ones, zeros) == 16);
    CHECK_THROWS_AS(hamming(Configuration(3), Configuration(4)), DimensionError);
}

TEST_CASE("hamming is a metric on same-size grids") {
    Rng rng = make_stream(15);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + trial % 6;
        const Configuration a = random_config(n, rng);
        const Configuration b = random_config(n, rng);
        const Configuration c = random_config(n, rng);
        CHECK(hamming(a, b) >= 0);
        CHECK(hamming(a, b) == hamming(b, a));
        CHECK((hamming(a, b) == 0) == (a == b));
        CHECK(hamming(a, c) <= hamming(a, b) + hamming(b, c));
    }
}

TEST_CASE("distance to a permuted grid is even and vanishes on constants") {
    Rng rng = make_stream(16);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + trial % 6;
        const Configuration a = random_config(n, rng);
        const Move m = random_permutation_move(n, rng);
        CHECK(hamming(a, apply_move(a, m)) % 2 == 0);

        Configuration ones(n), zeros(n);
        for (int r = 1; r <= n; ++r)
            for (int c = 1; c <= n; ++c) ones.set(r, c, true);
        std::vector<Move> moves;
        for (int i = 0; i < 6; ++i) moves.push_back(random_permutation_move(n, rng));
        const MoveSequence seq = MoveSequence::from_moves(moves);
        CHECK(hamming(ones, apply_sequence(ones, seq)) == 0);
        CHECK(hamming(zeros, apply_sequence(zeros, seq)) == 0);
    }
}

TEST_CASE("cell permutation matches the actual move action") {
    Rng rng = make_stream(17);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + trial % 6;
        std::vector<Move> moves;
        for (int i = 0; i < 5; ++i) moves.push_back(random_permutation_move(n, rng));
        const MoveSequence seq = MoveSequence::from_moves(moves);
        const auto perm = cell_permutation(seq, n);

        // Single-cell probes: the marking at i must land exactly at perm[i].
        for (int i = 0; i < n * n; ++i) {
            Configuration probe(n);
            probe.set(i / n + 1, i % n + 1, true);
            const Configuration moved = apply_sequence(probe, seq);
            CHECK(moved.at(perm[i] / n + 1, perm[i] % n + 1));
            CHECK(moved.occupied_count() == 1);
        }
    }
}

TEST_CASE("fixed point counts for the standard moves") {
    const auto single_move_seq = [](Move m) { return MoveSequence::from_moves({m}); };
    CHECK(fixed_point_count(single_move_seq(Move::CommuteCols(1)), 4) == 8);
    CHECK(fixed_point_count(single_move_seq(Move::CyclicCols()), 4) == 0);
    CHECK(fixed_point_count(single_move_seq(Move::CommuteAll()), 4) == 0);
    CHECK(fixed_point_count(single_move_seq(Move::CommuteAll()), 5) == 5);  // last column stays
    CHECK(fixed_point_count(MoveSequence::canonical(0, 0), 3) == 9);
}

TEST_CASE("immediately cancelled kinks count as the identity permutation") {
    const MoveSequence paired = MoveSequence::from_moves(
        {Move::Stabilize(2, 2), Move::Destabilize(2, 2), Move::CyclicCols()});
    CHECK(fixed_point_count(paired, 4) == 0);  // the cyclic shift still displaces everything

    const MoveSequence split = MoveSequence::from_moves(
        {Move::Stabilize(2, 2), Move::CommuteAll(), Move::Destabilize(2, 2)});
    CHECK_THROWS_AS(cell_permutation(split, 4), ParameterError);
}

TEST_CASE("move tokens round-trip") {
    const std::vector<Move> moves = {Move::CommuteAll(),    Move::CommuteCols(3),
                                     Move::CommuteRows(2),  Move::CyclicCols(ShiftDir::backward),
                                     Move::CyclicRows(),    Move::Stabilize(2, 3),
                                     Move::Destabilize(2, 3)};
    for (const auto& m : moves) CHECK(Move::from_token(m.token()) == m);
    CHECK_THROWS_AS(Move::from_token("T9"), ParameterError);
    CHECK_THROWS_AS(Move::from_token("T1cX"), ParameterError);
}

TEST_CASE("sequence parsing") {
    const MoveSequence seq = MoveSequence::parse("T2, T2, T1, T1");
    REQUIRE(seq.size() == 4);
    CHECK(seq.moves()[0] == Move::CyclicCols());
    CHECK(seq.moves()[2] == Move::CommuteAll());
    CHECK(MoveSequence::parse("").empty());
    CHECK_THROWS_AS(MoveSequence::parse("T2,bogus"), ParameterError);
}

TEST_CASE("canonical sequences record their exponents") {
    const MoveSequence seq = MoveSequence::canonical(2, 3);
    REQUIRE(seq.exponents().has_value());
    CHECK((*seq.exponents())[0] == 2);
    CHECK((*seq.exponents())[1] == 3);
    CHECK(seq.size() == 5);
    CHECK_FALSE(MoveSequence::from_moves({Move::CommuteAll()}).exponents().has_value());
}

TEST_CASE("configuration validation") {
    CHECK_THROWS_AS(Configuration(2, {1, 0, 1}), DimensionError);
    CHECK_THROWS_AS(Configuration(2, {1, 0, 2, 0}), ParameterError);
    CHECK_THROWS_AS(Configuration::from_rows({"10", "1"}), DimensionError);
    const Configuration c(3);
    CHECK_THROWS_AS(c.at(0, 1), BoundsError);
    CHECK_THROWS_AS(c.at(1, 4), BoundsError);
}
