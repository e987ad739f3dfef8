#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "gridsym/configuration.hpp"
#include "gridsym/digitize.hpp"
#include "gridsym/moves.hpp"
#include "gridsym/rng.hpp"

namespace gridsym {

/// An m-by-m window snapshot of a marked grid. offset is the 1-based
/// (row, col) of the window's top-left cell in the parent.
struct GridBlock {
    int offset_row = 1;
    int offset_col = 1;
    int m = 0;
    Configuration config;
};

/// Deterministic window extraction.
GridBlock block_at(const MarkedGrid& grid, int offset_row, int offset_col, int m);

/// Uniformly random window position; identical draws for identical rng state.
GridBlock sample_block(const MarkedGrid& grid, int m, Rng& rng);

/// Hamming distance to the ORIGINAL block after each prefix of the sequence
/// (never between consecutive steps). Entry t is the distance after the
/// first t+1 moves. Where an open stabilization leaves the grid number
/// different from the original's, the distance is undefined and recorded
/// as -1; balanced sequences always end on a defined entry.
std::vector<int> hamming_trace(const GridBlock& block, const MoveSequence& seq);

struct SymmetryReport {
    int offset_row = 1;
    int offset_col = 1;
    int m = 0;
    MoveSequence sequence;
    std::vector<int> trace;
    int final_hamming = 0;
    int eta = 0;
    bool symmetric = false;
};

/// Threshold classification: symmetric exactly when the final distance to
/// the original is at most eta.
SymmetryReport symmetry_test(const GridBlock& block, const MoveSequence& seq, int eta);

/// Default threshold: the expected distance of an occupancy-matched
/// coin-flip grid under a fixed-point-free rearrangement, floor(2 m^2 p(1-p)).
/// Blocks scoring below that null expectation count as symmetric.
int eta_default(int m, double occupancy);

using SequenceSampler = std::function<MoveSequence(Rng&)>;

struct ProbEstimate {
    double probability = 0.0;
    double std_error = 0.0;
    int trials = 0;
};

/// Monte Carlo estimate of Pr[final H <= eta] over random (block, sequence)
/// draws, with the binomial standard error. Trial i uses RNG stream i of
/// `seed`, so estimates are reproducible regardless of evaluation order.
ProbEstimate estimate_prob_symmetric(const MarkedGrid& grid, int m, const SequenceSampler& sampler,
                                     int eta, int trials, std::uint64_t seed);

}  // namespace gridsym
