#include "gridsym/symmetry.hpp"

#include <cmath>

#include "gridsym/errors.hpp"

namespace gridsym {

GridBlock block_at(const MarkedGrid& grid, int offset_row, int offset_col, int m) {
    const int n = grid.spec.n;
    if (m < 1 || m > n)
        throw DimensionError("block size " + std::to_string(m) + " not in [1," + std::to_string(n) + "]");
    if (offset_row < 1 || offset_col < 1 || offset_row + m - 1 > n || offset_col + m - 1 > n)
        throw BoundsError("block does not lie inside the grid");

    GridBlock block;
    block.offset_row = offset_row;
    block.offset_col = offset_col;
    block.m = m;
    block.config = Configuration(m);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c)
            block.config.set(r + 1, c + 1, grid.config.at(offset_row + r, offset_col + c));
    return block;
}

GridBlock sample_block(const MarkedGrid& grid, int m, Rng& rng) {
    const int n = grid.spec.n;
    if (m < 1 || m > n)
        throw DimensionError("block size " + std::to_string(m) + " not in [1," + std::to_string(n) + "]");
    std::uniform_int_distribution<int> offset(1, n - m + 1);
    const int row = offset(rng);
    const int col = offset(rng);
    return block_at(grid, row, col, m);
}

std::vector<int> hamming_trace(const GridBlock& block, const MoveSequence& seq) {
    std::vector<int> trace;
    trace.reserve(seq.size());
    Configuration current = block.config;
    for (const auto& move : seq.moves()) {
        current = apply_move(current, move);
        trace.push_back(current.n() == block.config.n() ? hamming(block.config, current) : -1);
    }
    return trace;
}

SymmetryReport symmetry_test(const GridBlock& block, const MoveSequence& seq, int eta) {
    if (eta < 0) throw ParameterError("eta must be nonnegative");
    SymmetryReport report;
    report.offset_row = block.offset_row;
    report.offset_col = block.offset_col;
    report.m = block.m;
    report.sequence = seq;
    report.trace = hamming_trace(block, seq);
    report.final_hamming = report.trace.empty() ? 0 : report.trace.back();
    report.eta = eta;
    report.symmetric = report.final_hamming <= eta;
    return report;
}

int eta_default(int m, double occupancy) {
    if (occupancy < 0.0 || occupancy > 1.0) throw ParameterError("occupancy must be in [0,1]");
    return static_cast<int>(std::floor(2.0 * m * m * occupancy * (1.0 - occupancy)));
}

ProbEstimate estimate_prob_symmetric(const MarkedGrid& grid, int m, const SequenceSampler& sampler,
                                     int eta, int trials, std::uint64_t seed) {
    if (trials < 1) throw ParameterError("trials must be at least 1");
    if (eta < 0) throw ParameterError("eta must be nonnegative");

    int hits = 0;
    for (int t = 0; t < trials; ++t) {
        Rng rng = make_stream(seed, static_cast<std::uint64_t>(t));
        const GridBlock block = sample_block(grid, m, rng);
        const MoveSequence seq = sampler(rng);
        const auto trace = hamming_trace(block, seq);
        const int final_h = trace.empty() ? 0 : trace.back();
        if (final_h >= 0 && final_h <= eta) ++hits;
    }

    ProbEstimate est;
    est.trials = trials;
    est.probability = static_cast<double>(hits) / trials;
    est.std_error = std::sqrt(est.probability * (1.0 - est.probability) / trials);
    return est;
}

}  // namespace gridsym
