#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "gridsym/configuration.hpp"
#include "gridsym/moves.hpp"
#include "gridsym/rng.hpp"

namespace gridsym {

struct LatticeShape {
    int rows = 1;
    int cols = 1;

    int cells() const { return rows * cols; }
    bool square() const { return rows == cols; }
    bool operator==(const LatticeShape&) const = default;
};

/// Per-edge coupling strengths keyed by the 1-based endpoints
/// (r1,c1,r2,c2), lexicographically ordered; unlisted edges fall back to
/// the default.
struct EdgeCouplings {
    double default_value = 0.0;
    std::map<std::array<int, 4>, double> values;

    double at(int r1, int c1, int r2, int c2) const;
};

struct IsingParams {
    LatticeShape shape;
    double coupling = 1.0;                      // uniform J
    std::optional<EdgeCouplings> edge_couplings;  // overrides `coupling` when set
    double field = 0.0;                         // longitudinal field strength
    double tau = 1.0;                           // inverse-temperature-like weight, > 0
    bool periodic = false;                      // open boundary by default

    void validate() const;
};

/// Spins on a rows-by-cols lattice, one of {-1,+1} per cell. Occupied grid
/// cells map to +1, empty ones to -1, losslessly in both directions.
class SpinGrid {
  public:
    SpinGrid() = default;
    SpinGrid(LatticeShape shape, std::vector<std::int8_t> spins);

    static SpinGrid from_configuration(const Configuration& config);
    Configuration to_configuration() const;  // square lattices only

    LatticeShape shape() const { return shape_; }
    int spin(int row, int col) const;  // 1-based, returns -1 or +1
    const std::vector<std::int8_t>& spins() const { return spins_; }

    /// Bit i set when cell i (row-major) is +1. Needs at most 64 cells.
    std::uint64_t state_bits() const;

    bool operator==(const SpinGrid&) const = default;

  private:
    LatticeShape shape_;
    std::vector<std::int8_t> spins_;
};

/// Configuration energy: minus the coupling-weighted sum over 4-adjacent
/// spin pairs, minus the field-weighted spin sum.
double hamiltonian(const SpinGrid& config, const IsingParams& params);

/// Largest cell count for which exhaustive enumeration is allowed.
inline constexpr int kExactEnumerationLimit = 20;

/// Sum of Boltzmann weights exp(-tau * E) over all 2^cells configurations.
/// Lattices beyond the enumeration limit raise CapacityError and should be
/// sampled with Metropolis instead.
double exact_partition(const IsingParams& params);

/// exp(-tau * E) / Z for a Z obtained from exact_partition with the same
/// parameters.
double gibbs_probability(const SpinGrid& config, const IsingParams& params, double Z);

/// Single-spin-flip Metropolis chain targeting the Gibbs distribution.
/// Proposals pick a uniformly random cell; acceptance is min(1, exp(-tau*dE)).
/// One sweep is cells() proposals. Deterministic for a fixed seed.
class MetropolisSampler {
  public:
    MetropolisSampler(const IsingParams& params, std::uint64_t seed);

    /// One flip proposal.
    void step();
    /// cells() proposals.
    void sweep();
    /// Advance one sweep and return the current state.
    const SpinGrid& next();

    const SpinGrid& state() const { return state_; }
    double acceptance_rate() const;
    std::int64_t proposals() const { return proposals_; }

  private:
    IsingParams params_;
    SpinGrid state_;
    std::vector<std::vector<std::pair<int, double>>> neighbors_;  // (cell, J) lists
    Rng rng_;
    std::int64_t proposals_ = 0;
    std::int64_t accepted_ = 0;
};

/// Expectation of the Hamming distance between a configuration and its image
/// under the sequence, taken over the Gibbs distribution. Exhaustive; the
/// lattice must be square (moves act on square grids) and within the
/// enumeration limit. The sequence must induce a cell permutation.
double exact_expected_hamming(const IsingParams& params, const MoveSequence& seq);

struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    int samples = 0;
};

/// Monte Carlo counterpart over Metropolis samples; the standard error comes
/// from batch means to absorb chain autocorrelation.
McEstimate mc_expected_hamming(const IsingParams& params, const MoveSequence& seq, int sweeps,
                               int burn_in, std::uint64_t seed);

enum class ExpectationMode { exact, monte_carlo };

double expected_hamming(const IsingParams& params, const MoveSequence& seq, ExpectationMode mode,
                        int sweeps, int burn_in, std::uint64_t seed);

/// Expected distance for i.i.d. occupancy p under the sequence's net cell
/// rearrangement: 2 (m^2 - f) p (1 - p), where f counts the cells the
/// rearrangement leaves in place. Equals 2 m^2 p (1-p) when nothing stays put.
double bernoulli_expected_hamming(int m, double p, const MoveSequence& seq);

}  // namespace gridsym
