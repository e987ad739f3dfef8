#include "gridsym/ising.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gridsym/errors.hpp"

namespace gridsym {

double EdgeCouplings::at(int r1, int c1, int r2, int c2) const {
    std::array<int, 4> key{r1, c1, r2, c2};
    std::array<int, 4> swapped{r2, c2, r1, c1};
    if (swapped < key) key = swapped;
    const auto it = values.find(key);
    return it == values.end() ? default_value : it->second;
}

void IsingParams::validate() const {
    if (shape.rows < 1 || shape.cols < 1) throw ParameterError("lattice must have positive dimensions");
    if (!(tau > 0.0) || !std::isfinite(tau)) throw ParameterError("tau must be positive and finite");
    if (!std::isfinite(coupling) || !std::isfinite(field))
        throw ParameterError("coupling and field must be finite");
}

SpinGrid::SpinGrid(LatticeShape shape, std::vector<std::int8_t> spins)
    : shape_(shape), spins_(std::move(spins)) {
    if (spins_.size() != static_cast<std::size_t>(shape.cells()))
        throw DimensionError("spin buffer does not match lattice shape");
    for (auto s : spins_)
        if (s != 1 && s != -1) throw ParameterError("spins must be -1 or +1");
}

SpinGrid SpinGrid::from_configuration(const Configuration& config) {
    std::vector<std::int8_t> spins;
    spins.reserve(config.cells().size());
    for (auto v : config.cells()) spins.push_back(v ? 1 : -1);
    return SpinGrid({config.n(), config.n()}, std::move(spins));
}

Configuration SpinGrid::to_configuration() const {
    if (!shape_.square()) throw DimensionError("only square lattices map to configurations");
    std::vector<std::uint8_t> cells;
    cells.reserve(spins_.size());
    for (auto s : spins_) cells.push_back(s > 0 ? 1 : 0);
    return Configuration(shape_.rows, std::move(cells));
}

int SpinGrid::spin(int row, int col) const {
    if (row < 1 || row > shape_.rows || col < 1 || col > shape_.cols)
        throw BoundsError("spin index outside lattice");
    return spins_[static_cast<std::size_t>(row - 1) * shape_.cols + (col - 1)];
}

std::uint64_t SpinGrid::state_bits() const {
    if (spins_.size() > 64) throw CapacityError("state_bits needs at most 64 cells");
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < spins_.size(); ++i)
        if (spins_[i] > 0) bits |= 1ull << i;
    return bits;
}

namespace {

struct Edge {
    int a, b;   // row-major cell indices, a < b except for wraparound pairs
    double j;
};

std::vector<Edge> lattice_edges(const IsingParams& params) {
    const int rows = params.shape.rows, cols = params.shape.cols;
    std::vector<Edge> edges;
    auto idx = [cols](int r, int c) { return r * cols + c; };
    auto j_of = [&](int r1, int c1, int r2, int c2) {
        return params.edge_couplings ? params.edge_couplings->at(r1 + 1, c1 + 1, r2 + 1, c2 + 1)
                                     : params.coupling;
    };
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) edges.push_back({idx(r, c), idx(r, c + 1), j_of(r, c, r, c + 1)});
            if (r + 1 < rows) edges.push_back({idx(r, c), idx(r + 1, c), j_of(r, c, r + 1, c)});
            if (params.periodic) {
                // Wrap only when it creates a new pair (width/height > 2).
                if (c == cols - 1 && cols > 2) edges.push_back({idx(r, 0), idx(r, c), j_of(r, 0, r, c)});
                if (r == rows - 1 && rows > 2) edges.push_back({idx(0, c), idx(r, c), j_of(0, c, r, c)});
            }
        }
    }
    return edges;
}

double energy_of(const std::vector<std::int8_t>& spins, const std::vector<Edge>& edges,
                 double field) {
    double e = 0.0;
    for (const auto& edge : edges) e -= edge.j * spins[edge.a] * spins[edge.b];
    if (field != 0.0) {
        int sum = 0;
        for (auto s : spins) sum += s;
        e -= field * sum;
    }
    return e;
}

std::vector<std::int8_t> spins_from_mask(std::uint64_t mask, int cells) {
    std::vector<std::int8_t> spins(cells);
    for (int i = 0; i < cells; ++i) spins[i] = (mask >> i) & 1 ? 1 : -1;
    return spins;
}

void check_enumeration_capacity(const IsingParams& params) {
    if (params.shape.cells() > kExactEnumerationLimit)
        throw CapacityError("lattice with " + std::to_string(params.shape.cells()) +
                            " cells exceeds the exhaustive limit of " +
                            std::to_string(kExactEnumerationLimit) + "; use Metropolis sampling");
}

}  // namespace

double hamiltonian(const SpinGrid& config, const IsingParams& params) {
    params.validate();
    if (config.shape() != params.shape)
        throw DimensionError("configuration shape does not match the parameters");
    return energy_of(config.spins(), lattice_edges(params), params.field);
}

double exact_partition(const IsingParams& params) {
    params.validate();
    check_enumeration_capacity(params);
    const int cells = params.shape.cells();
    const auto edges = lattice_edges(params);
    double z = 0.0;
    for (std::uint64_t mask = 0; mask < (1ull << cells); ++mask)
        z += std::exp(-params.tau * energy_of(spins_from_mask(mask, cells), edges, params.field));
    return z;
}

double gibbs_probability(const SpinGrid& config, const IsingParams& params, double Z) {
    if (!(Z > 0.0) || !std::isfinite(Z)) throw ParameterError("partition function must be positive and finite");
    return std::exp(-params.tau * hamiltonian(config, params)) / Z;
}

MetropolisSampler::MetropolisSampler(const IsingParams& params, std::uint64_t seed)
    : params_(params), rng_(make_stream(seed)) {
    params_.validate();
    const int cells = params_.shape.cells();
    neighbors_.resize(cells);
    for (const auto& edge : lattice_edges(params_)) {
        neighbors_[edge.a].emplace_back(edge.b, edge.j);
        neighbors_[edge.b].emplace_back(edge.a, edge.j);
    }
    // Start from a uniformly random state.
    std::vector<std::int8_t> spins(cells);
    std::bernoulli_distribution coin(0.5);
    for (auto& s : spins) s = coin(rng_) ? 1 : -1;
    state_ = SpinGrid(params_.shape, std::move(spins));
}

void MetropolisSampler::step() {
    const int cells = params_.shape.cells();
    std::uniform_int_distribution<int> pick(0, cells - 1);
    const int i = pick(rng_);
    const auto& spins = state_.spins();

    double neighbor_field = 0.0;
    for (const auto& [j, coupling] : neighbors_[i]) neighbor_field += coupling * spins[j];
    const double delta_e = 2.0 * spins[i] * (neighbor_field + params_.field);

    ++proposals_;
    bool accept = delta_e <= 0.0;
    if (!accept) {
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        accept = unit(rng_) < std::exp(-params_.tau * delta_e);
    }
    if (accept) {
        auto flipped = state_.spins();
        flipped[i] = static_cast<std::int8_t>(-flipped[i]);
        state_ = SpinGrid(params_.shape, std::move(flipped));
        ++accepted_;
    }
}

void MetropolisSampler::sweep() {
    for (int i = 0, cells = params_.shape.cells(); i < cells; ++i) step();
}

const SpinGrid& MetropolisSampler::next() {
    sweep();
    return state_;
}

double MetropolisSampler::acceptance_rate() const {
    return proposals_ == 0 ? 0.0 : static_cast<double>(accepted_) / proposals_;
}

double exact_expected_hamming(const IsingParams& params, const MoveSequence& seq) {
    params.validate();
    check_enumeration_capacity(params);
    if (!params.shape.square()) throw DimensionError("expected hamming needs a square lattice");

    const int n = params.shape.rows;
    const int cells = params.shape.cells();
    const auto perm = cell_permutation(seq, n);
    const auto edges = lattice_edges(params);

    // Shift energies by the minimum so the weights stay finite for strong
    // couplings; the shift cancels in the expectation.
    double min_energy = std::numeric_limits<double>::infinity();
    std::vector<double> energies(1ull << cells);
    for (std::uint64_t mask = 0; mask < (1ull << cells); ++mask) {
        energies[mask] = energy_of(spins_from_mask(mask, cells), edges, params.field);
        min_energy = std::min(min_energy, energies[mask]);
    }

    double weight_sum = 0.0, value_sum = 0.0;
    for (std::uint64_t mask = 0; mask < (1ull << cells); ++mask) {
        const double w = std::exp(-params.tau * (energies[mask] - min_energy));
        int h = 0;
        for (int i = 0; i < cells; ++i)
            h += static_cast<int>(((mask >> i) & 1) != ((mask >> perm[i]) & 1));
        weight_sum += w;
        value_sum += w * h;
    }
    return value_sum / weight_sum;
}

McEstimate mc_expected_hamming(const IsingParams& params, const MoveSequence& seq, int sweeps,
                               int burn_in, std::uint64_t seed) {
    params.validate();
    if (!params.shape.square()) throw DimensionError("expected hamming needs a square lattice");
    if (sweeps < 1) throw ParameterError("sweeps must be at least 1");

    const int n = params.shape.rows;
    const int cells = params.shape.cells();
    const auto perm = cell_permutation(seq, n);

    MetropolisSampler sampler(params, seed);
    for (int i = 0; i < burn_in; ++i) sampler.sweep();

    std::vector<double> values;
    values.reserve(sweeps);
    for (int i = 0; i < sweeps; ++i) {
        const std::uint64_t bits = sampler.next().state_bits();
        int h = 0;
        for (int c = 0; c < cells; ++c)
            h += static_cast<int>(((bits >> c) & 1) != ((bits >> perm[c]) & 1));
        values.push_back(h);
    }

    McEstimate est;
    est.samples = sweeps;
    double sum = 0.0;
    for (double v : values) sum += v;
    est.mean = sum / sweeps;

    // Batch means: autocorrelation between consecutive sweeps would make the
    // naive i.i.d. standard error optimistic.
    const int batches = std::min(50, sweeps);
    const int per_batch = sweeps / batches;
    double batch_var = 0.0;
    for (int b = 0; b < batches; ++b) {
        double bm = 0.0;
        for (int i = b * per_batch; i < (b + 1) * per_batch; ++i) bm += values[i];
        bm /= per_batch;
        batch_var += (bm - est.mean) * (bm - est.mean);
    }
    batch_var /= std::max(1, batches - 1);
    est.std_error = std::sqrt(batch_var / batches);
    return est;
}

double expected_hamming(const IsingParams& params, const MoveSequence& seq, ExpectationMode mode,
                        int sweeps, int burn_in, std::uint64_t seed) {
    if (mode == ExpectationMode::exact) return exact_expected_hamming(params, seq);
    return mc_expected_hamming(params, seq, sweeps, burn_in, seed).mean;
}

double bernoulli_expected_hamming(int m, double p, const MoveSequence& seq) {
    if (p < 0.0 || p > 1.0) throw ParameterError("p must be in [0,1]");
    if (m < 1) throw ParameterError("block size must be positive");
    const int fixed = fixed_point_count(seq, m);
    return 2.0 * (static_cast<double>(m) * m - fixed) * p * (1.0 - p);
}

}  // namespace gridsym
