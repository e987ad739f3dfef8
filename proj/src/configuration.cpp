#include "gridsym/configuration.hpp"

#include <stdexcept>

#include "gridsym/errors.hpp"

namespace gridsym {

Configuration::Configuration(int n) : n_(n) {
    if (n < 0) throw ParameterError("grid number must be nonnegative");
    cells_.assign(static_cast<std::size_t>(n) * n, 0);
}

Configuration::Configuration(int n, std::vector<std::uint8_t> cells) : n_(n), cells_(std::move(cells)) {
    if (n < 0) throw ParameterError("grid number must be nonnegative");
    if (cells_.size() != static_cast<std::size_t>(n) * n)
        throw DimensionError("cell buffer is not n*n");
    for (auto v : cells_)
        if (v > 1) throw ParameterError("cell entries must be 0 or 1");
}

Configuration Configuration::from_rows(const std::vector<std::string>& rows) {
    const int n = static_cast<int>(rows.size());
    std::vector<std::uint8_t> cells;
    cells.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != n)
            throw DimensionError("row length does not match row count");
        for (char ch : r) {
            if (ch != '0' && ch != '1') throw ParameterError("rows must be '0'/'1' strings");
            cells.push_back(ch == '1');
        }
    }
    return Configuration(n, std::move(cells));
}

void Configuration::check_bounds(int row, int col) const {
    if (row < 1 || row > n_ || col < 1 || col > n_)
        throw BoundsError("cell (" + std::to_string(row) + "," + std::to_string(col) +
                          ") outside " + std::to_string(n_) + "x" + std::to_string(n_) + " grid");
}

bool Configuration::at(int row, int col) const {
    check_bounds(row, col);
    return cells_[static_cast<std::size_t>(row - 1) * n_ + (col - 1)] != 0;
}

void Configuration::set(int row, int col, bool value) {
    check_bounds(row, col);
    cells_[static_cast<std::size_t>(row - 1) * n_ + (col - 1)] = value ? 1 : 0;
}

int Configuration::occupied_count() const {
    int count = 0;
    for (auto v : cells_) count += v;
    return count;
}

double Configuration::occupancy() const {
    if (n_ == 0) return 0.0;
    return static_cast<double>(occupied_count()) / cell_count();
}

int hamming(const Configuration& a, const Configuration& b) {
    if (a.n() != b.n())
        throw DimensionError("hamming distance requires equal grid numbers (" +
                             std::to_string(a.n()) + " vs " + std::to_string(b.n()) + ")");
    int dist = 0;
    const auto& ca = a.cells();
    const auto& cb = b.cells();
    for (std::size_t i = 0; i < ca.size(); ++i) dist += ca[i] ^ cb[i];
    return dist;
}

Configuration random_configuration(int n, double p, Rng& rng) {
    if (p < 0.0 || p > 1.0) throw ParameterError("occupancy probability must be in [0,1]");
    std::bernoulli_distribution coin(p);
    Configuration out(n);
    for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= n; ++c)
            if (coin(rng)) out.set(r, c, true);
    return out;
}

}  // namespace gridsym
