#include "gridsym/homology.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "gridsym/errors.hpp"

namespace gridsym {

MicroRaster::MicroRaster(int r) : r_(r) {
    if (r < 0) throw ParameterError("raster resolution must be nonnegative");
    px_.assign(static_cast<std::size_t>(r) * r, 0);
}

MicroRaster::MicroRaster(int r, std::vector<std::uint8_t> pixels) : r_(r), px_(std::move(pixels)) {
    if (r < 0) throw ParameterError("raster resolution must be nonnegative");
    if (px_.size() != static_cast<std::size_t>(r) * r) throw DimensionError("pixel buffer is not r*r");
    for (auto v : px_)
        if (v > 1) throw ParameterError("pixels must be 0 or 1");
}

MicroRaster MicroRaster::from_lines(const std::vector<std::string>& lines) {
    const int r = static_cast<int>(lines.size());
    std::vector<std::uint8_t> px;
    px.reserve(static_cast<std::size_t>(r) * r);
    for (const auto& line : lines) {
        if (static_cast<int>(line.size()) != r) throw DimensionError("raster lines must form a square");
        for (char ch : line) {
            if (ch != '0' && ch != '1') throw ParameterError("raster lines must be '0'/'1'");
            px.push_back(ch == '1');
        }
    }
    return MicroRaster(r, std::move(px));
}

bool MicroRaster::empty() const {
    return std::all_of(px_.begin(), px_.end(), [](std::uint8_t v) { return v == 0; });
}

CubicalComplex build_complex(const MicroRaster& raster) {
    const int r = raster.r();
    CubicalComplex complex;

    // Lattice points live on an (r+1)x(r+1) grid; only those touching a
    // filled pixel become vertices.
    std::vector<int> vertex_id(static_cast<std::size_t>(r + 1) * (r + 1), -1);
    auto vertex = [&](int row, int col) {
        int& id = vertex_id[static_cast<std::size_t>(row) * (r + 1) + col];
        if (id < 0) id = complex.vertex_count++;
        return id;
    };

    std::map<std::pair<int, int>, int> edge_id;
    auto edge = [&](int va, int vb) {
        if (va > vb) std::swap(va, vb);
        auto [it, inserted] = edge_id.try_emplace({va, vb}, complex.edge_count());
        if (inserted) complex.edges.emplace_back(va, vb);
        return it->second;
    };

    for (int row = 0; row < r; ++row) {
        for (int col = 0; col < r; ++col) {
            if (!raster.pixel(row, col)) continue;
            const int tl = vertex(row, col);
            const int tr = vertex(row, col + 1);
            const int bl = vertex(row + 1, col);
            const int br = vertex(row + 1, col + 1);
            complex.faces.push_back({edge(tl, tr), edge(bl, br), edge(tl, bl), edge(tr, br)});
        }
    }
    return complex;
}

namespace {

struct DisjointSet {
    std::vector<int> parent, rank_;

    explicit DisjointSet(int n) : parent(n), rank_(n, 0) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (rank_[a] < rank_[b]) std::swap(a, b);
        parent[b] = a;
        if (rank_[a] == rank_[b]) ++rank_[a];
    }
};

}  // namespace

int betti0(const CubicalComplex& complex) {
    DisjointSet ds(complex.vertex_count);
    for (const auto& [a, b] : complex.edges) ds.unite(a, b);
    int components = 0;
    for (int v = 0; v < complex.vertex_count; ++v)
        if (ds.find(v) == v) ++components;
    return components;
}

int betti1(const CubicalComplex& complex) {
    return betti0(complex) - complex.euler_characteristic();
}

namespace {

// Rank of a binary matrix given as bit-packed rows.
int gf2_rank(std::vector<std::vector<std::uint64_t>> rows, int cols) {
    int rank = 0;
    for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
        const std::size_t word = static_cast<std::size_t>(c) / 64;
        const std::uint64_t bit = 1ull << (c % 64);
        int pivot = -1;
        for (std::size_t i = rank; i < rows.size(); ++i) {
            if (rows[i][word] & bit) {
                pivot = static_cast<int>(i);
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (static_cast<int>(i) != rank && (rows[i][word] & bit))
                for (std::size_t w = 0; w < rows[i].size(); ++w) rows[i][w] ^= rows[rank][w];
        }
        ++rank;
    }
    return rank;
}

}  // namespace

int betti_oracle(const CubicalComplex& complex, int k) {
    if (k != 0 && k != 1) throw ParameterError("betti_oracle supports k in {0,1}");

    const int v = complex.vertex_count;
    const int e = complex.edge_count();
    const int f = complex.face_count();
    const std::size_t vwords = static_cast<std::size_t>(v) / 64 + 1;
    const std::size_t ewords = static_cast<std::size_t>(e) / 64 + 1;

    // d1: one row per edge over the vertex basis.
    std::vector<std::vector<std::uint64_t>> d1(e, std::vector<std::uint64_t>(vwords, 0));
    for (int i = 0; i < e; ++i) {
        const auto& [a, b] = complex.edges[i];
        d1[i][static_cast<std::size_t>(a) / 64] ^= 1ull << (a % 64);
        d1[i][static_cast<std::size_t>(b) / 64] ^= 1ull << (b % 64);
    }
    const int rank_d1 = gf2_rank(std::move(d1), v);

    // d2: one row per face over the edge basis.
    std::vector<std::vector<std::uint64_t>> d2(f, std::vector<std::uint64_t>(ewords, 0));
    for (int i = 0; i < f; ++i)
        for (int edge : complex.faces[i]) d2[i][static_cast<std::size_t>(edge) / 64] ^= 1ull << (edge % 64);
    const int rank_d2 = gf2_rank(std::move(d2), e);

    if (k == 0) return v - rank_d1;       // dim ker d0 = V
    return (e - rank_d1) - rank_d2;
}

}  // namespace gridsym
