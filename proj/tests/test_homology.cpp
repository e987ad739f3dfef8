#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "gridsym/errors.hpp"
#include "gridsym/homology.hpp"
#include "gridsym/rng.hpp"

using namespace gridsym;

namespace {

MicroRaster full_raster(int r) {
    MicroRaster raster(r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) raster.set_pixel(i, j, true);
    return raster;
}

MicroRaster random_raster(int r, double p, Rng& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    MicroRaster raster(r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            if (unit(rng) < p) raster.set_pixel(i, j, true);
    return raster;
}

// Square ring of filled pixels with an empty interior, offset inside a raster.
void paint_ring(MicroRaster& raster, int top, int left, int side) {
    for (int i = 0; i < side; ++i)
        for (int j = 0; j < side; ++j)
            if (i == 0 || i == side - 1 || j == 0 || j == side - 1)
                raster.set_pixel(top + i, left + j, true);
}

}  // namespace

TEST_CASE("full 3x3 block: counts and Euler characteristic") {
    const CubicalComplex complex = build_complex(full_raster(3));
    CHECK(complex.vertex_count == 16);
    CHECK(complex.edge_count() == 24);
    CHECK(complex.face_count() == 9);
    CHECK(complex.euler_characteristic() == 1);
    CHECK(betti0(complex) == 1);
    CHECK(betti1(complex) == 0);
}

TEST_CASE("3x3 ring: interior cells are shared, one hole") {
    MicroRaster raster(3);
    paint_ring(raster, 0, 0, 3);
    const CubicalComplex complex = build_complex(raster);
    CHECK(complex.vertex_count == 16);
    CHECK(complex.edge_count() == 24);
    CHECK(complex.face_count() == 8);
    CHECK(complex.euler_characteristic() == 0);
    CHECK(betti0(complex) == 1);
    CHECK(betti1(complex) == 1);
    CHECK(betti_oracle(complex, 0) == 1);
    CHECK(betti_oracle(complex, 1) == 1);
}

TEST_CASE("empty raster gives the empty complex") {
    const CubicalComplex complex = build_complex(MicroRaster(4));
    CHECK(complex.vertex_count == 0);
    CHECK(complex.edge_count() == 0);
    CHECK(complex.face_count() == 0);
    CHECK(betti0(complex) == 0);
    CHECK(betti1(complex) == 0);
    CHECK(betti_oracle(complex, 0) == 0);
}

TEST_CASE("far-apart pixels form two components, single pixel one") {
    MicroRaster raster(3);
    raster.set_pixel(0, 0, true);
    raster.set_pixel(2, 2, true);
    CHECK(betti0(build_complex(raster)) == 2);

    MicroRaster single(3);
    single.set_pixel(1, 1, true);
    const CubicalComplex complex = build_complex(single);
    CHECK(betti0(complex) == 1);
    CHECK(betti1(complex) == 0);
    CHECK(betti_oracle(complex, 0) == 1);
    CHECK(betti_oracle(complex, 1) == 0);
}

TEST_CASE("diagonally touching pixels share a vertex and connect") {
    MicroRaster raster(3);
    raster.set_pixel(0, 0, true);
    raster.set_pixel(1, 1, true);
    CHECK(betti0(build_complex(raster)) == 1);
}

TEST_CASE("two disjoint rings carry two holes") {
    MicroRaster raster(8);
    paint_ring(raster, 0, 0, 3);
    paint_ring(raster, 5, 5, 3);
    const CubicalComplex complex = build_complex(raster);
    CHECK(betti0(complex) == 2);
    CHECK(betti1(complex) == 2);
    CHECK(betti_oracle(complex, 1) == 2);
}

TEST_CASE("breaking a ring through an edge pixel kills the hole") {
    MicroRaster raster(4);
    paint_ring(raster, 0, 0, 4);
    CHECK(betti1(build_complex(raster)) == 1);
    raster.set_pixel(0, 1, false);  // mid-edge pixel: the enclosing cycle goes away
    const CubicalComplex complex = build_complex(raster);
    CHECK(betti1(complex) == 0);
    CHECK(betti_oracle(complex, 1) == 0);
    CHECK(betti0(complex) == 1);
}

TEST_CASE("removing a corner pixel keeps the hole alive via the shared vertex") {
    MicroRaster raster(4);
    paint_ring(raster, 0, 0, 4);
    raster.set_pixel(0, 0, false);
    const CubicalComplex complex = build_complex(raster);
    CHECK(betti1(complex) == 1);
    CHECK(betti_oracle(complex, 1) == 1);
}

TEST_CASE("fast path equals the boundary-rank oracle exhaustively on 3x3") {
    for (int mask = 0; mask < 512; ++mask) {
        MicroRaster raster(3);
        for (int bit = 0; bit < 9; ++bit)
            if (mask & (1 << bit)) raster.set_pixel(bit / 3, bit % 3, true);
        const CubicalComplex complex = build_complex(raster);
        CHECK(betti0(complex) == betti_oracle(complex, 0));
        CHECK(betti1(complex) == betti_oracle(complex, 1));
    }
}

TEST_CASE("fast path equals the oracle on random 8x8 rasters") {
    Rng rng = make_stream(21);
    for (int trial = 0; trial < 300; ++trial) {
        const double p = 0.2 + 0.6 * (trial % 3) / 2.0;
        const CubicalComplex complex = build_complex(random_raster(8, p, rng));
        CHECK(betti0(complex) == betti_oracle(complex, 0));
        CHECK(betti1(complex) == betti_oracle(complex, 1));
    }
}

TEST_CASE("euler identity holds exactly") {
    Rng rng = make_stream(22);
    for (int trial = 0; trial < 200; ++trial) {
        const CubicalComplex complex = build_complex(random_raster(6, 0.5, rng));
        CHECK(betti0(complex) - betti1(complex) == complex.euler_characteristic());
    }
}

TEST_CASE("adding a pixel changes beta0 - beta1 by exactly the chi increment") {
    Rng rng = make_stream(23);
    std::uniform_int_distribution<int> coord(0, 5);
    for (int trial = 0; trial < 100; ++trial) {
        MicroRaster raster = random_raster(6, 0.4, rng);
        int i = coord(rng), j = coord(rng);
        raster.set_pixel(i, j, false);
        const CubicalComplex before = build_complex(raster);
        raster.set_pixel(i, j, true);
        const CubicalComplex after = build_complex(raster);
        const int chi_delta = after.euler_characteristic() - before.euler_characteristic();
        CHECK((betti0(after) - betti1(after)) - (betti0(before) - betti1(before)) == chi_delta);
    }
}

TEST_CASE("complexes are structurally sound") {
    Rng rng = make_stream(24);
    for (int trial = 0; trial < 50; ++trial) {
        const CubicalComplex complex = build_complex(random_raster(7, 0.5, rng));
        for (const auto& [a, b] : complex.edges) {
            CHECK(a != b);
            CHECK(a >= 0);
            CHECK(b < complex.vertex_count);
        }
        for (const auto& face : complex.faces)
            for (int e : face) {
                CHECK(e >= 0);
                CHECK(e < complex.edge_count());
            }
    }
}

TEST_CASE("raster parsing and validation") {
    const MicroRaster raster = MicroRaster::from_lines({"110", "010", "011"});
    CHECK(raster.pixel(0, 0));
    CHECK_FALSE(raster.pixel(1, 0));
    CHECK(raster.pixel(2, 2));
    CHECK_THROWS_AS(MicroRaster::from_lines({"10", "1"}), DimensionError);
    CHECK_THROWS_AS(MicroRaster::from_lines({"1x", "11"}), ParameterError);
    CHECK_THROWS_AS(betti_oracle(CubicalComplex{}, 2), ParameterError);
}
