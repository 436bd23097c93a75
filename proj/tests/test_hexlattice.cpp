#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <vector>

#include "doctest.h"
#include "hexmono/hexlattice.hpp"

using namespace hexmono;

namespace {

std::complex<double> z(HexCoord c) {
    auto p = center(c);
    return {p.x, p.y};
}

}  // namespace

TEST_SUITE("hexlattice") {

TEST_CASE("steps are unit vectors sixty degrees apart") {
    for (int k = 0; k < 6; ++k) {
        auto w = z(step(k));
        CHECK(std::abs(w) == doctest::Approx(1.0));
        CHECK(std::arg(w * std::polar(1.0, -M_PI / 3 * k)) == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(norm2(step(k)) == 1);
        CHECK(step(k) + step(k + 3) == HexCoord{0, 0});
    }
    CHECK(step(-1) == step(5));
    CHECK(step(7) == step(1));
}

TEST_CASE("rotation matches complex multiplication") {
    auto turn = std::polar(1.0, M_PI / 3);
    for (int q = -4; q <= 4; ++q)
        for (int r = -4; r <= 4; ++r)
            for (int k = -7; k <= 7; ++k) {
                HexCoord c{q, r};
                auto want = z(c) * std::pow(turn, k);
                auto got = z(rotate_coord(c, k));
                CHECK(std::abs(want - got) < 1e-9);
                CHECK(norm2(rotate_coord(c, k)) == norm2(c));
            }
}

TEST_CASE("norm2 is the squared Cartesian length") {
    for (int q = -6; q <= 6; ++q)
        for (int r = -6; r <= 6; ++r) {
            HexCoord c{q, r};
            CHECK(static_cast<double>(norm2(c)) == doctest::Approx(std::norm(z(c))));
            CHECK(cart_norm(c) == doctest::Approx(std::abs(z(c))));
        }
}

TEST_CASE("hex distance counts steps") {
    // breadth-first distances from the origin agree with the closed form
    std::map<HexCoord, int> dist{{{0, 0}, 0}};
    std::vector<HexCoord> frontier{{0, 0}};
    for (int d = 1; d <= 5; ++d) {
        std::vector<HexCoord> next;
        for (auto c : frontier)
            for (int k = 0; k < 6; ++k)
                if (dist.emplace(neighbor(c, k), d).second) next.push_back(neighbor(c, k));
        frontier = next;
    }
    for (auto& [c, d] : dist) CHECK(hex_distance(c, {0, 0}) == d);
    CHECK(hex_distance({3, -1}, {3, -1}) == 0);
    CHECK(hex_distance({2, 5}, {-1, 1}) == hex_distance({-1, 1}, {2, 5}));
}

TEST_CASE("balls") {
    CHECK(hex_ball({0, 0}, 0).size() == 1);
    CHECK(hex_ball({0, 0}, 2).size() == 19);
    CHECK(hex_ball({5, -3}, 3).size() == 37);
    auto b = ball({0, 0}, 1.0);
    CHECK(b.size() == 7);
    CHECK(std::is_sorted(b.begin(), b.end()));
    // sqrt3 picks up the second shell
    CHECK(ball({0, 0}, std::sqrt(3.0)).size() == 13);
    for (auto c : ball({2, 2}, 6.5)) CHECK(norm2(c - HexCoord{2, 2}) <= 42);
}

TEST_CASE("polar vectors") {
    CHECK(polar_to_cell(PolarVector::make(1, 0, 1)) == HexCoord{1, 0});
    CHECK(polar_to_cell(PolarVector::make(2, 1, 3)) == HexCoord{0, 2});
    CHECK(polar_to_cell(PolarVector::make(3, 1, 1)) == HexCoord{-3, 0});
    CHECK(polar_to_cell(PolarVector::make(1, 4, 3)) == HexCoord{0, -1});
    CHECK(polar_to_cell(PolarVector::make(1, -1, 3)) == HexCoord{1, -1});
    CHECK_THROWS_AS(PolarVector::make(1, 1, 4), std::invalid_argument);
    CHECK_THROWS_AS(PolarVector::make(-1, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(PolarVector::make(1, 1, 0), std::invalid_argument);
}

TEST_CASE("spiral anchors") {
    // partial sums of 2^(i-1) at angle 4*i*pi/3
    HexCoord x{0, 0};
    CHECK(spiral_anchor(0) == x);
    for (int i = 1; i <= 8; ++i) {
        auto w = std::polar(static_cast<double>(1 << (i - 1)), 4.0 * M_PI * i / 3.0);
        auto got = z(spiral_anchor(i)) - z(spiral_anchor(i - 1));
        CHECK(std::abs(w - got) < 1e-9);
    }
    CHECK(spiral_anchor(1) == HexCoord{0, -1});
    CHECK(spiral_anchor(2) == HexCoord{-2, 1});
    CHECK(spiral_anchor(3) == HexCoord{2, 1});
}

TEST_CASE("edge ids are shared by both sides") {
    for (int k = 0; k < 6; ++k) {
        HexCoord c{2, -3};
        CHECK(edge(c, k) == edge(neighbor(c, k), k + 3));
        CHECK(edge(c, k).dir < 3);
    }
    CHECK(edge({0, 0}, 0) != edge({0, 0}, 1));
}

}
