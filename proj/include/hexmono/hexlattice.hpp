#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace hexmono {

struct HexCoord {
    int q = 0;
    int r = 0;

    friend constexpr bool operator==(HexCoord, HexCoord) = default;
    friend constexpr auto operator<=>(HexCoord, HexCoord) = default;

    constexpr HexCoord operator+(HexCoord o) const { return {q + o.q, r + o.r}; }
    constexpr HexCoord operator-(HexCoord o) const { return {q - o.q, r - o.r}; }
    constexpr HexCoord operator-() const { return {-q, -r}; }
    constexpr HexCoord& operator+=(HexCoord o) { q += o.q; r += o.r; return *this; }
};

constexpr HexCoord operator*(long k, HexCoord c) {
    return {static_cast<int>(k * c.q), static_cast<int>(k * c.r)};
}

struct HexHash {
    std::size_t operator()(HexCoord c) const noexcept {
        auto u = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.q)) << 32) |
                 static_cast<std::uint32_t>(c.r);
        u ^= u >> 33;
        u *= 0xff51afd7ed558ccdULL;
        u ^= u >> 33;
        return static_cast<std::size_t>(u);
    }
};

constexpr int mod6(int k) { return ((k % 6) + 6) % 6; }

inline constexpr std::array<HexCoord, 6> kSteps{{{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}};

constexpr HexCoord step(int k) { return kSteps[mod6(k)]; }
constexpr HexCoord neighbor(HexCoord c, int k) { return c + step(k); }

// counterclockwise by k sixth-turns about the origin
constexpr HexCoord rotate_coord(HexCoord c, int k) {
    for (int i = 0; i < mod6(k); ++i) c = {-c.r, c.q + c.r};
    return c;
}

// squared Cartesian length, exact: |q*(1,0) + r*(1/2, sqrt3/2)|^2 = q^2 + qr + r^2
constexpr long norm2(HexCoord c) {
    return static_cast<long>(c.q) * c.q + static_cast<long>(c.q) * c.r + static_cast<long>(c.r) * c.r;
}

constexpr int hex_distance(HexCoord a, HexCoord b) {
    int dq = a.q - b.q, dr = a.r - b.r;
    int ds = -dq - dr;
    auto ab = [](int x) { return x < 0 ? -x : x; };
    int m = ab(dq) > ab(dr) ? ab(dq) : ab(dr);
    return m > ab(ds) ? m : ab(ds);
}

struct Point {
    double x = 0;
    double y = 0;
};

Point center(HexCoord c);
double cart_norm(HexCoord c);

// angle is num/den * pi; only multiples of pi/3 are accepted
struct PolarVector {
    long rho = 0;
    int sixths = 0;

    static PolarVector make(long rho, long num, long den);
};

HexCoord polar_to_cell(const PolarVector& v);
HexCoord spiral_anchor(int n);

// one id per geometric edge: stored on the cell whose direction is 0, 1 or 2
struct EdgeId {
    HexCoord cell;
    int dir = 0;

    friend bool operator==(const EdgeId&, const EdgeId&) = default;
    friend auto operator<=>(const EdgeId&, const EdgeId&) = default;
};

EdgeId edge(HexCoord c, int k);

// all cells with q^2+qr+r^2 <= radius^2 around c, sorted
std::vector<HexCoord> ball(HexCoord c, double radius);
std::vector<HexCoord> hex_ball(HexCoord c, int radius);

}  // namespace hexmono
