#include "hexmono/hexlattice.hpp"

#include <algorithm>
#include <cmath>

namespace hexmono {

Point center(HexCoord c) {
    return {c.q + 0.5 * c.r, c.r * std::sqrt(3.0) / 2.0};
}

double cart_norm(HexCoord c) { return std::sqrt(static_cast<double>(norm2(c))); }

PolarVector PolarVector::make(long rho, long num, long den) {
    if (rho < 0) throw std::invalid_argument("negative polar length");
    if (den == 0) throw std::invalid_argument("zero denominator");
    // sixth-turns = 3*num/den must be an integer
    if ((3 * num) % den != 0) throw std::invalid_argument("angle is not a multiple of pi/3");
    return {rho, mod6(static_cast<int>((3 * num / den) % 6))};
}

HexCoord polar_to_cell(const PolarVector& v) { return v.rho * step(v.sixths); }

HexCoord spiral_anchor(int n) {
    HexCoord x{0, 0};
    for (int i = 1; i <= n; ++i) x += polar_to_cell(PolarVector::make(1L << (i - 1), 4L * i, 3));
    return x;
}

EdgeId edge(HexCoord c, int k) {
    k = mod6(k);
    if (k < 3) return {c, k};
    return {neighbor(c, k), k - 3};
}

std::vector<HexCoord> ball(HexCoord c, double radius) {
    std::vector<HexCoord> out;
    int span = static_cast<int>(std::ceil(radius * 2.0 / std::sqrt(3.0))) + 1;
    double r2 = radius * radius + 1e-9;
    for (int r = -span; r <= span; ++r)
        for (int q = -2 * span; q <= 2 * span; ++q) {
            HexCoord d{q, r};
            if (static_cast<double>(norm2(d)) <= r2) out.push_back(c + d);
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<HexCoord> hex_ball(HexCoord c, int radius) {
    std::vector<HexCoord> out;
    for (int q = -radius; q <= radius; ++q)
        for (int r = std::max(-radius, -q - radius); r <= std::min(radius, -q + radius); ++r)
            out.push_back(c + HexCoord{q, r});
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace hexmono
