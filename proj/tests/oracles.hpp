#pragma once
// Independent reference implementations used only by the tests.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <set>
#include <unordered_set>
#include <vector>

#include "hexmono/engine.hpp"

namespace oracle {

using hexmono::HexCoord;
using hexmono::PrototileTemplate;

// Points in 12x axial units, so tile vertices and quarter points of edges are integral.
struct IPt {
    long q, r;
    friend bool operator==(IPt, IPt) = default;
};

inline HexCoord dir(int k) {
    static const HexCoord d[6] = {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}};
    return d[((k % 6) + 6) % 6];
}

// quarter point of world edge k of the tile at c; which = 1 or 3 quarters from the ccw start vertex
inline IPt edge_quarter(HexCoord c, int k, int which) {
    HexCoord a = dir(k - 1), b = dir(k), e = dir(k + 1);
    // start vertex (a+b)/3, end vertex (b+e)/3
    long sq = 12L * c.q + 4L * (a.q + b.q), sr = 12L * c.r + 4L * (a.r + b.r);
    long dq = 4L * (e.q - a.q), dr = 4L * (e.r - a.r);
    return {sq + which * dq / 4, sr + which * dr / 4};
}

// template data read directly: edge j of the template lands on world edge j+o
inline int tmpl_edge(int o, int k) { return ((k - o) % 6 + 6) % 6; }

inline IPt r1_point(const PrototileTemplate& t, HexCoord c, int o, int k) {
    bool near_start = t.r1[tmpl_edge(o, k)] == hexmono::Crossing::NearStart;
    return edge_quarter(c, k, near_start ? 1 : 3);
}

inline bool has_contact(const PrototileTemplate& t, int o, int k) { return t.r2[tmpl_edge(o, k)].has_value(); }

inline IPt r2_point(const PrototileTemplate& t, HexCoord c, int o, int k) {
    bool plus = *t.r2[tmpl_edge(o, k)] == hexmono::Sign::Plus;
    return edge_quarter(c, k, plus ? 1 : 3);
}

// geometric R1: the two black curves hit the shared edge at the same point
inline bool geo_r1(const PrototileTemplate& t, int oa, int ob, int k) {
    HexCoord a{0, 0}, b = dir(k);
    return r1_point(t, a, oa, k) == r1_point(t, b, ob, k + 3);
}

// geometric R2: both trees reach the shared edge at the same point
inline bool geo_r2(const PrototileTemplate& t, int oa, int ob, int k) {
    HexCoord a{0, 0}, b = dir(k);
    if (!has_contact(t, oa, k) || !has_contact(t, ob, k + 3)) return false;
    return r2_point(t, a, oa, k) == r2_point(t, b, ob, k + 3);
}

struct Tables {
    bool r1[6][6][6];
    bool r2[6][6][6];
    explicit Tables(const PrototileTemplate& t) {
        for (int a = 0; a < 6; ++a)
            for (int b = 0; b < 6; ++b)
                for (int k = 0; k < 6; ++k) {
                    r1[a][b][k] = geo_r1(t, a, b, k);
                    r2[a][b][k] = geo_r2(t, a, b, k);
                }
    }
};

// Redelmeier enumeration of fixed polyhexes up to n cells; each shape is reported once, root at the origin.
inline void polyhexes(int n, const std::function<void(const std::vector<HexCoord>&)>& emit) {
    auto valid = [](HexCoord c) { return c.r > 0 || (c.r == 0 && c.q >= 0); };
    std::set<HexCoord> seen{{0, 0}};
    std::vector<HexCoord> poly;
    std::function<void(std::vector<HexCoord>)> rec = [&](std::vector<HexCoord> untried) {
        while (!untried.empty()) {
            HexCoord c = untried.back();
            untried.pop_back();
            poly.push_back(c);
            emit(poly);
            if (static_cast<int>(poly.size()) < n) {
                std::vector<HexCoord> next = untried, added;
                for (int k = 0; k < 6; ++k) {
                    HexCoord m = c + dir(k);
                    if (!valid(m) || seen.count(m)) continue;
                    bool touches = false;
                    for (auto p : poly)
                        if (p != c)
                            for (int j = 0; j < 6; ++j) touches = touches || p + dir(j) == m;
                    if (touches) continue;
                    seen.insert(m);
                    added.push_back(m);
                    next.push_back(m);
                }
                rec(next);
                for (auto a : added) seen.erase(a);
            }
            poly.pop_back();
        }
    };
    rec({{0, 0}});
}

inline std::vector<HexCoord> normalized(std::vector<HexCoord> s) {
    auto lo = *std::min_element(s.begin(), s.end(), [](HexCoord a, HexCoord b) {
        return a.r != b.r ? a.r < b.r : a.q < b.q;
    });
    for (auto& c : s) c = c - lo;
    std::sort(s.begin(), s.end());
    return s;
}

inline HexCoord rot(HexCoord c) { return {-c.r, c.q + c.r}; }

// keeps one shape per rotation class
inline bool rotation_canonical(const std::vector<HexCoord>& shape) {
    auto base = normalized(shape);
    auto cur = shape;
    for (int k = 1; k < 6; ++k) {
        for (auto& c : cur) c = rot(c);
        if (normalized(cur) < base) return false;
    }
    return true;
}

// all orientation assignments on the shape with R1 holding on every shared edge
inline void r1_assignments(const Tables& tb, const std::vector<HexCoord>& cells,
                           const std::function<void(const std::vector<int>&)>& emit) {
    std::size_t n = cells.size();
    std::vector<std::array<int, 6>> nb(n);
    for (std::size_t i = 0; i < n; ++i)
        for (int k = 0; k < 6; ++k) {
            nb[i][k] = -1;
            for (std::size_t j = 0; j < n; ++j)
                if (cells[j] == cells[i] + dir(k)) nb[i][k] = static_cast<int>(j);
        }
    std::vector<int> o(n, -1);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == n) {
            emit(o);
            return;
        }
        for (int v = 0; v < 6; ++v) {
            bool ok = true;
            for (int k = 0; k < 6 && ok; ++k) {
                int j = nb[i][k];
                if (j >= 0 && o[j] >= 0) ok = tb.r1[v][o[j]][k];
            }
            if (!ok) continue;
            o[i] = v;
            rec(i + 1);
            o[i] = -1;
        }
    };
    rec(0);
}

// Tries placement orders one tile at a time; a tile may go down when its tree meets one already placed.
inline bool orderable(const Tables& tb, const std::vector<HexCoord>& cells, const std::vector<int>& o) {
    std::size_t n = cells.size();
    if (n <= 1) return true;
    std::unordered_set<std::uint32_t> dead;
    std::function<bool(std::uint32_t)> rec = [&](std::uint32_t placed) {
        if (placed == (1u << n) - 1) return true;
        if (dead.count(placed)) return false;
        for (std::size_t i = 0; i < n; ++i) {
            if (placed >> i & 1) continue;
            bool touches = false;
            for (std::size_t j = 0; j < n && !touches; ++j) {
                if (!(placed >> j & 1)) continue;
                for (int k = 0; k < 6; ++k)
                    if (cells[i] + dir(k) == cells[j] && tb.r2[o[i]][o[j]][k]) touches = true;
            }
            if (touches && rec(placed | 1u << i)) return true;
        }
        dead.insert(placed);
        return false;
    };
    for (std::size_t s = 0; s < n; ++s)
        if (rec(1u << s)) return true;
    return false;
}

// Enumerates placement sequences that fill the region from the seed. A step is allowed when R1 holds
// against placed neighbours and either its tree meets a placed tree or (anchored) it has a tree
// contact on an edge leaving the region (only when open). With r1_only only R1 is checked.
inline bool fillable(const Tables& tb, const std::vector<HexCoord>& region, const std::vector<int>& seed_o,
                     bool r1_only, bool open = true) {
    std::size_t n = region.size();
    std::vector<std::array<int, 6>> nb(n);
    for (std::size_t i = 0; i < n; ++i)
        for (int k = 0; k < 6; ++k) {
            nb[i][k] = -1;
            for (std::size_t j = 0; j < n; ++j)
                if (region[j] == region[i] + dir(k)) nb[i][k] = static_cast<int>(j);
        }
    auto key = [&](const std::vector<int>& s) {
        std::uint64_t x = 0;
        for (int v : s) x = x * 7 + static_cast<std::uint64_t>(v + 1);
        return x;
    };
    std::unordered_set<std::uint64_t> seen;
    std::vector<int> s = seed_o;
    std::function<bool()> rec = [&]() {
        if (std::find(s.begin(), s.end(), -1) == s.end()) return true;
        if (!seen.insert(key(s)).second) return false;
        for (std::size_t i = 0; i < n; ++i) {
            if (s[i] >= 0) continue;
            for (int v = 0; v < 6; ++v) {
                bool r1 = true, meets = false, exits = false;
                for (int k = 0; k < 6; ++k) {
                    int j = nb[i][k];
                    if (j < 0) {
                        exits = exits || tb.r2[v][0][k] || tb.r2[v][1][k] || tb.r2[v][2][k] || tb.r2[v][3][k] ||
                                tb.r2[v][4][k] || tb.r2[v][5][k];
                        continue;
                    }
                    if (s[j] < 0) continue;
                    r1 = r1 && tb.r1[v][s[j]][k];
                    meets = meets || tb.r2[v][s[j]][k];
                }
                if (!r1 || !(r1_only || meets || (open && exits))) continue;
                s[i] = v;
                bool ok = rec();
                s[i] = -1;
                if (ok) return true;
            }
        }
        return false;
    };
    return rec();
}

}  // namespace oracle
