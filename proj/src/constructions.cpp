#include "hexmono/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <unordered_set>

#include "hexmono/analysis.hpp"

namespace hexmono {

ChoiceSequence alternating_choices(int n) {
    ChoiceSequence c;
    for (int i = 0; i < n; ++i) c.push_back(i % 2 ? Choice::Right : Choice::Left);
    return c;
}

namespace {

struct KindName {
    ConstructionKind kind;
    const char* name;
};

constexpr KindName kKindNames[] = {
    {ConstructionKind::SpiralP, "spiral"},
    {ConstructionKind::T0Trunc, "t0"},
    {ConstructionKind::Faultline, "faultline"},
    {ConstructionKind::CycleSeed, "cycle-seed"},
    {ConstructionKind::AnticycleSeed, "anticycle-seed"},
    {ConstructionKind::PeriodicLattice, "periodic-lattice"},
    {ConstructionKind::InfiniteTriangleTrunc, "infinite-triangle"},
    {ConstructionKind::HullR, "hull-r"},
    {ConstructionKind::HullS, "hull-s"},
};

long pmod(long a, long m) { return ((a % m) + m) % m; }

}  // namespace

const char* kind_name(ConstructionKind k) {
    for (auto& kn : kKindNames)
        if (kn.kind == k) return kn.name;
    return "?";
}

std::optional<ConstructionKind> kind_from_name(const std::string& s) {
    for (auto& kn : kKindNames)
        if (s == kn.name) return kn.kind;
    return std::nullopt;
}

std::size_t spiral_size(int n) { return ((std::size_t{1} << (2 * (n + 1))) - 1) / 3; }

Patch build_Pn(int n) {
    if (n < 0 || n > kMaxSpiral) throw ConstructionError("spiral level out of range");
    std::vector<Placement> cur{{{0, 0}, 0}};
    for (int i = 1; i <= n; ++i) {
        HexCoord xm = spiral_anchor(i - 1), x = spiral_anchor(i);
        int h = 1 << (i - 1);
        std::vector<Placement> next;
        next.reserve(4 * cur.size() + 1);
        next.push_back({x, mod6(4 * i)});
        next.insert(next.end(), cur.begin(), cur.end());
        // the three rotated copies: (rotation, direction of the offset from x_i)
        const int parts[3][2] = {{4, 4 * i - 2}, {3, 4 * i}, {4, 4 * i + 1}};
        for (auto& part : parts) {
            HexCoord shift = x + h * step(part[1]);
            for (auto& pl : cur) next.push_back({rotate_coord(pl.cell - xm, part[0]) + shift, mod6(pl.o + part[0])});
        }
        cur = std::move(next);
    }
    Patch p;
    p.reserve(cur.size());
    for (auto& pl : cur) {
        if (p.contains(pl.cell))
            throw ConstructionError("spiral assembly overlap at (" + std::to_string(pl.cell.q) + "," +
                                    std::to_string(pl.cell.r) + ")");
        p.put(pl.cell, pl.o);
    }
    return p;
}

Construction build_Pn_construction(int n) {
    Construction c{ConstructionKind::SpiralP, build_Pn(n), {{"n", n}}, {}, {}, {}, {}};
    for (int i = 0; i <= n; ++i) c.anchors.push_back(spiral_anchor(i));
    return c;
}

namespace {

std::vector<HexCoord> boundary_cells(const Patch& p) {
    std::vector<HexCoord> b;
    for (auto c : p.cells())
        for (int k = 0; k < 6; ++k)
            if (!p.contains(neighbor(c, k))) {
                b.push_back(c);
                break;
            }
    return b;
}

}  // namespace

Construction build_T0(int radius) {
    if (radius < 0) throw ConstructionError("negative radius");
    auto want = ball({0, 0}, radius);
    for (int n = 0; n <= kMaxSpiral; ++n) {
        Patch p = build_Pn(n);
        bool covered = std::all_of(want.begin(), want.end(), [&](HexCoord c) { return p.contains(c); });
        if (!covered) continue;
        // the spiral is kept whole so features crossing the window keep their context
        Construction c{ConstructionKind::T0Trunc, std::move(p), {{"radius", radius}, {"n", n}}, {}, {}, {}, {}};
        for (int i = 0; i <= n; ++i) c.anchors.push_back(spiral_anchor(i));
        c.window = Window{{0, 0}, static_cast<double>(radius)};
        return c;
    }
    throw ConstructionError("radius exceeds the largest supported spiral");
}

std::vector<HexCoord> field_offsets(HexCoord u0, const std::vector<HexCoord>& e) {
    std::vector<HexCoord> us{u0};
    for (std::size_t k = 0; k < e.size(); ++k) {
        long m = 1L << (k + 2), a = 1L << k, b = 1L << (k + 1);
        HexCoord u = us.back();
        us.push_back({static_cast<int>(pmod(u.q + a + b * e[k].q, m)), static_cast<int>(pmod(u.r + a + b * e[k].r, m))});
    }
    return us;
}

std::optional<int> field_orientation(HexCoord c, const std::vector<HexCoord>& us) {
    for (std::size_t k = 1; k < us.size(); ++k) {
        long s = 1L << k, m = 2 * s;
        HexCoord u = us[k];
        long dq = pmod(c.q - u.q, m), dr = pmod(c.r - u.r, m);
        // sides of the level-k triangles pointing up from the lattice point u
        if (dr == 0 && dq >= 1 && dq <= s - 1) return 2;
        if (dq == 0 && dr >= 1 && dr <= s - 1) return 0;
        if (dr >= 1 && dr <= s - 1 && dq == s - dr) return 4;
        // and the ones pointing down from u + (s, 0)
        dq = pmod(c.q - u.q - s, m);
        if (dr == 0 && dq >= 1 && dq <= s - 1) return 5;
        if (dq >= 1 && dq <= s - 1 && dr == m - dq) return 1;
        if (dq == s && m - dr >= 1 && m - dr <= s - 1) return 3;
    }
    return std::nullopt;
}

std::vector<Patch> complete_r1(const Patch& partial, std::vector<HexCoord> holes, std::size_t limit) {
    std::vector<Patch> sols;
    Patch work = partial;
    const auto& t = partial.tmpl();
    auto fits = [&](HexCoord c, int o) {
        for (int k = 0; k < 6; ++k) {
            auto nb = work.at(neighbor(c, k));
            if (nb && !r1_ok_between(t, o, *nb, k)) return false;
        }
        return true;
    };
    // explicit stack: (hole index, next orientation to try)
    std::vector<int> next(holes.size() + 1, 0);
    std::size_t i = 0;
    while (true) {
        if (i == holes.size()) {
            sols.push_back(work);
            if (sols.size() >= limit) break;
            if (i == 0) break;
            --i;
            work.erase(holes[i]);
            continue;
        }
        bool placed = false;
        while (next[i] < 6) {
            int o = next[i]++;
            if (fits(holes[i], o)) {
                work.put(holes[i], o);
                placed = true;
                break;
            }
        }
        if (placed) {
            ++i;
            next[i] = 0;
            continue;
        }
        if (i == 0) break;
        --i;
        work.erase(holes[i]);
    }
    return sols;
}

namespace {

std::vector<HexCoord> faultline_bits(const ChoiceSequence& choices, int levels) {
    std::vector<HexCoord> e;
    for (int k = 0; k < levels; ++k) {
        Choice c = k < static_cast<int>(choices.size()) ? choices[k] : (k % 2 ? Choice::Right : Choice::Left);
        e.push_back({c == Choice::Right ? 1 : 0, 0});
    }
    return e;
}

int levels_for(long extent) {
    int l = 1;
    while ((1L << l) <= 2 * extent + 8) ++l;
    return l + 1;
}

// keeps the tree-contact component of `root` inside p
Patch r2_component_of(const Patch& p, HexCoord root) {
    Patch out(p.tmpl());
    std::vector<HexCoord> stack{root};
    out.put(root, *p.at(root));
    while (!stack.empty()) {
        HexCoord c = stack.back();
        stack.pop_back();
        int o = *p.at(c);
        for (int k = 0; k < 6; ++k) {
            HexCoord nb = neighbor(c, k);
            auto on = p.at(nb);
            if (on && !out.contains(nb) && r2_between(p.tmpl(), o, *on, k)) {
                out.put(nb, *on);
                stack.push_back(nb);
            }
        }
    }
    return out;
}

}  // namespace

Construction build_faultline(const FaultlineOptions& opt) {
    if (opt.m_max < 0) throw ConstructionError("m_max must be non-negative");
    if (opt.width < (2L << opt.m_max)) throw ConstructionError("width too small for m_max: need width >= 2^(m_max+1)");
    if (opt.width > 4096) throw ConstructionError("width too large");
    int levels = levels_for(opt.width);
    ChoiceSequence choices = opt.choices.empty() ? alternating_choices(opt.m_max + 1) : opt.choices;
    auto e = faultline_bits(choices, levels);
    auto upper = field_offsets({0, 0}, e);
    auto lower = field_offsets({opt.lower_shift, 0}, e);
    // the line sits on r = -1 of both fields; shift it to r = 0 afterwards
    Patch strip;
    int line_o = opt.flip_line ? 5 : 2;
    for (int r = -1 - opt.width; r <= -1 + opt.width; ++r)
        for (int q = -opt.width; q < opt.width; ++q) {
            HexCoord c{q, r};
            std::optional<int> o;
            if (r == -1) o = line_o;
            else o = field_orientation(c, r > -1 ? upper : lower);
            if (!o) throw ConstructionError("field left an unexpected hole");
            strip.put(c + HexCoord{0, 1}, *o);
        }
    if (!r1_consistent(strip)) throw ConstructionError("fault-line strip violates R1");
    Patch kept = r2_component_of(strip, {0, 0});
    for (int q = -opt.width; q < opt.width; ++q)
        if (!kept.contains({q, 0})) throw ConstructionError("line tiles are not tree-connected");
    Construction c{ConstructionKind::Faultline, std::move(kept), {}, {}, {}, {}, {}};
    c.window = Window{{0, 0}, clear_radius(c.patch, {0, 0})};
    c.params = {{"width", opt.width}, {"m_max", opt.m_max}, {"lower_shift", opt.lower_shift},
                {"flip_line", opt.flip_line ? 1 : 0}, {"dropped", static_cast<long>(strip.size() - c.patch.size())}};
    long bits = 0;
    for (std::size_t i = 0; i < choices.size(); ++i) bits |= (choices[i] == Choice::Right ? 1L : 0L) << i;
    c.params["choices"] = bits;
    c.params["choice_count"] = static_cast<long>(choices.size());
    bool constant = std::all_of(choices.begin(), choices.end(), [&](Choice x) { return x == choices.front(); });
    if (choices.size() >= 2 && constant)
        c.warnings.push_back(
            "all doubling choices equal: the limit of this sequence contains an infinite triangle rather than a "
            "fault line");
    c.marked = boundary_cells(c.patch);
    return c;
}

std::optional<int> periodic_orientation(HexCoord c, int m) {
    if (m == 1) return mod6(4 * (c.q - c.r));
    if (m == 2) {
        // index-12 lattice spanned by (6,0) and (2,2)
        static const int table[2][6] = {{0, 1, 3, 4, 0, 4}, {0, 5, 4, 2, 2, 2}};
        long k = c.r >= 0 ? c.r / 2 : -((-c.r + 1) / 2);
        long q = c.q - 2 * k, r = c.r - 2 * k;
        return table[r][pmod(q, 6)];
    }
    return std::nullopt;
}

Construction build_periodic_lattice(int extent, int m) {
    if (extent < 0 || extent > 512) throw ConstructionError("extent out of range");
    if (m != 1 && m != 2) throw ConstructionError("periodic lattice level must be 1 or 2");
    Patch p;
    for (auto c : hex_ball({0, 0}, extent)) p.put(c, *periodic_orientation(c, m));
    Construction c{ConstructionKind::PeriodicLattice, std::move(p), {{"extent", extent}, {"m", m}}, {}, {}, {}, {}};
    c.marked = boundary_cells(c.patch);
    return c;
}

namespace {

// the three tiles around the vertex below-left of the origin, and their orientations
constexpr HexCoord kPinwheel[3] = {{0, 0}, {-1, 0}, {0, -1}};

Construction seed_from_lattice(ConstructionKind kind, int n, int shift) {
    if (n != 0) throw ConstructionError("only the n = 0 seeds are available");
    Patch lattice;
    for (auto c : hex_ball({0, 0}, 6)) lattice.put(c, mod6(4 * (c.q - c.r) + shift));
    auto features = trace_r1(lattice);
    Patch seed;
    for (auto& f : features) {
        if (f.kind != FeatureKind::Triangle) continue;
        bool through = false;
        for (auto& s : f.segs)
            for (auto pw : kPinwheel) through = through || (s.cell == pw && !s.straight);
        if (!through || f.length != 1) continue;
        for (auto& s : f.segs) seed.put(s.cell, *lattice.at(s.cell));
    }
    Construction c{kind, std::move(seed), {{"n", n}}, {}, {}, {}, {}};
    c.marked.assign(std::begin(kPinwheel), std::end(kPinwheel));
    return c;
}

}  // namespace

Construction build_cycle_seed(int n) { return seed_from_lattice(ConstructionKind::CycleSeed, n, 0); }
Construction build_anticycle_seed(int n) { return seed_from_lattice(ConstructionKind::AnticycleSeed, n, 2); }

namespace {

constexpr HexCoord kHullCentre{-1, -1};

// R1 completions of the field whose level offsets all sit on the lines through kHullCentre
const std::vector<Patch>& hull_completions(int radius) {
    static std::mutex mu;
    static std::map<int, std::vector<Patch>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(radius);
    if (it != cache.end()) return it->second;
    auto us = field_offsets({0, 0}, std::vector<HexCoord>(static_cast<std::size_t>(levels_for(radius)), {0, 0}));
    Patch partial;
    std::vector<HexCoord> holes;
    for (auto c : hex_ball(kHullCentre, radius)) {
        auto o = field_orientation(c, us);
        if (o) partial.put(c, *o);
        else holes.push_back(c);
    }
    std::stable_sort(holes.begin(), holes.end(), [](HexCoord a, HexCoord b) { return norm2(a) < norm2(b); });
    auto sols = complete_r1(partial, holes, 64);
    return cache.emplace(radius, std::move(sols)).first->second;
}

}  // namespace

Construction build_infinite_triangle_trunc(int radius) {
    if (radius < 1 || radius > 256) throw ConstructionError("radius out of range");
    const auto& sols = hull_completions(radius + 2);
    if (sols.empty()) throw ConstructionError("no completion of the centred field");
    const Patch& full = sols.front();
    // closed wedge between the rays along d0 and d1 from the corner tile
    Patch p;
    for (int a = 0; a <= radius; ++a)
        for (int b = 0; a + b <= radius; ++b) {
            HexCoord c = kHullCentre + a * step(0) + b * step(1);
            p.put(c - kHullCentre, *full.at(c));
        }
    Construction c{ConstructionKind::InfiniteTriangleTrunc, std::move(p), {{"radius", radius}}, {}, {}, {}, {}};
    for (int a = 0; a <= radius; ++a) c.marked.push_back(a * step(0));
    for (int b = 1; b <= radius; ++b) c.marked.push_back(b * step(1));
    return c;
}

Construction build_hull(int n, Hull which) {
    if (n < 0 || n > 7) throw ConstructionError("hull level out of range");
    int reach = (1 << n) - 1;
    const auto& sols = hull_completions(2 * reach + 6);
    std::size_t pick = which == Hull::R ? 0 : 1;
    if (sols.size() <= pick) throw ConstructionError("missing hull completion");
    const Patch& full = sols[pick];
    // one tree piece grown from each of the three tiles in a row through the centre
    Patch p;
    for (int k : {3, -1, 0}) {
        HexCoord seed = k < 0 ? kHullCentre : neighbor(kHullCentre, k);
        std::vector<HexCoord> stack{seed};
        Patch piece;
        piece.put(seed, *full.at(seed));
        while (!stack.empty()) {
            HexCoord c = stack.back();
            stack.pop_back();
            int o = *full.at(c);
            for (int d = 0; d < 6; ++d) {
                HexCoord nb = neighbor(c, d);
                auto on = full.at(nb);
                if (!on || piece.contains(nb) || hex_distance(nb, seed) > reach) continue;
                if (!r2_between(full.tmpl(), o, *on, d)) continue;
                piece.put(nb, *on);
                stack.push_back(nb);
            }
        }
        for (auto& [c, o] : piece.tiles())
            if (!p.put(c - kHullCentre, o)) throw ConstructionError("hull pieces disagree");
    }
    Construction c{which == Hull::R ? ConstructionKind::HullR : ConstructionKind::HullS, std::move(p), {{"n", n}},
                   {}, {}, {}, {}};
    c.marked = {{-1, 0}, {0, 0}, {1, 0}};
    return c;
}

}  // namespace hexmono

namespace hexmono {

namespace {

long param(const std::map<std::string, long>& ps, const std::string& key, long dflt) {
    auto it = ps.find(key);
    return it == ps.end() ? dflt : it->second;
}

}  // namespace

Construction build_by_name(const std::string& name, const std::map<std::string, long>& ps) {
    auto kind = kind_from_name(name);
    if (!kind) throw ConstructionError("unknown construction: " + name);
    for (auto& [label, keys] : construction_catalogue())
        if (label == name)
            for (auto& kv : ps)
                if (std::find(keys.begin(), keys.end(), kv.first) == keys.end())
                    throw ConstructionError("unknown parameter for " + name + ": " + kv.first);
    switch (*kind) {
        case ConstructionKind::SpiralP: return build_Pn_construction(static_cast<int>(param(ps, "n", 2)));
        case ConstructionKind::T0Trunc: return build_T0(static_cast<int>(param(ps, "radius", 10)));
        case ConstructionKind::Faultline: {
            FaultlineOptions opt;
            opt.width = static_cast<int>(param(ps, "width", 16));
            opt.m_max = static_cast<int>(param(ps, "m_max", 2));
            opt.lower_shift = static_cast<int>(param(ps, "lower_shift", 1));
            opt.flip_line = param(ps, "flip_line", 0) != 0;
            long count = param(ps, "choice_count", 0);
            long bits = param(ps, "choices", 0);
            if (count < 0 || count > 30) throw ConstructionError("choice_count out of range");
            for (long i = 0; i < count; ++i) opt.choices.push_back((bits >> i) & 1 ? Choice::Right : Choice::Left);
            return build_faultline(opt);
        }
        case ConstructionKind::CycleSeed: return build_cycle_seed(static_cast<int>(param(ps, "n", 0)));
        case ConstructionKind::AnticycleSeed: return build_anticycle_seed(static_cast<int>(param(ps, "n", 0)));
        case ConstructionKind::PeriodicLattice:
            return build_periodic_lattice(static_cast<int>(param(ps, "extent", 8)), static_cast<int>(param(ps, "m", 1)));
        case ConstructionKind::InfiniteTriangleTrunc:
            return build_infinite_triangle_trunc(static_cast<int>(param(ps, "radius", 8)));
        case ConstructionKind::HullR: return build_hull(static_cast<int>(param(ps, "n", 3)), Hull::R);
        case ConstructionKind::HullS: return build_hull(static_cast<int>(param(ps, "n", 3)), Hull::S);
    }
    throw ConstructionError("unknown construction: " + name);
}

std::vector<std::pair<std::string, std::vector<std::string>>> construction_catalogue() {
    return {
        {"spiral", {"n"}},
        {"t0", {"radius"}},
        {"faultline", {"width", "m_max", "lower_shift", "flip_line", "choices", "choice_count"}},
        {"cycle-seed", {"n"}},
        {"anticycle-seed", {"n"}},
        {"periodic-lattice", {"extent", "m"}},
        {"infinite-triangle", {"radius"}},
        {"hull-r", {"n"}},
        {"hull-s", {"n"}},
    };
}

}  // namespace hexmono
