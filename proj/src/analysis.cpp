#include "hexmono/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numeric>
#include <unordered_map>

namespace hexmono {

namespace {

struct DisjointSets {
    std::vector<int> parent;
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);
        parent[b] = a;
        return true;
    }
};

}  // namespace

PatchIndex::PatchIndex(const Patch& p) {
    auto placements = p.sorted();
    cells.reserve(placements.size());
    orient.reserve(placements.size());
    for (auto& pl : placements) {
        cells.push_back(pl.cell);
        orient.push_back(static_cast<unsigned char>(pl.o));
    }
    if (!cells.empty()) {
        lo_ = hi_ = cells.front();
        for (auto c : cells) {
            lo_.q = std::min(lo_.q, c.q);
            lo_.r = std::min(lo_.r, c.r);
            hi_.q = std::max(hi_.q, c.q);
            hi_.r = std::max(hi_.r, c.r);
        }
        long w = hi_.q - lo_.q + 1, h = hi_.r - lo_.r + 1;
        if (w * h <= 64L * static_cast<long>(cells.size()) + (1L << 20)) {
            grid_.assign(static_cast<std::size_t>(w * h), -1);
            for (std::size_t i = 0; i < cells.size(); ++i)
                grid_[static_cast<std::size_t>((cells[i].r - lo_.r) * w + (cells[i].q - lo_.q))] = static_cast<int>(i);
        }
    }
    nbr.assign(6 * cells.size(), -1);
    for (std::size_t i = 0; i < cells.size(); ++i)
        for (int k = 0; k < 6; ++k) nbr[6 * i + k] = find(neighbor(cells[i], k));
}

int PatchIndex::find(HexCoord c) const {
    if (cells.empty()) return -1;
    if (!grid_.empty()) {
        if (c.q < lo_.q || c.q > hi_.q || c.r < lo_.r || c.r > hi_.r) return -1;
        long w = hi_.q - lo_.q + 1;
        return grid_[static_cast<std::size_t>((c.r - lo_.r) * w + (c.q - lo_.q))];
    }
    auto it = std::lower_bound(cells.begin(), cells.end(), c);
    if (it == cells.end() || *it != c) return -1;
    return static_cast<int>(it - cells.begin());
}

bool PatchIndex::on_boundary(int i) const {
    for (int k = 0; k < 6; ++k)
        if (nbr[6 * i + k] < 0) return true;
    return false;
}

const char* feature_kind_name(FeatureKind k) {
    switch (k) {
        case FeatureKind::Triangle: return "TRIANGLE";
        case FeatureKind::LineSegment: return "LINE_SEGMENT";
        case FeatureKind::RayTruncated: return "RAY_TRUNCATED";
        case FeatureKind::ClosedOther: return "CLOSED_OTHER";
    }
    return "?";
}

namespace {

int longest_run(const std::vector<CurveSegment>& segs, bool cyclic) {
    int best = 0, run = 0;
    std::size_t n = segs.size();
    std::size_t passes = cyclic ? 2 * n : n;
    for (std::size_t i = 0; i < passes; ++i) {
        if (segs[i % n].straight) {
            run = std::min<int>(run + 1, static_cast<int>(n));
            best = std::max(best, run);
        } else {
            run = 0;
        }
    }
    return best;
}

void classify_feature(R1Feature& f, bool closed) {
    std::vector<std::size_t> corners;
    for (std::size_t i = 0; i < f.segs.size(); ++i)
        if (!f.segs[i].straight) {
            corners.push_back(i);
            f.corner_cells.push_back(f.segs[i].cell);
        }
    f.longest_straight = longest_run(f.segs, closed);
    f.touches_boundary = !closed;
    if (!closed) {
        f.kind = corners.empty() ? FeatureKind::LineSegment : FeatureKind::RayTruncated;
        return;
    }
    if (corners.size() != 3) {
        f.kind = FeatureKind::ClosedOther;
        return;
    }
    std::size_t n = f.segs.size();
    for (int s = 0; s < 3; ++s) {
        std::size_t a = corners[s], b = corners[(s + 1) % 3];
        f.sides[s] = static_cast<int>((b + n - a - 1) % n);
    }
    if (f.sides[0] == f.sides[1] && f.sides[1] == f.sides[2]) {
        f.kind = FeatureKind::Triangle;
        f.length = f.sides[0];
    } else {
        f.kind = FeatureKind::ClosedOther;
    }
}

}  // namespace

std::vector<R1Feature> trace_r1(const Patch& p) {
    const auto& t = p.tmpl();
    PatchIndex ix(p);
    for (std::size_t i = 0; i < ix.size(); ++i)
        for (int k = 0; k < 3; ++k) {
            int j = ix.neighbor_of(static_cast<int>(i), k);
            if (j >= 0 && !r1_ok_between(t, ix.orient[i], ix.orient[j], k))
                throw R1Error(edge(ix.cells[i], k), "R1 mismatch on edge (" + std::to_string(ix.cells[i].q) + "," +
                                                        std::to_string(ix.cells[i].r) + ") dir " + std::to_string(k));
        }
    std::vector<unsigned char> seen(ix.size(), 0);
    auto mark = [&](int i, int k) { seen[i] |= static_cast<unsigned char>(1u << k); };
    auto is_seen = [&](int i, int k) { return (seen[i] >> k) & 1u; };
    auto segment = [&](int i, int in, int out) {
        return CurveSegment{ix.cells[i], in, out, t.is_stripe(mod6(in - ix.orient[i]))};
    };

    std::vector<R1Feature> out;
    for (int i = 0; i < static_cast<int>(ix.size()); ++i)
        for (int k = 0; k < 6; ++k) {
            if (is_seen(i, k)) continue;
            std::deque<CurveSegment> segs;
            bool closed = false;
            int cur = i, kin = k;
            while (true) {
                int kout = curve_partner(t, ix.orient[cur], kin);
                mark(cur, kin);
                mark(cur, kout);
                segs.push_back(segment(cur, kin, kout));
                int nb = ix.neighbor_of(cur, kout);
                if (nb < 0) break;
                int nin = mod6(kout + 3);
                if (nb == i && nin == k) {
                    closed = true;
                    break;
                }
                cur = nb;
                kin = nin;
            }
            if (!closed) {
                cur = i;
                int kout = k;
                while (true) {
                    int nb = ix.neighbor_of(cur, kout);
                    if (nb < 0) break;
                    int kin2 = mod6(kout + 3);
                    int kout2 = curve_partner(t, ix.orient[nb], kin2);
                    mark(nb, kin2);
                    mark(nb, kout2);
                    segs.push_front(segment(nb, kout2, kin2));
                    cur = nb;
                    kout = kout2;
                }
            }
            R1Feature f;
            f.segs.assign(segs.begin(), segs.end());
            classify_feature(f, closed);
            out.push_back(std::move(f));
        }
    return out;
}

std::vector<std::vector<int>> R2Graph::members() const {
    std::vector<std::vector<int>> m(static_cast<std::size_t>(components));
    for (std::size_t i = 0; i < component.size(); ++i) m[component[i]].push_back(static_cast<int>(i));
    return m;
}

R2Graph r2_graph(const Patch& p) {
    PatchIndex ix(p);
    R2Graph g;
    g.nodes = ix.cells;
    DisjointSets ds(ix.size());
    for (int i = 0; i < static_cast<int>(ix.size()); ++i)
        for (int k = 0; k < 3; ++k) {
            int j = ix.neighbor_of(i, k);
            if (j >= 0 && r2_between(p.tmpl(), ix.orient[i], ix.orient[j], k)) {
                g.edges.emplace_back(std::min(i, j), std::max(i, j));
                ds.unite(i, j);
            }
        }
    std::sort(g.edges.begin(), g.edges.end());
    g.component.assign(ix.size(), -1);
    std::unordered_map<int, int> label;
    for (std::size_t i = 0; i < ix.size(); ++i) {
        int root = ds.find(static_cast<int>(i));
        auto [it, fresh] = label.emplace(root, g.components);
        if (fresh) ++g.components;
        g.component[i] = it->second;
    }
    g.cycle_rank = static_cast<long>(g.edges.size()) - static_cast<long>(ix.size()) + g.components;
    g.is_forest = g.cycle_rank == 0;
    return g;
}

C0Report check_c0(const Patch&, const std::vector<R1Feature>& features) {
    std::map<HexCoord, std::vector<int>> at;
    for (auto& f : features) {
        if (f.kind != FeatureKind::Triangle) continue;
        for (auto c : f.corner_cells) at[c].push_back(f.length);
    }
    C0Report rep;
    for (auto& [c, lens] : at)
        for (int len : lens)
            if (len != lens.front()) {
                rep.ok = false;
                rep.cell = c;
                rep.lengths = {lens.front(), len};
                return rep;
            }
    return rep;
}

C0Report check_c0(const Patch& p) { return check_c0(p, trace_r1(p)); }

std::vector<CycleFinding> detect_r2_cycles(const Patch& p, const std::vector<R1Feature>& features) {
    const auto& t = p.tmpl();
    PatchIndex ix(p);
    // feature id of the curve crossing each (tile, world edge)
    std::vector<int> fid(6 * ix.size(), -1);
    for (std::size_t f = 0; f < features.size(); ++f)
        for (auto& s : features[f].segs) {
            int i = ix.find(s.cell);
            fid[6 * i + s.in] = static_cast<int>(f);
            fid[6 * i + s.out] = static_cast<int>(f);
        }
    std::vector<CycleFinding> out;
    for (int i = 0; i < static_cast<int>(ix.size()); ++i)
        for (int v = 0; v < 2; ++v) {
            // the three tiles around the vertex between directions v and v+1 of tile i
            int a = i, b = ix.neighbor_of(i, v), c = ix.neighbor_of(i, v + 1);
            if (b < 0 || c < 0) continue;
            // internal edges: a->b dir v, a->c dir v+1, b->c dir v+2
            struct Inner {
                int x, y, k;
            };
            std::array<Inner, 3> inner{{{a, b, v}, {a, c, v + 1}, {b, c, v + 2}}};
            std::array<int, 3> tile{a, b, c};
            std::map<int, int> stripe_ends;
            bool ok = true;
            for (auto& e : inner) {
                bool sx = t.is_stripe(e.k - ix.orient[e.x]);
                bool sy = t.is_stripe(e.k + 3 - ix.orient[e.y]);
                if (sx == sy) ok = false;
                stripe_ends[e.x] += sx;
                stripe_ends[e.y] += sy;
            }
            for (int x : tile) ok = ok && stripe_ends[x] == 1;
            if (!ok) continue;
            int len = -1;
            for (auto& e : inner) {
                int f = fid[6 * e.x + mod6(e.k)];
                if (f < 0 || features[f].kind != FeatureKind::Triangle) ok = false;
                else if (len < 0) len = features[f].length;
                else if (features[f].length != len) ok = false;
            }
            if (!ok) continue;
            int links = 0;
            for (auto& e : inner) links += r2_between(t, ix.orient[e.x], ix.orient[e.y], e.k);
            if (links != 0 && links != 3) continue;
            CycleFinding cf;
            cf.kind = links == 3 ? CycleKind::Cycle : CycleKind::Anticycle;
            cf.centre = {ix.cells[a], ix.cells[b], ix.cells[c]};
            std::sort(cf.centre.begin(), cf.centre.end());
            cf.triangle_length = len;
            for (int n = 0; n < 30; ++n)
                if ((2L << n) - 1 == len) cf.n = n;
            out.push_back(cf);
        }
    return out;
}

std::vector<CycleFinding> detect_r2_cycles(const Patch& p) { return detect_r2_cycles(p, trace_r1(p)); }

double clear_radius(const Patch& p, HexCoord centre) {
    long best = -1;
    if (!p.contains(centre)) return 0.0;
    for (int d = 1;; ++d) {
        // every cell at hex distance d is at least d*sqrt3/2 away
        if (best >= 0 && 3.0 * d * d / 4.0 > static_cast<double>(best)) break;
        for (int k = 0; k < 6; ++k) {
            HexCoord c = centre + d * step(k);
            for (int s = 0; s < d; ++s) {
                if (!p.contains(c) && (best < 0 || norm2(c - centre) < best)) best = norm2(c - centre);
                c = neighbor(c, k + 2);
            }
        }
    }
    return std::sqrt(static_cast<double>(best));
}

Window inscribed_window(const Patch& p) {
    if (p.empty()) return {};
    PatchIndex ix(p);
    // hex distance transform from the empty cells around the patch
    std::vector<int> dist(ix.size(), -1);
    std::deque<int> queue;
    for (int i = 0; i < static_cast<int>(ix.size()); ++i)
        if (ix.on_boundary(i)) {
            dist[i] = 0;
            queue.push_back(i);
        }
    while (!queue.empty()) {
        int i = queue.front();
        queue.pop_front();
        for (int k = 0; k < 6; ++k) {
            int j = ix.neighbor_of(i, k);
            if (j >= 0 && dist[j] < 0) {
                dist[j] = dist[i] + 1;
                queue.push_back(j);
            }
        }
    }
    int top = *std::max_element(dist.begin(), dist.end());
    Window w;
    w.radius = -1;
    for (int i = 0; i < static_cast<int>(ix.size()); ++i)
        if (dist[i] >= top - 1) {
            double r = clear_radius(p, ix.cells[i]);
            if (r > w.radius) w = {ix.cells[i], r};
        }
    return w;
}

PeriodReport period_check(const Patch& p, int bound, std::optional<Window> w) {
    PeriodReport rep;
    auto [centre, radius] = w ? *w : inscribed_window(p);
    rep.centre = centre;
    rep.window_radius = radius;
    rep.unreliable = radius < 4.0 * bound;
    PatchIndex ix(p);
    std::vector<HexCoord> vs;
    for (int q = -2 * bound; q <= 2 * bound; ++q)
        for (int r = -2 * bound; r <= 2 * bound; ++r) {
            HexCoord v{q, r};
            if (v != HexCoord{0, 0} && norm2(v) <= static_cast<long>(bound) * bound) vs.push_back(v);
        }
    std::sort(vs.begin(), vs.end(), [](HexCoord a, HexCoord b) {
        return norm2(a) != norm2(b) ? norm2(a) < norm2(b) : a < b;
    });
    auto window = ball(centre, radius);
    for (auto v : vs) {
        double lim = radius - cart_norm(v) - 1e-9;
        long seen = 0, same = 0;
        for (auto c : window) {
            if (cart_norm(c - centre) >= lim) continue;
            int a = ix.find(c), b = ix.find(c + v);
            if (a < 0 || b < 0) continue;
            ++seen;
            same += ix.orient[a] == ix.orient[b];
        }
        rep.tested.push_back(v);
        double ratio = seen ? static_cast<double>(same) / static_cast<double>(seen) : 0.0;
        rep.agreement.push_back(ratio);
        if (seen > 0 && same == seen) rep.periods.push_back(v);
    }
    return rep;
}

const char* class_verdict_name(ClassVerdict v) {
    switch (v) {
        case ClassVerdict::C0Consistent: return "C0_CONSISTENT";
        case ClassVerdict::C1Consistent: return "C1_CONSISTENT";
        case ClassVerdict::Both: return "BOTH";
        case ClassVerdict::Neither: return "NEITHER";
    }
    return "?";
}

ClassReport classify(const Patch& p, const std::vector<R1Feature>& features, std::optional<Window> w) {
    ClassReport rep;
    rep.c0 = check_c0(p, features);
    auto [centre, radius] = w ? *w : inscribed_window(p);
    rep.window_radius = radius;
    for (auto& f : features) {
        if (f.kind != FeatureKind::LineSegment) continue;
        rep.long_line = std::max(rep.long_line, static_cast<int>(f.segs.size()));
        // open at both ends and passing through the window: witnessed boundary to boundary
        for (auto& s : f.segs)
            if (cart_norm(s.cell - centre) < radius) {
                rep.line_spans = true;
                break;
            }
    }
    if (rep.c0.ok && rep.line_spans) rep.verdict = ClassVerdict::Both;
    else if (rep.c0.ok) rep.verdict = ClassVerdict::C0Consistent;
    else if (rep.line_spans) rep.verdict = ClassVerdict::C1Consistent;
    else rep.verdict = ClassVerdict::Neither;
    return rep;
}

ClassReport classify(const Patch& p, std::optional<Window> w) { return classify(p, trace_r1(p), w); }

}  // namespace hexmono
