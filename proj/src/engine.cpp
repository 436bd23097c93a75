#include "hexmono/engine.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace hexmono {

std::optional<int> Patch::at(HexCoord c) const {
    auto it = tiles_.find(c);
    if (it == tiles_.end()) return std::nullopt;
    return it->second;
}

bool Patch::put(HexCoord c, int o) {
    auto [it, fresh] = tiles_.emplace(c, static_cast<unsigned char>(mod6(o)));
    return fresh || it->second == mod6(o);
}

std::vector<Placement> Patch::sorted() const {
    std::vector<Placement> v;
    v.reserve(tiles_.size());
    for (auto& [c, o] : tiles_) v.push_back({c, o});
    std::sort(v.begin(), v.end(), [](const Placement& a, const Placement& b) { return a.cell < b.cell; });
    return v;
}

std::vector<HexCoord> Patch::cells() const {
    std::vector<HexCoord> v;
    v.reserve(tiles_.size());
    for (auto& kv : tiles_) v.push_back(kv.first);
    std::sort(v.begin(), v.end());
    return v;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Legal: return "LEGAL";
        case Verdict::R1Fail: return "R1_FAIL";
        case Verdict::R2Fail: return "R2_FAIL";
        case Verdict::Occupied: return "OCCUPIED";
        case Verdict::Disconnected: return "DISCONNECTED";
    }
    return "?";
}

std::vector<int> LegalityReport::failing_r1_dirs() const {
    std::vector<int> v;
    for (auto& e : edges)
        if (!e.r1_ok) v.push_back(e.dir);
    return v;
}

PlacementError::PlacementError(Placement pl, LegalityReport rep)
    : std::runtime_error(std::string("illegal placement: ") + verdict_name(rep.verdict)),
      placement(pl),
      report(std::move(rep)) {}

bool r1_ok_between(const PrototileTemplate& t, int oa, int ob, int k) {
    return r1_match(r1_signature(t, oa, k), r1_signature(t, ob, k + 3));
}

bool r2_between(const PrototileTemplate& t, int oa, int ob, int k) {
    return r2_connects(r2_contact(t, oa, k), r2_contact(t, ob, k + 3));
}

LegalityReport can_place(const Patch& p, Placement pl) {
    LegalityReport rep;
    if (p.contains(pl.cell)) {
        rep.verdict = Verdict::Occupied;
        return rep;
    }
    if (p.empty()) {
        rep.connectivity_ok = true;
        rep.verdict = Verdict::Legal;
        return rep;
    }
    bool r1_all = true;
    for (int k = 0; k < 6; ++k) {
        HexCoord nb = neighbor(pl.cell, k);
        auto o = p.at(nb);
        if (!o) continue;
        EdgeVerdict ev;
        ev.dir = k;
        ev.neighbor = nb;
        ev.r1_ok = r1_ok_between(p.tmpl(), pl.o, *o, k);
        ev.r2_connected = r2_between(p.tmpl(), pl.o, *o, k);
        r1_all = r1_all && ev.r1_ok;
        rep.r2_connections += ev.r2_connected;
        rep.edges.push_back(ev);
    }
    rep.connectivity_ok = !rep.edges.empty();
    if (!rep.connectivity_ok) rep.verdict = Verdict::Disconnected;
    else if (!r1_all) rep.verdict = Verdict::R1Fail;
    else if (rep.r2_connections == 0) rep.verdict = Verdict::R2Fail;
    else rep.verdict = Verdict::Legal;
    return rep;
}

Patch place(const Patch& p, Placement pl) {
    auto rep = can_place(p, pl);
    if (rep.verdict != Verdict::Legal) throw PlacementError(pl, std::move(rep));
    Patch out = p;
    out.put(pl.cell, pl.o);
    return out;
}

std::vector<int> legal_orientations(const Patch& p, HexCoord c) {
    std::vector<int> v;
    for (int o = 0; o < 6; ++o)
        if (can_place(p, {c, o}).verdict == Verdict::Legal) v.push_back(o);
    return v;
}

Placement transform_placement(Placement pl, int k, HexCoord v) {
    return {rotate_coord(pl.cell, k) + v, mod6(pl.o + k)};
}

Patch transform_patch(const Patch& p, int k, HexCoord v) {
    Patch out(p.tmpl());
    out.reserve(p.size());
    for (auto& [c, o] : p.tiles()) out.put(rotate_coord(c, k) + v, o + k);
    return out;
}

Patch union_patches(const std::vector<Patch>& ps) {
    Patch out = ps.empty() ? Patch() : Patch(ps.front().tmpl());
    std::size_t total = 0;
    for (auto& p : ps) total += p.size();
    out.reserve(total);
    for (auto& p : ps)
        for (auto& [c, o] : p.sorted())
            if (!out.put(c, o))
                throw UnionError(UnionError::Kind::Conflict, c,
                                 "orientation conflict at (" + std::to_string(c.q) + "," + std::to_string(c.r) + ")");
    if (!is_edge_connected(out)) throw UnionError(UnionError::Kind::Disconnected, {}, "union is not edge-connected");
    return out;
}

bool is_edge_connected(const Patch& p) {
    if (p.size() <= 1) return true;
    std::unordered_set<HexCoord, HexHash> seen;
    std::vector<HexCoord> stack{p.tiles().begin()->first};
    seen.insert(stack.back());
    while (!stack.empty()) {
        HexCoord c = stack.back();
        stack.pop_back();
        for (int k = 0; k < 6; ++k) {
            HexCoord nb = neighbor(c, k);
            if (p.contains(nb) && seen.insert(nb).second) stack.push_back(nb);
        }
    }
    return seen.size() == p.size();
}

std::vector<EdgeId> r1_violations(const Patch& p) {
    std::vector<EdgeId> bad;
    for (auto& [c, o] : p.tiles())
        for (int k = 0; k < 3; ++k) {
            auto nb = p.at(neighbor(c, k));
            if (nb && !r1_ok_between(p.tmpl(), o, *nb, k)) bad.push_back({c, k});
        }
    std::sort(bad.begin(), bad.end());
    return bad;
}

bool r1_consistent(const Patch& p) {
    for (auto& [c, o] : p.tiles())
        for (int k = 0; k < 3; ++k) {
            auto nb = p.at(neighbor(c, k));
            if (nb && !r1_ok_between(p.tmpl(), o, *nb, k)) return false;
        }
    return true;
}

ConstructibilityResult is_directly_constructible(const Patch& p) {
    ConstructibilityResult res;
    if (p.empty()) {
        res.constructible = true;
        return res;
    }
    auto bad = r1_violations(p);
    if (!bad.empty()) {
        res.reason = "R1 violated on " + std::to_string(bad.size()) + " edge(s)";
        return res;
    }
    // breadth-first over tree contacts from the smallest cell
    auto cells = p.cells();
    std::unordered_set<HexCoord, HexHash> seen{cells.front()};
    std::deque<HexCoord> queue{cells.front()};
    while (!queue.empty()) {
        HexCoord c = queue.front();
        queue.pop_front();
        int o = *p.at(c);
        res.order.push_back({c, o});
        for (int k = 0; k < 6; ++k) {
            HexCoord nb = neighbor(c, k);
            auto on = p.at(nb);
            if (on && !seen.count(nb) && r2_between(p.tmpl(), o, *on, k)) {
                seen.insert(nb);
                queue.push_back(nb);
            }
        }
    }
    res.constructible = res.order.size() == p.size();
    if (!res.constructible) {
        res.reason = "tree contacts reach " + std::to_string(res.order.size()) + " of " + std::to_string(p.size()) +
                     " tiles";
        res.order.clear();
    }
    return res;
}

long replay(const std::vector<Placement>& order, const PrototileTemplate& t, Patch* out) {
    Patch p(t);
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (can_place(p, order[i]).verdict != Verdict::Legal) {
            if (out) *out = p;
            return static_cast<long>(i);
        }
        p.put(order[i].cell, order[i].o);
    }
    if (out) *out = std::move(p);
    return -1;
}

}  // namespace hexmono
