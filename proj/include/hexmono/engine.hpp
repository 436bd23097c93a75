#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "hexmono/hexlattice.hpp"
#include "hexmono/prototile.hpp"

namespace hexmono {

struct Placement {
    HexCoord cell;
    int o = 0;

    friend bool operator==(const Placement&, const Placement&) = default;
};

class Patch {
public:
    using Map = std::unordered_map<HexCoord, unsigned char, HexHash>;

    Patch() : tmpl_(&default_template()) {}
    explicit Patch(const PrototileTemplate& t) : tmpl_(&t) {}

    const PrototileTemplate& tmpl() const { return *tmpl_; }
    void set_template(const PrototileTemplate& t) { tmpl_ = &t; }

    std::size_t size() const { return tiles_.size(); }
    bool empty() const { return tiles_.empty(); }
    bool contains(HexCoord c) const { return tiles_.count(c) != 0; }
    std::optional<int> at(HexCoord c) const;
    const Map& tiles() const { return tiles_; }

    // raw insertion for builders; no legality checks. Returns false on a conflicting orientation.
    bool put(HexCoord c, int o);
    void erase(HexCoord c) { tiles_.erase(c); }
    void reserve(std::size_t n) { tiles_.reserve(n); }

    std::vector<Placement> sorted() const;
    std::vector<HexCoord> cells() const;

    friend bool operator==(const Patch& a, const Patch& b) { return a.tiles_ == b.tiles_; }

private:
    const PrototileTemplate* tmpl_;
    Map tiles_;
};

enum class Verdict { Legal, R1Fail, R2Fail, Occupied, Disconnected };
const char* verdict_name(Verdict v);

struct EdgeVerdict {
    int dir = 0;
    HexCoord neighbor;
    bool r1_ok = true;
    bool r2_connected = false;
};

struct LegalityReport {
    std::vector<EdgeVerdict> edges;  // one per occupied neighbour
    int r2_connections = 0;
    bool connectivity_ok = false;
    Verdict verdict = Verdict::Legal;

    std::vector<int> failing_r1_dirs() const;
};

class PlacementError : public std::runtime_error {
public:
    PlacementError(Placement pl, LegalityReport rep);
    Placement placement;
    LegalityReport report;
};

class UnionError : public std::runtime_error {
public:
    enum class Kind { Conflict, Disconnected };
    UnionError(Kind k, HexCoord c, const std::string& msg) : std::runtime_error(msg), kind(k), cell(c) {}
    Kind kind;
    HexCoord cell;
};

// edge k of a at neighbour b: do the curves line up, do the trees touch
bool r1_ok_between(const PrototileTemplate& t, int oa, int ob, int k);
bool r2_between(const PrototileTemplate& t, int oa, int ob, int k);

LegalityReport can_place(const Patch& p, Placement pl);
Patch place(const Patch& p, Placement pl);
std::vector<int> legal_orientations(const Patch& p, HexCoord c);

Patch transform_patch(const Patch& p, int k, HexCoord v);
Placement transform_placement(Placement pl, int k, HexCoord v);
Patch union_patches(const std::vector<Patch>& ps);

bool is_edge_connected(const Patch& p);
std::vector<EdgeId> r1_violations(const Patch& p);
bool r1_consistent(const Patch& p);

struct ConstructibilityResult {
    bool constructible = false;
    std::vector<Placement> order;  // a legal growth order when constructible
    std::string reason;
};

ConstructibilityResult is_directly_constructible(const Patch& p);

// replays an order from the empty patch; returns the index of the first non-legal step or -1
long replay(const std::vector<Placement>& order, const PrototileTemplate& t, Patch* out = nullptr);

}  // namespace hexmono
