#pragma once

#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "hexmono/engine.hpp"

namespace hexmono {

enum class SearchStatus { Extendable, Refuted, Unknown };
const char* search_status_name(SearchStatus s);

inline constexpr long kDefaultBudget = 10'000'000;
long default_budget();  // HEXMONO_BUDGET when set

struct SearchOptions {
    long budget = default_budget();
    int threads = 1;
    bool r1_only = false;
    bool open_boundary = true;
};

struct Contradiction {
    HexCoord cell;
    long emptied = 0;    // times the cell lost every orientation
    long r2_closed = 0;  // times a tree component closed off here without reaching the seed
};

// An anchored step starts a tree that reaches the seed only through cells outside the region;
// it must satisfy R1 and carry a tree contact on an edge facing out of the region.
struct WitnessStep {
    Placement pl;
    bool anchored = false;
};

struct SearchVerdict {
    SearchStatus status = SearchStatus::Unknown;
    int radius = -1;
    long node_count = 0;
    long region_size = 0;
    std::vector<Contradiction> contradictions;  // sorted by cell; filled for REFUTED and UNKNOWN
    std::vector<WitnessStep> witness;           // growth order after the seed, for EXTENDABLE
};

// optional per-cell orientation masks (bit o set = orientation o allowed)
using OrientationMasks = std::unordered_map<HexCoord, unsigned char, HexHash>;

// cells within hex distance radius of the patch, sorted
std::vector<HexCoord> dilate(const Patch& p, int radius);

// Fills every region cell so that R1 holds everywhere and each R2 component contains a seed tile or
// leaves the region through a tree contact on its boundary. That is exactly what a growth sequence can
// reach when trees are allowed to close up outside the region, and it holds for the restriction of any
// directly constructible patch that covers the region.
SearchVerdict extend_all(const Patch& seed, const std::vector<HexCoord>& region, const SearchOptions& opt = {},
                         const OrientationMasks& masks = {});
SearchVerdict is_legal_within(const Patch& p, int radius, const SearchOptions& opt = {});

// replays the witness on top of the seed through the engine and checks it fills the region
bool verify_witness(const Patch& seed, const std::vector<HexCoord>& region, const std::vector<WitnessStep>& witness,
                    bool r1_only = false);

struct RefutationSweep {
    int minimal_radius = -1;  // -1 when no radius up to the limit refuted
    std::vector<SearchVerdict> attempts;
};
RefutationSweep find_refutation_radius(const Patch& seed, int max_radius, const SearchOptions& opt = {});

// R1 triangle with a corner at a given arc of a placed tile
struct TriangleFrame {
    int length = 0;
    std::vector<HexCoord> cells;             // corners and sides
    std::vector<std::pair<int, int>> joins;  // world edges the curve uses in each frame cell
    std::vector<HexCoord> interior;
};
// arcs of a tile: world edge pairs (a, a+1) joined by a curve, ascending a
std::vector<int> arc_starts(const PrototileTemplate& t, int o);
TriangleFrame triangle_frame(HexCoord corner, int arc_start, int length);
OrientationMasks frame_masks(const PrototileTemplate& t, const TriangleFrame& f);

struct ForcedLengths {
    std::set<int> observed;
    std::map<int, SearchVerdict> per_length;  // verdict for each length that fits the radius
    bool partial = false;                     // some length came back UNKNOWN
};
// arc_start -1 tries every arc of the corner tile
ForcedLengths forced_lengths(const Patch& seed, HexCoord corner, int radius, const SearchOptions& opt = {},
                             int arc_start = -1);

std::string certificate_text(const Patch& seed, const SearchVerdict& v, const std::string& what);

}  // namespace hexmono
