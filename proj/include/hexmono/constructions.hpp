#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hexmono/analysis.hpp"
#include "hexmono/engine.hpp"

namespace hexmono {

enum class Choice { Left, Right };
using ChoiceSequence = std::vector<Choice>;
ChoiceSequence alternating_choices(int n);

enum class ConstructionKind {
    SpiralP,
    T0Trunc,
    Faultline,
    CycleSeed,
    AnticycleSeed,
    PeriodicLattice,
    InfiniteTriangleTrunc,
    HullR,
    HullS
};

const char* kind_name(ConstructionKind k);
std::optional<ConstructionKind> kind_from_name(const std::string& s);

struct Construction {
    ConstructionKind kind;
    Patch patch;
    std::map<std::string, long> params;
    std::vector<std::string> warnings;
    std::vector<HexCoord> marked;  // boundary tiles and other cells the builder wants highlighted
    std::vector<HexCoord> anchors;
    std::optional<Window> window;  // the region the builder vouches for
};

class ConstructionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kMaxSpiral = 10;

// assembles P_n from its four predecessors and the corner tile; throws on overlap
Patch build_Pn(int n);
Construction build_Pn_construction(int n);
std::size_t spiral_size(int n);

Construction build_T0(int radius);

// nested field of triangles: level-k offsets u_k in Z^2 mod 2^(k+1), picked by per-level bits e_k
std::vector<HexCoord> field_offsets(HexCoord u0, const std::vector<HexCoord>& e);
std::optional<int> field_orientation(HexCoord c, const std::vector<HexCoord>& offsets);

// every R1-consistent way to fill the holes of a partial patch, in deterministic order
std::vector<Patch> complete_r1(const Patch& partial, std::vector<HexCoord> holes, std::size_t limit);

struct FaultlineOptions {
    int width = 16;
    int m_max = 2;
    ChoiceSequence choices;   // empty: strict alternation
    int lower_shift = 1;      // 0 mirrors the upper triangles across the line
    bool flip_line = false;   // the line's stripes may run either way
};
Construction build_faultline(const FaultlineOptions& opt);

Construction build_cycle_seed(int n);
Construction build_anticycle_seed(int n);

// m = 1: lengths 0,1 with period sqrt3; m = 2: lengths 0,1,3 on an index-12 lattice
std::optional<int> periodic_orientation(HexCoord c, int m);
Construction build_periodic_lattice(int extent, int m = 1);

Construction build_infinite_triangle_trunc(int radius);

enum class Hull { R, S };
Construction build_hull(int n, Hull which);

Construction build_by_name(const std::string& name, const std::map<std::string, long>& params);
std::vector<std::pair<std::string, std::vector<std::string>>> construction_catalogue();

}  // namespace hexmono
