#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hexmono/engine.hpp"

namespace hexmono {

// dense lookup over a patch, indices follow the sorted cell order
struct PatchIndex {
    explicit PatchIndex(const Patch& p);

    std::vector<HexCoord> cells;
    std::vector<unsigned char> orient;
    std::vector<int> nbr;  // 6 per cell, -1 when empty

    int find(HexCoord c) const;
    int neighbor_of(int i, int k) const { return nbr[6 * i + k]; }
    bool on_boundary(int i) const;
    std::size_t size() const { return cells.size(); }

private:
    HexCoord lo_{}, hi_{};
    std::vector<int> grid_;
};

enum class FeatureKind { Triangle, LineSegment, RayTruncated, ClosedOther };
const char* feature_kind_name(FeatureKind k);

struct CurveSegment {
    HexCoord cell;
    int in = 0;   // world edge where the walk enters
    int out = 0;  // world edge where it leaves
    bool straight = false;
};

struct R1Feature {
    FeatureKind kind = FeatureKind::RayTruncated;
    std::vector<CurveSegment> segs;
    std::vector<HexCoord> corner_cells;
    std::array<int, 3> sides{};  // straight tiles per side, triangles only
    int length = -1;             // triangles only
    int longest_straight = 0;    // longest run of straight segments
    bool touches_boundary = false;
};

class R1Error : public std::runtime_error {
public:
    R1Error(EdgeId e, const std::string& m) : std::runtime_error(m), bad_edge(e) {}
    EdgeId bad_edge;
};

std::vector<R1Feature> trace_r1(const Patch& p);

struct R2Graph {
    std::vector<HexCoord> nodes;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> component;  // per node, components numbered by smallest node
    int components = 0;
    bool is_forest = true;
    long cycle_rank = 0;  // edges - nodes + components

    std::vector<std::vector<int>> members() const;
};

R2Graph r2_graph(const Patch& p);

struct C0Report {
    bool ok = true;
    HexCoord cell;              // first tile where corners of unequal triangles meet
    std::pair<int, int> lengths{-1, -1};
};

C0Report check_c0(const Patch& p, const std::vector<R1Feature>& features);
C0Report check_c0(const Patch& p);

enum class CycleKind { Cycle, Anticycle };

struct CycleFinding {
    CycleKind kind;
    std::array<HexCoord, 3> centre;  // the three tiles around the central vertex
    int triangle_length = 0;
    int n = -1;  // triangle length is 2^(n+1)-1
};

std::vector<CycleFinding> detect_r2_cycles(const Patch& p, const std::vector<R1Feature>& features);
std::vector<CycleFinding> detect_r2_cycles(const Patch& p);

struct PeriodReport {
    std::vector<HexCoord> tested;
    std::vector<double> agreement;  // per tested vector
    std::vector<HexCoord> periods;
    HexCoord centre;
    double window_radius = 0;
    bool unreliable = false;
};

// a Cartesian ball about a tile; analyses that need a window use the patch's largest one by default
struct Window {
    HexCoord centre;
    double radius = 0;
};

double clear_radius(const Patch& p, HexCoord centre);  // distance to the nearest empty cell
Window inscribed_window(const Patch& p);
PeriodReport period_check(const Patch& p, int bound, std::optional<Window> w = std::nullopt);

enum class ClassVerdict { C0Consistent, C1Consistent, Both, Neither };
const char* class_verdict_name(ClassVerdict v);

struct ClassReport {
    C0Report c0;
    int long_line = 0;          // tiles in the longest straight open curve
    bool line_spans = false;    // a straight curve crosses the window boundary to boundary
    double window_radius = 0;
    ClassVerdict verdict = ClassVerdict::Neither;
};

ClassReport classify(const Patch& p, const std::vector<R1Feature>& features, std::optional<Window> w = std::nullopt);
ClassReport classify(const Patch& p, std::optional<Window> w = std::nullopt);

}  // namespace hexmono
