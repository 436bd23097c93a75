#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hexmono/engine.hpp"

namespace hexmono {

enum Layer : unsigned {
    kTiles = 1,
    kR1Curves = 2,
    kR2Trees = 4,
    kTriangleLabels = 8,
    kR2Graph = 16,
    kSpiralAnchors = 32,
};

const std::vector<std::pair<std::string, Layer>>& layer_names();
// comma separated layer names; throws std::invalid_argument on unknown or empty lists
unsigned parse_layers(const std::string& csv);

struct RenderOptions {
    unsigned layers = kTiles | kR1Curves | kR2Trees;
    double scale = 24.0;  // pixels per unit of centre spacing
    std::vector<HexCoord> highlight;
    std::optional<std::vector<HexCoord>> anchors;  // default: spiral anchors while they lie in the patch
};

// Black R1 curves meet edges at 0.3/0.7 of their length, red tree contacts at 0.35/0.65,
// both measured from the edge's start vertex in counterclockwise order.
std::string render_svg(const Patch& p, const RenderOptions& opt = {});

}  // namespace hexmono
