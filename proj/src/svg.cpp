#include "hexmono/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "hexmono/analysis.hpp"

namespace hexmono {

const std::vector<std::pair<std::string, Layer>>& layer_names() {
    static const std::vector<std::pair<std::string, Layer>> names{
        {"TILES", kTiles},
        {"R1_CURVES", kR1Curves},
        {"R2_TREES", kR2Trees},
        {"TRIANGLE_LABELS", kTriangleLabels},
        {"R2_GRAPH", kR2Graph},
        {"SPIRAL_ANCHORS", kSpiralAnchors},
    };
    return names;
}

unsigned parse_layers(const std::string& csv) {
    unsigned out = 0;
    std::istringstream is(csv);
    std::string word;
    while (std::getline(is, word, ',')) {
        if (word.empty()) continue;
        bool hit = false;
        for (auto& [name, bit] : layer_names())
            if (name == word) {
                out |= bit;
                hit = true;
            }
        if (!hit) throw std::invalid_argument("unknown layer: " + word);
    }
    if (!out) throw std::invalid_argument("no layers given");
    return out;
}

namespace {

constexpr double kPi = 3.14159265358979323846;
const double kRho = 1.0 / std::sqrt(3.0);

struct Pt {
    double x, y;
};

Pt vertex(Point c, double deg) { return {c.x + kRho * std::cos(deg * kPi / 180), c.y + kRho * std::sin(deg * kPi / 180)}; }

// point at fraction f of world edge k, from its ccw start vertex
Pt edge_point(Point c, int k, double f) {
    Pt a = vertex(c, 60.0 * k - 30), b = vertex(c, 60.0 * k + 30);
    return {a.x + f * (b.x - a.x), a.y + f * (b.y - a.y)};
}

class Canvas {
public:
    Canvas(double scale, double minx, double maxy) : s_(scale), minx_(minx), maxy_(maxy) {}
    std::string xy(Pt p) const {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.3f,%.3f", (p.x - minx_) * s_, (maxy_ - p.y) * s_);
        return buf;
    }
    std::string x(double v) const { return num((v - minx_) * s_); }
    std::string y(double v) const { return num((maxy_ - v) * s_); }
    static std::string num(double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3f", v);
        return buf;
    }

private:
    double s_, minx_, maxy_;
};

const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#9467bd", "#8c564b", "#e377c2", "#17becf", "#bcbd22"};

}  // namespace

std::string render_svg(const Patch& p, const RenderOptions& opt) {
    if (!opt.layers) throw std::invalid_argument("no layers given");
    const auto& t = p.tmpl();
    auto tiles = p.sorted();
    double minx = -1, maxx = 1, miny = -1, maxy = 1;
    if (!tiles.empty()) {
        Point c0 = center(tiles.front().cell);
        minx = maxx = c0.x;
        miny = maxy = c0.y;
        for (auto& pl : tiles) {
            Point c = center(pl.cell);
            minx = std::min(minx, c.x);
            maxx = std::max(maxx, c.x);
            miny = std::min(miny, c.y);
            maxy = std::max(maxy, c.y);
        }
        minx -= 1;
        maxx += 1;
        miny -= 1;
        maxy += 1;
    }
    double s = opt.scale > 0 ? opt.scale : 24.0;
    Canvas cv(s, minx, maxy);
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << Canvas::num((maxx - minx) * s) << "\" height=\""
       << Canvas::num((maxy - miny) * s) << "\" viewBox=\"0 0 " << Canvas::num((maxx - minx) * s) << ' '
       << Canvas::num((maxy - miny) * s) << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    if (!opt.highlight.empty()) {
        os << "<g fill=\"#ffe680\" stroke=\"none\">\n";
        for (auto c : opt.highlight) {
            Point m = center(c);
            os << "<polygon points=\"";
            for (int v = 0; v < 6; ++v) os << (v ? " " : "") << cv.xy(vertex(m, 60.0 * v + 30));
            os << "\"/>\n";
        }
        os << "</g>\n";
    }
    if (opt.layers & kTiles) {
        os << "<g fill=\"none\" stroke=\"#999999\" stroke-width=\"1\">\n";
        for (auto& pl : tiles) {
            Point m = center(pl.cell);
            os << "<polygon points=\"";
            for (int v = 0; v < 6; ++v) os << (v ? " " : "") << cv.xy(vertex(m, 60.0 * v + 30));
            os << "\"/>\n";
        }
        os << "</g>\n";
    }
    if (opt.layers & kR2Trees) {
        os << "<g stroke=\"#d62728\" stroke-width=\"" << Canvas::num(s * 0.06) << "\" fill=\"none\">\n";
        for (auto& pl : tiles) {
            Point m = center(pl.cell);
            for (int k = 0; k < 6; ++k) {
                auto sg = r2_contact(t, pl.o, k);
                if (!sg) continue;
                Pt e = edge_point(m, k, *sg == Sign::Plus ? 0.35 : 0.65);
                os << "<polyline points=\"" << cv.xy({m.x, m.y}) << ' ' << cv.xy(e) << "\"/>\n";
            }
        }
        os << "</g>\n";
    }
    if (opt.layers & kR1Curves) {
        os << "<g stroke=\"black\" stroke-width=\"" << Canvas::num(s * 0.08) << "\" fill=\"none\">\n";
        for (auto& pl : tiles) {
            Point m = center(pl.cell);
            for (int k = 0; k < 6; ++k) {
                int j = curve_partner(t, pl.o, k);
                if (j < k) continue;
                Pt a = edge_point(m, k, r1_signature(t, pl.o, k) == Crossing::NearStart ? 0.3 : 0.7);
                Pt b = edge_point(m, j, r1_signature(t, pl.o, j) == Crossing::NearStart ? 0.3 : 0.7);
                if (j - k == 3) {
                    os << "<polyline points=\"" << cv.xy(a) << ' ' << cv.xy(b) << "\"/>\n";
                } else {
                    // arcs bend around the vertex the two edges share
                    Pt v = vertex(m, j - k == 1 ? 60.0 * k + 30 : 60.0 * k - 30);
                    os << "<path d=\"M " << cv.xy(a) << " Q " << cv.xy(v) << ' ' << cv.xy(b) << "\"/>\n";
                }
            }
        }
        os << "</g>\n";
    }
    if (opt.layers & kR2Graph) {
        auto g = r2_graph(p);
        os << "<g stroke-width=\"" << Canvas::num(s * 0.1) << "\" stroke-linecap=\"round\">\n";
        for (auto [a, b] : g.edges) {
            Point pa = center(g.nodes[a]), pb = center(g.nodes[b]);
            os << "<line x1=\"" << cv.x(pa.x) << "\" y1=\"" << cv.y(pa.y) << "\" x2=\"" << cv.x(pb.x) << "\" y2=\""
               << cv.y(pb.y) << "\" stroke=\"" << kPalette[g.component[a] % 8] << "\"/>\n";
        }
        os << "</g>\n";
    }
    if ((opt.layers & kTriangleLabels) && r1_consistent(p)) {
        os << "<g font-family=\"sans-serif\" font-size=\"" << Canvas::num(s * 0.6)
           << "\" text-anchor=\"middle\" fill=\"#0b3d91\">\n";
        for (auto& f : trace_r1(p)) {
            if (f.kind != FeatureKind::Triangle || f.corner_cells.empty()) continue;
            double x = 0, y = 0;
            for (auto c : f.corner_cells) {
                x += center(c).x;
                y += center(c).y;
            }
            x /= static_cast<double>(f.corner_cells.size());
            y /= static_cast<double>(f.corner_cells.size());
            os << "<text x=\"" << cv.x(x) << "\" y=\"" << cv.y(y) << "\">" << f.length << "</text>\n";
        }
        os << "</g>\n";
    }
    if (opt.layers & kSpiralAnchors) {
        std::vector<HexCoord> anchors;
        if (opt.anchors) {
            anchors = *opt.anchors;
        } else {
            for (int n = 0; n <= 20 && p.contains(spiral_anchor(n)); ++n) anchors.push_back(spiral_anchor(n));
        }
        os << "<g fill=\"black\">\n";
        for (auto c : anchors) {
            Point m = center(c);
            os << "<circle cx=\"" << cv.x(m.x) << "\" cy=\"" << cv.y(m.y) << "\" r=\"" << Canvas::num(s * 0.18)
               << "\"/>\n";
        }
        os << "</g>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace hexmono
