#include "hexmono/io.hpp"

#include <fstream>
#include <sstream>

#include "hexmono/analysis.hpp"
#include "hexmono/constructions.hpp"

namespace hexmono {

PatchVerdicts compute_verdicts(const Patch& p) {
    PatchVerdicts v;
    v.edge_connected = is_edge_connected(p);
    v.r1_violations = static_cast<long>(r1_violations(p).size());
    v.r1_ok = v.r1_violations == 0;
    auto g = r2_graph(p);
    v.r2_components = g.components;
    v.r2_edges = static_cast<long>(g.edges.size());
    v.r2_tree = g.components == 1 && g.is_forest;
    v.constructible = v.r1_ok && g.components <= 1;
    return v;
}

namespace {

Meta verdict_lines(const PatchVerdicts& v) {
    return {{"verdict.edge_connected", std::to_string(v.edge_connected)},
            {"verdict.r1_ok", std::to_string(v.r1_ok)},
            {"verdict.r1_violations", std::to_string(v.r1_violations)},
            {"verdict.r2_components", std::to_string(v.r2_components)},
            {"verdict.r2_edges", std::to_string(v.r2_edges)},
            {"verdict.r2_tree", std::to_string(v.r2_tree)},
            {"verdict.constructible", std::to_string(v.constructible)}};
}

bool is_verdict_key(const std::string& k) { return k.rfind("verdict.", 0) == 0; }

}  // namespace

std::string write_patch(const Patch& p, const Meta& meta) {
    std::ostringstream os;
    os << "hexmono v1\n";
    for (auto& [k, v] : meta)
        if (!is_verdict_key(k)) os << "# " << k << ' ' << v << '\n';
    for (auto& [k, v] : verdict_lines(compute_verdicts(p))) os << "# " << k << ' ' << v << '\n';
    for (auto& pl : p.sorted()) os << pl.cell.q << ' ' << pl.cell.r << ' ' << pl.o << '\n';
    return os.str();
}

PatchFile read_patch(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int no = 0;
    PatchFile f;
    Meta stored;
    bool header = false;
    while (std::getline(is, line)) {
        ++no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!header) {
            if (line != "hexmono v1") throw PatchFormatError(no, "expected header 'hexmono v1'");
            header = true;
            continue;
        }
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        if (line[0] == '#') {
            std::istringstream ls(line.substr(1));
            std::string key, value;
            ls >> key;
            std::getline(ls >> std::ws, value);
            if (key.empty()) continue;
            (is_verdict_key(key) ? stored : f.meta).emplace_back(key, value);
            continue;
        }
        std::istringstream ls(line);
        long q, r, o;
        std::string extra;
        if (!(ls >> q >> r >> o) || (ls >> extra)) throw PatchFormatError(no, "expected 'q r o'");
        if (o < 0 || o > 5) throw PatchFormatError(no, "orientation out of range");
        const long lim = 1L << 28;
        if (q < -lim || q > lim || r < -lim || r > lim) throw PatchFormatError(no, "coordinate out of range");
        HexCoord c{static_cast<int>(q), static_cast<int>(r)};
        if (f.patch.contains(c)) throw PatchFormatError(no, "cell listed twice");
        f.patch.put(c, static_cast<int>(o));
    }
    if (!header) throw PatchFormatError(1, "empty input");
    f.verdicts = compute_verdicts(f.patch);
    if (!stored.empty()) f.stale_verdicts = stored != verdict_lines(f.verdicts);
    return f;
}

PatchFile load_patch_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return read_patch(ss.str());
}

void save_patch_file(const std::string& path, const Patch& p, const Meta& meta) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << write_patch(p, meta);
    if (!out) throw std::runtime_error("write failed: " + path);
}

Meta construction_meta(const Construction& c) {
    Meta m{{"construction", kind_name(c.kind)}};
    for (auto& [k, v] : c.params) m.emplace_back("param." + k, std::to_string(v));
    if (c.window) {
        std::ostringstream w;
        w << c.window->centre.q << ' ' << c.window->centre.r << ' ' << c.window->radius;
        m.emplace_back("window", w.str());
    }
    for (auto& w : c.warnings) m.emplace_back("warning", w);
    return m;
}

}  // namespace hexmono
