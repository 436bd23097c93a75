#include "hexmono/report.hpp"

#include <map>

namespace hexmono {

using nlohmann::json;

json to_json(HexCoord c) { return json::array({c.q, c.r}); }

json to_json(const LegalityReport& r) {
    json edges = json::array();
    for (auto& e : r.edges)
        edges.push_back({{"dir", e.dir}, {"neighbor", to_json(e.neighbor)}, {"r1_ok", e.r1_ok},
                         {"r2_connected", e.r2_connected}});
    return {{"verdict", verdict_name(r.verdict)},
            {"edges", edges},
            {"failing_r1_dirs", r.failing_r1_dirs()},
            {"r2_connections", r.r2_connections},
            {"connectivity_ok", r.connectivity_ok}};
}

json analysis_report(const Patch& p, const ReportOptions& opt) {
    json rep;
    rep["tiles"] = p.size();
    rep["edge_connected"] = is_edge_connected(p);
    auto bad = r1_violations(p);
    rep["r1_violations"] = bad.size();
    json bad_list = json::array();
    for (std::size_t i = 0; i < bad.size() && i < opt.max_features; ++i)
        bad_list.push_back({{"cell", to_json(bad[i].cell)}, {"dir", bad[i].dir}});
    rep["r1_violation_edges"] = bad_list;

    auto g = r2_graph(p);
    std::vector<long> sizes;
    for (auto& m : g.members()) sizes.push_back(static_cast<long>(m.size()));
    rep["r2"] = {{"components", g.components}, {"edges", g.edges.size()},  {"is_forest", g.is_forest},
                 {"tree", g.components == 1 && g.is_forest}, {"cycle_rank", g.cycle_rank},
                 {"component_sizes", sizes}};
    if (!bad.empty()) {
        rep["features"] = nullptr;
        rep["class"] = nullptr;
        rep["period"] = nullptr;
        return rep;
    }

    auto features = trace_r1(p);
    std::map<std::string, long> by_kind;
    std::map<int, long> closed_lengths, interior_lengths;
    json list = json::array();
    for (auto& f : features) {
        ++by_kind[feature_kind_name(f.kind)];
        if (f.kind == FeatureKind::Triangle) {
            ++closed_lengths[f.length];
            if (!f.touches_boundary) ++interior_lengths[f.length];
        }
        if (list.size() < opt.max_features) {
            json e{{"kind", feature_kind_name(f.kind)}, {"tiles", f.segs.size()},
                   {"start", to_json(f.segs.front().cell)}, {"longest_straight", f.longest_straight},
                   {"touches_boundary", f.touches_boundary}};
            if (f.kind == FeatureKind::Triangle) {
                e["length"] = f.length;
                json cs = json::array();
                for (auto c : f.corner_cells) cs.push_back(to_json(c));
                e["corners"] = cs;
            }
            list.push_back(e);
        }
    }
    auto lengths_json = [](const std::map<int, long>& m) {
        json o = json::object();
        for (auto& [k, v] : m) o[std::to_string(k)] = v;
        return o;
    };
    rep["features"] = {{"count", features.size()},          {"by_kind", by_kind},
                       {"triangle_lengths", lengths_json(closed_lengths)},
                       {"interior_triangle_lengths", lengths_json(interior_lengths)},
                       {"list", list},                       {"truncated", features.size() > list.size()}};

    json cycles = json::array();
    for (auto& cf : detect_r2_cycles(p, features))
        cycles.push_back({{"kind", cf.kind == CycleKind::Cycle ? "R2_CYCLE" : "R2_ANTICYCLE"},
                          {"centre", {to_json(cf.centre[0]), to_json(cf.centre[1]), to_json(cf.centre[2])}},
                          {"triangle_length", cf.triangle_length},
                          {"n", cf.n}});
    rep["r2_cycles"] = cycles;

    Window w = opt.window ? *opt.window : inscribed_window(p);
    auto cls = classify(p, features, w);
    json c0{{"ok", cls.c0.ok}};
    if (!cls.c0.ok) {
        c0["cell"] = to_json(cls.c0.cell);
        c0["lengths"] = {cls.c0.lengths.first, cls.c0.lengths.second};
    }
    rep["class"] = {{"verdict", class_verdict_name(cls.verdict)}, {"c0", c0},
                    {"long_line", cls.long_line},                 {"line_spans_window", cls.line_spans}};
    rep["window"] = {{"centre", to_json(w.centre)}, {"radius", w.radius}};

    auto pr = period_check(p, opt.period_bound, w);
    json periods = json::array();
    for (auto v : pr.periods) periods.push_back(to_json(v));
    rep["period"] = {{"bound", opt.period_bound}, {"tested", pr.tested.size()}, {"periods", periods},
                     {"unreliable", pr.unreliable}};
    return rep;
}

bool report_violates(const json& report) {
    if (!report.value("edge_connected", true) && report.value("tiles", 0) > 0) return true;
    if (report.value("r1_violations", 0) > 0) return true;
    return report.at("r2").value("components", 0) > 1;
}

}  // namespace hexmono
